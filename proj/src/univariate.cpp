#include "pade/univariate.hpp"

#include <algorithm>
#include <string>

#include "pade/errors.hpp"

namespace pade {

namespace {

template <Field T>
T coeff_at(const std::vector<T>& c, int i) {
    if (i < 0) return T(0);
    if (static_cast<std::size_t>(i) >= c.size()) {
        throw InputError("order-insufficient series: coefficient c_{" + std::to_string(i) +
                         ",0} is required but only " + std::to_string(c.size()) + " were given");
    }
    return c[static_cast<std::size_t>(i)];
}

template <Field T>
void require_len(const std::vector<T>& c, int n) {
    if (static_cast<int>(c.size()) < 2 * n + 1) {
        throw InputError("order-insufficient series: [" + std::to_string(n) + "/" + std::to_string(n) +
                         "] requires orders (N, M) >= (" + std::to_string(2 * n) + ", 0), got (" +
                         std::to_string(static_cast<int>(c.size()) - 1) + ", 0)");
    }
}

// lvl.E - lvl.B * sum_{i=lo}^{hi} c_i x^i, as a polynomial. The seed level
// contributes nothing here; its -x^{-1} is handled by the caller.
template <Field T>
Poly<T> shifted_defect(const UniPade<T>& lvl, const std::vector<T>& c, int lo, int hi) {
    if (lvl.is_seed()) return Poly<T>();
    Poly<T> out = lvl.error_poly();
    for (int i = lo; i <= hi; ++i) poly_axpy_shifted(out, lvl.B, i, -coeff_at(c, i));
    return out;
}

template <Field T>
UniPade<T> assemble_level(const JacobiTrace<T>& tr, int n, const T& alpha, const T& beta) {
    const UniPade<T>& p1 = tr.current;
    const UniPade<T>& p2 = tr.previous;

    UniPade<T> out;
    out.n = n;
    out.A = p1.A;
    out.B = p1.B;
    poly_axpy_shifted(out.A, p1.A, 1, beta);
    poly_axpy_shifted(out.B, p1.B, 1, beta);
    if (p2.is_seed()) {
        // alpha x^2 * (-x^{-1})
        out.A.at(1) -= alpha;
    } else {
        poly_axpy_shifted(out.A, p2.A, 2, alpha);
        poly_axpy_shifted(out.B, p2.B, 2, alpha);
    }

    // E_n = (1 + beta x) G + alpha x^2 H
    const Poly<T> g = shifted_defect(p1, tr.c, 2 * n - 1, 2 * n);
    Poly<T> e = g;
    poly_axpy_shifted(e, g, 1, beta);
    if (!p2.is_seed()) {
        const Poly<T> h = shifted_defect(p2, tr.c, 2 * n - 3, 2 * n);
        poly_axpy_shifted(e, h, 2, alpha);
    }
    out.e.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) out.e.push_back(e.coeff(2 * n + k));
    out.A.trim();
    out.B.trim();
    return out;
}

template <Field T>
const UniPade<T>& push_level(JacobiTrace<T>& tr, UniPade<T> next, const T& alpha, const T& beta) {
    tr.alpha.push_back(alpha);
    tr.beta.push_back(beta);
    tr.previous = std::move(tr.current);
    tr.current = std::move(next);
    return tr.current;
}

}  // namespace

template <Field T>
JacobiTrace<T> jacobi_init(std::vector<T> c) {
    if (c.size() < 2 || is_zero(c[1])) {
        throw DegenerateError("non-normal series: c_{1,0}=0; Jacobi recursion undefined", 1);
    }
    JacobiTrace<T> tr;
    tr.c = std::move(c);
    tr.alpha.assign(1, T(0));
    tr.beta.assign(1, T(0));
    tr.previous = UniPade<T>::seed();
    tr.current = UniPade<T>::zeroth();
    return tr;
}

template <Field T>
const UniPade<T>& jacobi_step_with(JacobiTrace<T>& tr, const T& alpha_n, const T& beta_n) {
    const int n = tr.level() + 1;
    require_len(tr.c, n);
    return push_level(tr, assemble_level(tr, n, alpha_n, beta_n), alpha_n, beta_n);
}

template <Field T>
const UniPade<T>& jacobi_step(JacobiTrace<T>& tr) {
    const int n = tr.level() + 1;
    require_len(tr.c, n);
    const std::vector<T>& c = tr.c;
    T alpha;
    T beta;
    if (n == 1) {
        alpha = -c[1];
        beta = -c[2] / c[1];
    } else {
        const UniPade<T>& p1 = tr.current;   // n-1
        const UniPade<T>& p2 = tr.previous;  // n-2
        const T num_a = p1.error_coeff(2 * n - 1) - p1.B.coeff(0) * c[static_cast<std::size_t>(2 * n - 1)];
        const T den_a = p2.error_coeff(2 * n - 3) - p2.B.coeff(0) * c[static_cast<std::size_t>(2 * n - 3)];
        if (is_zero(den_a) || is_zero(num_a)) {
            throw DegenerateError("degenerate Padé table at level n=" + std::to_string(n), n, 0, 0);
        }
        alpha = -num_a / den_a;
        const T bracket = p2.B.coeff(0) * c[static_cast<std::size_t>(2 * n - 2)] +
                          p2.B.coeff(1) * c[static_cast<std::size_t>(2 * n - 3)] - p2.error_coeff(2 * n - 2);
        beta = (p1.B.coeff(1) * c[static_cast<std::size_t>(2 * n - 1)] +
                p1.B.coeff(0) * c[static_cast<std::size_t>(2 * n)] - p1.error_coeff(2 * n) + alpha * bracket) /
               num_a;
    }
    return push_level(tr, assemble_level(tr, n, alpha, beta), alpha, beta);
}

template <Field T>
UniPade<T> jacobi_pade(const std::vector<T>& c, int n) {
    if (n == 0) return UniPade<T>::zeroth();
    require_len(c, n);
    JacobiTrace<T> tr = jacobi_init(c);
    while (tr.level() < n) jacobi_step(tr);
    return tr.current;
}

template <Field T>
UniPade<T> oracle_pade(const std::vector<T>& c, int n, SingularPolicy policy) {
    require_len(c, n);
    std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
    b[0] = T(1);
    if (n > 0) {
        DenseMatrix<T> h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        std::vector<T> rhs(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            const int j = n + 1 + r;
            for (int i = 1; i <= n; ++i) h(static_cast<std::size_t>(r), static_cast<std::size_t>(i - 1)) = c[static_cast<std::size_t>(j - i)];
            rhs[static_cast<std::size_t>(r)] = -c[static_cast<std::size_t>(j)];
        }
        auto sol = solve_dense(std::move(h), std::move(rhs), policy);
        if (!sol) throw DegenerateError("non-normal table: singular Hankel system at n=" + std::to_string(n), n);
        for (int i = 1; i <= n; ++i) b[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i - 1)];
    }
    UniPade<T> out;
    out.n = n;
    out.B = Poly<T>(b);
    std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i) a[static_cast<std::size_t>(j)] += b[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(j - i)];
    out.A = Poly<T>(a);
    for (int k = 1; k <= n; ++k) {
        T acc(0);
        for (int i = k; i <= n; ++i) acc -= b[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(2 * n + k - i)];
        out.e.push_back(acc);
    }
    out.A.trim();
    out.B.trim();
    return out;
}

template <Field T>
Poly<T> defect(const Poly<T>& A, const Poly<T>& B, const std::vector<T>& c, int upto, int max_deg) {
    std::vector<T> cc(c.begin(), c.begin() + std::min<std::size_t>(c.size(), static_cast<std::size_t>(upto) + 1));
    return A - poly_mul_truncated(B, Poly<T>(cc), max_deg);
}

#define PADE_INSTANTIATE(T)                                                                           \
    template JacobiTrace<T> jacobi_init<T>(std::vector<T>);                                          \
    template const UniPade<T>& jacobi_step<T>(JacobiTrace<T>&);                                      \
    template const UniPade<T>& jacobi_step_with<T>(JacobiTrace<T>&, const T&, const T&);             \
    template UniPade<T> jacobi_pade<T>(const std::vector<T>&, int);                                  \
    template UniPade<T> oracle_pade<T>(const std::vector<T>&, int, SingularPolicy);                  \
    template Poly<T> defect<T>(const Poly<T>&, const Poly<T>&, const std::vector<T>&, int, int);

PADE_INSTANTIATE(double)
PADE_INSTANTIATE(Rational)
#undef PADE_INSTANTIATE

}  // namespace pade
