#include "pade/bivariate.hpp"

#include <string>

#include "pade/errors.hpp"

namespace pade {

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

template <Field T>
void require_zero_origin(const BivSeries<T>& series) {
    if (!is_zero(series(0, 0))) throw InputError("invalid series: c_{0,0} must be 0");
}

template <Field T>
std::vector<T> y_axis(const BivSeries<T>& series, int m) {
    if (series.y_order() < 2 * m) {
        throw InputError("order-insufficient series: seeds of order m=" + std::to_string(m) +
                         " require c[0][j] for j <= " + std::to_string(2 * m));
    }
    std::vector<T> y;
    for (int j = 0; j <= 2 * m; ++j) y.push_back(series(0, j));
    return y;
}

template <Field T>
Seeds<T> seeds_from(const UniPade<T>& u, int m) {
    return {u.A.coeffs_padded(static_cast<std::size_t>(m) + 1), u.B.coeffs_padded(static_cast<std::size_t>(m) + 1)};
}

template <Field T>
BivPade<T> to_right(BivPade<T> left_of_transpose, int n, int m) {
    left_of_transpose.side = Side::right;
    left_of_transpose.n = n;
    left_of_transpose.m = m;
    return left_of_transpose;
}

}  // namespace

template <Field T>
std::vector<std::vector<T>> BivPade<T>::numerator_coeffs() const {
    std::vector<std::vector<T>> out(static_cast<std::size_t>(n) + 1,
                                    std::vector<T>(static_cast<std::size_t>(m) + 1, T(0)));
    for (std::size_t p = 0; p < A.size(); ++p) {
        for (std::size_t i = 0; i < A[p].size(); ++i) {
            if (side == Side::left)
                out[i][p] = A[p].coeffs()[i];
            else
                out[p][i] = A[p].coeffs()[i];
        }
    }
    return out;
}

template <Field T>
std::vector<std::vector<T>> BivPade<T>::denominator_coeffs() const {
    std::vector<std::vector<T>> out(static_cast<std::size_t>(n) + 1,
                                    std::vector<T>(static_cast<std::size_t>(m) + 1, T(0)));
    for (std::size_t p = 0; p < B.size(); ++p) {
        for (std::size_t i = 0; i < B[p].size(); ++i) {
            if (side == Side::left)
                out[i][p] = B[p].coeffs()[i];
            else
                out[p][i] = B[p].coeffs()[i];
        }
    }
    return out;
}

template <Field T>
Seeds<T> compute_seeds(const BivSeries<T>& series, int m) {
    if (m == 0) return {{T(0)}, {T(1)}};
    const std::vector<T> y = y_axis(series, m);
    try {
        return seeds_from(jacobi_pade(y, m), m);
    } catch (const DegenerateError& err) {
        throw DegenerateError("non-normal y-axis series: seeds of order m=" + std::to_string(m) +
                                  " undefined (" + err.what() + ")",
                              0, m, 0);
    }
}

template <Field T>
Seeds<T> oracle_seeds(const BivSeries<T>& series, int m, SingularPolicy policy) {
    if (m == 0) return {{T(0)}, {T(1)}};
    return seeds_from(oracle_pade(y_axis(series, m), m, policy), m);
}

template <Field T>
std::pair<T, T> check_params(const std::pair<T, T>& sigma, const RemainderComponents<T>& comp) {
    return {comp.F_odd * sigma.first + comp.F_even * sigma.second, comp.F_prev * sigma.first};
}

// ---------------------------------------------------------------------------
// LeftRecursion

template <Field T>
LeftRecursion<T>::LeftRecursion(const BivSeries<T>& series, int m, Seeds<T> seeds)
    : series_(series), m_(m), seeds_(std::move(seeds)) {
    if (static_cast<int>(seeds_.b0.size()) < m + 1) throw InputError("seed vector shorter than m + 1");
    if (!(seeds_.b0[0] == T(1))) throw InputError("seed b0[0] must be 1");
    require_zero_origin(series_);

    const std::size_t levels = static_cast<std::size_t>(m) + 1;
    prev_.assign(levels, UniPade<T>::seed());
    cur_.resize(levels);
    for (int p = 0; p <= m; ++p) {
        UniPade<T>& lv = cur_[static_cast<std::size_t>(p)];
        lv.n = 0;
        T a(0);
        for (int s = 0; s < p; ++s) a += seeds_.b0[static_cast<std::size_t>(s)] * c(0, p - s);
        lv.A = Poly<T>{a};
        lv.B = Poly<T>{seeds_.b0[static_cast<std::size_t>(p)]};
    }
    const auto empty_row = std::vector<T>(levels, T(0));
    params_.check_beta.push_back(empty_row);
    params_.check_alpha.push_back(empty_row);
    params_.sigma_odd.push_back(empty_row);
    params_.sigma_even.push_back(empty_row);
}

template <Field T>
T LeftRecursion<T>::b_at(const std::vector<UniPade<T>>& lvl, int i, int p) const {
    const UniPade<T>& u = lvl[static_cast<std::size_t>(p)];
    if (u.is_seed()) return T(0);
    return u.B.coeff(i);
}

template <Field T>
T LeftRecursion<T>::e_at(const std::vector<UniPade<T>>& lvl, int p, int j) const {
    const UniPade<T>& u = lvl[static_cast<std::size_t>(p)];
    if (u.is_seed()) return (p == 0 && j == -1) ? T(-1) : T(0);
    return u.error_coeff(j);
}

// Coefficient of x^j in E_{k-1,p} - sum_s B_{k-1,s}(c_{2k-1,p-s}x^{2k-1} + c_{2k,p-s}x^{2k}).
template <Field T>
T LeftRecursion<T>::G(int k, int p, int j, const std::vector<UniPade<T>>& l1) const {
    T acc = e_at(l1, p, j);
    for (int s = 0; s <= p; ++s) {
        acc -= b_at(l1, j - 2 * k + 1, s) * c(2 * k - 1, p - s) + b_at(l1, j - 2 * k, s) * c(2 * k, p - s);
    }
    return acc;
}

// Coefficient of x^j in E_{k-2,p} - sum_s B_{k-2,s}(c_{2k-3,p-s}x^{2k-3} + ... + c_{2k,p-s}x^{2k}).
template <Field T>
T LeftRecursion<T>::H(int k, int p, int j, const std::vector<UniPade<T>>& l2) const {
    T acc = e_at(l2, p, j);
    for (int s = 0; s <= p; ++s) {
        acc -= b_at(l2, j - 2 * k + 3, s) * c(2 * k - 3, p - s) + b_at(l2, j - 2 * k + 2, s) * c(2 * k - 2, p - s) +
               b_at(l2, j - 2 * k + 1, s) * c(2 * k - 1, p - s) + b_at(l2, j - 2 * k, s) * c(2 * k, p - s);
    }
    return acc;
}

template <Field T>
typename LeftRecursion<T>::SigmaParts LeftRecursion<T>::sigma_parts(int k, int p, const std::vector<UniPade<T>>& l1,
                                                                    const std::vector<UniPade<T>>& l2) const {
    SigmaParts out{T(0), T(0), T(0), T(0)};
    if (p == 0) return out;
    const auto& u = params_.check_beta[static_cast<std::size_t>(k)];
    const auto& v = params_.check_alpha[static_cast<std::size_t>(k)];
    out.hat_odd = -(G(k, p, 2 * k - 1, l1) + u[0] * G(k, p, 2 * k - 2, l1) + v[0] * H(k, p, 2 * k - 3, l2));
    out.hat_even = -(G(k, p, 2 * k, l1) + u[0] * G(k, p, 2 * k - 1, l1) + v[0] * H(k, p, 2 * k - 2, l2));
    for (int q = 1; q < p; ++q) {
        const auto qi = static_cast<std::size_t>(q);
        out.check_odd -= u[qi] * G(k, p - q, 2 * k - 2, l1) + v[qi] * H(k, p - q, 2 * k - 3, l2);
        out.check_even -= u[qi] * G(k, p - q, 2 * k - 1, l1) + v[qi] * H(k, p - q, 2 * k - 2, l2);
    }
    return out;
}

template <Field T>
typename LeftRecursion<T>::SigmaParts LeftRecursion<T>::sigma_for_level(int p) const {
    if (k_ < 1) throw InputError("sigma_for_level needs at least one completed step");
    return sigma_parts(k_, p, prev_, prev2_);
}

template <Field T>
void LeftRecursion<T>::step() {
    const int k = k_ + 1;
    if (k == 1) trace_ = jacobi_init(series_.column(0));
    const RemainderComponents<T>* previous = comps_.empty() ? nullptr : &comps_.back();
    try {
        comps_.push_back(remainder_components(k, trace_.c, trace_.current, trace_.previous, previous));
        jacobi_step(trace_);
    } catch (const DegenerateError& err) {
        throw DegenerateError(std::string(err.what()) + " (bivariate step n=" + std::to_string(k) + ", m=" +
                                  std::to_string(m_) + ", p=0)",
                              k, m_, 0);
    }
    const RemainderComponents<T>& comp = comps_.back();

    const std::size_t levels = static_cast<std::size_t>(m_) + 1;
    params_.check_beta.push_back(std::vector<T>(levels, T(0)));
    params_.check_alpha.push_back(std::vector<T>(levels, T(0)));
    params_.sigma_odd.push_back(std::vector<T>(levels, T(0)));
    params_.sigma_even.push_back(std::vector<T>(levels, T(0)));
    auto& u = params_.check_beta.back();
    auto& v = params_.check_alpha.back();
    u[0] = trace_.beta.back();
    v[0] = trace_.alpha.back();

    std::vector<UniPade<T>> next(levels);
    next[0] = trace_.current;
    const std::vector<UniPade<T>>& l1 = cur_;
    const std::vector<UniPade<T>>& l2 = prev_;
    for (int p = 1; p <= m_; ++p) {
        const auto pi = static_cast<std::size_t>(p);
        const SigmaParts sp = sigma_parts(k, p, l1, l2);
        const T s_odd = sp.hat_odd + sp.check_odd;
        const T s_even = sp.hat_even + sp.check_even;
        params_.sigma_odd.back()[pi] = s_odd;
        params_.sigma_even.back()[pi] = s_even;
        const auto [beta_check, alpha_check] = check_params(std::pair<T, T>{s_odd, s_even}, comp);
        u[pi] = beta_check;
        v[pi] = alpha_check;

        UniPade<T>& out = next[pi];
        out.n = k;
        out.A = l1[pi].A;
        out.B = l1[pi].B;
        for (int q = 0; q <= p; ++q) {
            const auto qi = static_cast<std::size_t>(q);
            const auto src = static_cast<std::size_t>(p - q);
            poly_axpy_shifted(out.A, l1[src].A, 1, u[qi]);
            poly_axpy_shifted(out.B, l1[src].B, 1, u[qi]);
            if (l2[src].is_seed()) {
                if (src == 0) out.A.at(1) -= v[qi];
            } else {
                poly_axpy_shifted(out.A, l2[src].A, 2, v[qi]);
                poly_axpy_shifted(out.B, l2[src].B, 2, v[qi]);
            }
        }
        out.A.trim();
        out.B.trim();

        out.e.reserve(static_cast<std::size_t>(k));
        for (int j = 1; j <= k; ++j) {
            T acc = G(k, p, 2 * k + j, l1);
            for (int q = 0; q < p; ++q) {
                const auto qi = static_cast<std::size_t>(q);
                acc += u[qi] * G(k, p - q, 2 * k + j - 1, l1) + v[qi] * H(k, p - q, 2 * k + j - 2, l2);
            }
            const auto ji = static_cast<std::size_t>(j - 1);
            acc -= comp.tau_odd[ji] * s_odd + comp.tau_even[ji] * s_even;
            out.e.push_back(acc);
        }
    }
    prev2_ = std::move(prev_);
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    k_ = k;
}

// ---------------------------------------------------------------------------
// Drivers

template <Field T>
BivPade<T> left_pade_with_seeds(const BivSeries<T>& series, int n, int m, const Seeds<T>& seeds,
                                const Deadline* deadline) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m);
    LeftRecursion<T> rec(series, m, seeds);
    while (rec.level() < n) {
        check_deadline(deadline);
        rec.step();
    }
    BivPade<T> out;
    out.n = n;
    out.m = m;
    out.side = Side::left;
    out.seeds = rec.seeds();
    for (const UniPade<T>& lv : rec.current()) {
        out.A.push_back(lv.A);
        out.B.push_back(lv.B);
        out.e.push_back(lv.e);
    }
    out.params = rec.params();
    return out;
}

template <Field T>
BivPade<T> left_pade(const BivSeries<T>& series, int n, int m, const Deadline* deadline) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m);
    return left_pade_with_seeds(series, n, m, compute_seeds(series, m), deadline);
}

template <Field T>
BivPade<T> right_pade(const BivSeries<T>& series, int n, int m, const Deadline* deadline) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m, "right");
    return to_right(left_pade(transpose(series), m, n, deadline), n, m);
}

template <Field T>
BivPade<T> oracle_left_pade_with_seeds(const BivSeries<T>& series, int n, int m, const Seeds<T>& seeds,
                                       SingularPolicy policy) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m);
    const int top = 3 * n;
    BivPade<T> out;
    out.n = n;
    out.m = m;
    out.side = Side::left;
    out.seeds = seeds;
    for (int p = 0; p <= m; ++p) {
        // Known part: sum_{s<p} B_s C_{2n,p-s} plus the seed constant times C_{2n,0}.
        const T b0 = seeds.b0[static_cast<std::size_t>(p)];
        Poly<T> known;
        for (int s = 0; s < p; ++s) {
            known = known + poly_mul_truncated(out.B[static_cast<std::size_t>(s)], series.slice_x(2 * n, p - s), top);
        }
        std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
        b[0] = b0;
        if (n > 0) {
            DenseMatrix<T> h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            std::vector<T> rhs(static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r) {
                const int j = n + 1 + r;
                for (int i = 1; i <= n; ++i)
                    h(static_cast<std::size_t>(r), static_cast<std::size_t>(i - 1)) = series(j - i, 0);
                rhs[static_cast<std::size_t>(r)] = -(known.coeff(j) + b0 * series(j, 0));
            }
            auto sol = solve_dense(std::move(h), std::move(rhs), policy);
            if (!sol) {
                throw DegenerateError("non-normal bivariate table at level (n,p)=(" + std::to_string(n) + "," +
                                          std::to_string(p) + ") (m=" + std::to_string(m) + ")",
                                      n, m, p);
            }
            for (int i = 1; i <= n; ++i) b[static_cast<std::size_t>(i)] = (*sol)[static_cast<std::size_t>(i - 1)];
        }
        Poly<T> Bp(b);
        const Poly<T> full = known + poly_mul_truncated(Bp, series.slice_x(2 * n, 0), top);
        std::vector<T> a(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = full.coeff(i);
        std::vector<T> e;
        for (int k = 1; k <= n; ++k) e.push_back(-full.coeff(2 * n + k));
        Poly<T> Ap(a);
        Ap.trim();
        Bp.trim();
        out.A.push_back(std::move(Ap));
        out.B.push_back(std::move(Bp));
        out.e.push_back(std::move(e));
    }
    return out;
}

template <Field T>
BivPade<T> oracle_left_pade(const BivSeries<T>& series, int n, int m, SingularPolicy policy) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m);
    Seeds<T> seeds;
    try {
        seeds = oracle_seeds(series, m, policy);
    } catch (const DegenerateError& err) {
        throw DegenerateError("non-normal y-axis series: seeds of order m=" + std::to_string(m) + " undefined (" +
                                  err.what() + ")",
                              0, m, 0);
    }
    return oracle_left_pade_with_seeds(series, n, m, seeds, policy);
}

template <Field T>
BivPade<T> oracle_right_pade(const BivSeries<T>& series, int n, int m, SingularPolicy policy) {
    if (n < 0 || m < 0) throw InputError("orders must be non-negative");
    require_zero_origin(series);
    series.require_for_left(n, m, "right");
    return to_right(oracle_left_pade(transpose(series), m, n, policy), n, m);
}

template <Field T>
T evaluate(const BivPade<T>& pade, const T& x, const T& y) {
    const T& inner = pade.side == Side::left ? x : y;
    const T& outer = pade.side == Side::left ? y : x;
    T num(0);
    T den(0);
    T power(1);
    for (std::size_t p = 0; p < pade.A.size(); ++p) {
        num += poly_eval(pade.A[p], inner) * power;
        den += poly_eval(pade.B[p], inner) * power;
        power *= outer;
    }
    if (is_zero(den)) {
        throw Error("pole of the approximant at (x, y) = (" + to_string(x) + ", " + to_string(y) + ")");
    }
    return num / den;
}

template <Field T>
Poly<T> level_defect(const BivPade<T>& pade, const BivSeries<T>& series, int p, int max_deg) {
    const BivSeries<T> frame = pade.side == Side::left ? series : transpose(series);
    const int order = pade.side == Side::left ? pade.n : pade.m;
    Poly<T> acc = pade.A[static_cast<std::size_t>(p)];
    for (int s = 0; s <= p; ++s) {
        acc = acc - poly_mul_truncated(pade.B[static_cast<std::size_t>(s)], frame.slice_x(2 * order, p - s), max_deg);
    }
    std::vector<T> cut;
    for (int i = 0; i <= max_deg; ++i) cut.push_back(acc.coeff(i));
    return Poly<T>(std::move(cut));
}

template <Field T>
bool same_polynomials(const BivPade<T>& a, const BivPade<T>& b) {
    if (a.A.size() != b.A.size() || a.B.size() != b.B.size()) return false;
    for (std::size_t p = 0; p < a.A.size(); ++p) {
        if (!(a.A[p] == b.A[p]) || !(a.B[p] == b.B[p])) return false;
    }
    return true;
}

#define PADE_INSTANTIATE(T)                                                                                     \
    template struct BivPade<T>;                                                                                \
    template class LeftRecursion<T>;                                                                           \
    template Seeds<T> compute_seeds<T>(const BivSeries<T>&, int);                                              \
    template Seeds<T> oracle_seeds<T>(const BivSeries<T>&, int, SingularPolicy);                               \
    template std::pair<T, T> check_params<T>(const std::pair<T, T>&, const RemainderComponents<T>&);           \
    template BivPade<T> left_pade<T>(const BivSeries<T>&, int, int, const Deadline*);                          \
    template BivPade<T> left_pade_with_seeds<T>(const BivSeries<T>&, int, int, const Seeds<T>&,                \
                                                const Deadline*);                                              \
    template BivPade<T> right_pade<T>(const BivSeries<T>&, int, int, const Deadline*);                         \
    template BivPade<T> oracle_left_pade<T>(const BivSeries<T>&, int, int, SingularPolicy);                    \
    template BivPade<T> oracle_left_pade_with_seeds<T>(const BivSeries<T>&, int, int, const Seeds<T>&,         \
                                                       SingularPolicy);                                        \
    template BivPade<T> oracle_right_pade<T>(const BivSeries<T>&, int, int, SingularPolicy);                   \
    template T evaluate<T>(const BivPade<T>&, const T&, const T&);                                             \
    template Poly<T> level_defect<T>(const BivPade<T>&, const BivSeries<T>&, int, int);                        \
    template bool same_polynomials<T>(const BivPade<T>&, const BivPade<T>&);

PADE_INSTANTIATE(double)
PADE_INSTANTIATE(Rational)
#undef PADE_INSTANTIATE

}  // namespace pade
