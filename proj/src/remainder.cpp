#include "pade/remainder.hpp"

#include <string>

#include "pade/errors.hpp"

namespace pade {

namespace {

template <Field T>
T c_at(const std::vector<T>& c, int i) {
    if (i < 0) return T(0);
    if (static_cast<std::size_t>(i) >= c.size()) {
        throw InputError("order-insufficient series: remainder needs c_{" + std::to_string(i) + ",0}");
    }
    return c[static_cast<std::size_t>(i)];
}

}  // namespace

template <Field T>
RemainderComponents<T> remainder_components(int n, const std::vector<T>& c, const UniPade<T>& lvl1,
                                            const UniPade<T>& lvl2,
                                            const std::type_identity_t<RemainderComponents<T>>* previous) {
    RemainderComponents<T> out;
    out.n = n;
    if (n < 1) throw InputError("remainder components need n >= 1");

    const T den = c_at(c, 2 * n - 1) - lvl1.error_coeff(2 * n - 1);
    if (is_zero(den)) {
        throw DegenerateError("degenerate remainder operator at level n=" + std::to_string(n), n);
    }

    if (n == 1) {
        // E_{-1,0} = -x^{-1} fixes F^{(0)}_0 = -1.
        out.F_prev = T(-1);
        out.F_odd = T(0);
        out.F_even = T(-1) / c_at(c, 1);
        out.tau_odd = {T(0)};
        out.tau_even = {-c_at(c, 2) / c_at(c, 1)};
        return out;
    }
    if (previous == nullptr || previous->n != n - 1) {
        throw InputError("remainder components at level n need the components of level n-1");
    }

    out.F_prev = previous->F_even;
    out.F_odd = -previous->tau_even[0] / den;
    out.F_even = T(-1) / den;

    const T c_2n = c_at(c, 2 * n);
    const T c_2n1 = c_at(c, 2 * n - 1);
    const T c_2n2 = c_at(c, 2 * n - 2);
    const T c_2n3 = c_at(c, 2 * n - 3);
    out.tau_odd.reserve(static_cast<std::size_t>(n));
    out.tau_even.reserve(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const T first = lvl1.B.coeff(k - 1) * c_2n + lvl1.B.coeff(k) * c_2n1 - lvl1.error_coeff(2 * n + k - 1);
        const T second = lvl2.B.coeff(k - 2) * c_2n + lvl2.B.coeff(k - 1) * c_2n1 + lvl2.B.coeff(k) * c_2n2 +
                         lvl2.B.coeff(k + 1) * c_2n3 - lvl2.error_coeff(2 * n + k - 2);
        out.tau_odd.push_back(out.F_odd * first + out.F_prev * second);
        out.tau_even.push_back(out.F_even * first);
    }
    return out;
}

template <Field T>
RemainderCorrection<T> apply_remainder(const RemainderComponents<T>& comp, const T& sigma_odd,
                                       const T& sigma_even, const UniPade<T>& lvl1, const UniPade<T>& lvl2) {
    RemainderCorrection<T> out;
    out.b_star = comp.F_odd * sigma_odd + comp.F_even * sigma_even;
    out.b_star_prev = comp.F_prev * sigma_odd;
    poly_axpy_shifted(out.A, lvl1.A, 1, out.b_star);
    poly_axpy_shifted(out.B, lvl1.B, 1, out.b_star);
    if (lvl2.is_seed()) {
        out.A.at(1) -= out.b_star_prev;
    } else {
        poly_axpy_shifted(out.A, lvl2.A, 2, out.b_star_prev);
        poly_axpy_shifted(out.B, lvl2.B, 2, out.b_star_prev);
    }
    out.tau.reserve(comp.tau_odd.size());
    for (std::size_t k = 0; k < comp.tau_odd.size(); ++k) {
        out.tau.push_back(comp.tau_odd[k] * sigma_odd + comp.tau_even[k] * sigma_even);
    }
    return out;
}

template RemainderComponents<double> remainder_components<double>(int, const std::vector<double>&,
                                                                  const UniPade<double>&, const UniPade<double>&,
                                                                  const RemainderComponents<double>*);
template RemainderComponents<Rational> remainder_components<Rational>(int, const std::vector<Rational>&,
                                                                      const UniPade<Rational>&,
                                                                      const UniPade<Rational>&,
                                                                      const RemainderComponents<Rational>*);
template RemainderCorrection<double> apply_remainder<double>(const RemainderComponents<double>&, const double&,
                                                             const double&, const UniPade<double>&,
                                                             const UniPade<double>&);
template RemainderCorrection<Rational> apply_remainder<Rational>(const RemainderComponents<Rational>&,
                                                                 const Rational&, const Rational&,
                                                                 const UniPade<Rational>&,
                                                                 const UniPade<Rational>&);

}  // namespace pade
