#pragma once

// The singular Riccati problem
//
//   x w' - beta w + beta w^2 + alpha x = 0,   w(0) = 0 (w(1) = 0),
//
// for non-integer beta > 0. Its solution is w(x) = f(x, x^beta) with
// f(x, y) = sum c_{n,m} x^n y^m and c_{0,1} free. The module builds that
// series, specializes the Padé algorithms to it and estimates c_{0,1} from
// the (n, 1) approximants, against the closed-form Bessel solution.

#include <cmath>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pade/bivariate.hpp"
#include "pade/deadline.hpp"
#include "pade/scalar.hpp"
#include "pade/series.hpp"
#include "pade/special_functions.hpp"
#include "pade/univariate.hpp"

namespace pade {

template <Field T>
struct RiccatiProblem {
    T alpha;
    T beta;
};

/// Throws InputError unless alpha > 0 and beta > 0 is not an integer.
template <Field T>
void validate(const RiccatiProblem<T>& prob);

/// c_{n,m} for n <= N, m <= M with c_{0,1} = c01, from
///   (n + (m-1) beta) c_{n,m} = -alpha [n=1, m=0] - beta sum c_{i,j} c_{n-i,m-j}.
template <Field T>
BivSeries<T> generate_series(const RiccatiProblem<T>& prob, const T& c01, int N, int M);

/// Closed-form (alpha_n, beta_n) of f(x, 0), n >= 2.
template <Field T>
std::pair<T, T> explicit_jacobi_params(const RiccatiProblem<T>& prob, int n);

/// Closed-form (check_beta^{n,1}_0, check_alpha^{n,1}_0) of the left-(n, 1)
/// recursion, n >= 2. Both are linear in c01.
template <Field T>
std::pair<T, T> explicit_check_params(const RiccatiProblem<T>& prob, const T& c01, int n);

/// Coefficient ratios b^{(n)}_{k,0} / b^{(n)}_{k-1,0} and a^{(n)}_{k,0} / a^{(n)}_{k-1,0} (k >= 2).
template <Field T>
T ratio_p0(const RiccatiProblem<T>& prob, int n, int k);
template <Field T>
T ratio_q0(const RiccatiProblem<T>& prob, int n, int k);

/// Ratios of the y^1 coefficients of the right-(n, 1) denominator and numerator.
template <Field T>
T ratio_p1(const RiccatiProblem<T>& prob, int n, int k);
template <Field T>
T ratio_q1(const RiccatiProblem<T>& prob, int n, int k);

/// The three univariate routes to [n/n] of f(x, 0).
enum class UniAlgorithm {
    general,          ///< Jacobi recursion with alpha_n, beta_n read from E_{n-1}, E_{n-2}
    explicit_params,  ///< three-term recursion with the closed-form alpha_n, beta_n
    direct_ratios,    ///< coefficients of A_{n,0}, B_{n,0} by the ratios P0, Q0
};

const char* uni_algorithm_name(UniAlgorithm a);

/// [n/n] of f(x, 0). Only the general route fills `e`.
template <Field T>
UniPade<T> riccati_univariate(const RiccatiProblem<T>& prob, int n, UniAlgorithm algo);

template <Field T>
UniPade<T> direct_coeff_ratios(const RiccatiProblem<T>& prob, int n);

/// Left-(n, 1) from the closed-form parameters at every step.
template <Field T>
BivPade<T> refined_left_pade(const RiccatiProblem<T>& prob, const T& c01, int n);

/// Right-(n, 1) with the y^1 coefficients from the P1/Q1 ratio chain anchored
/// at b_{0,1} = a_{0,1} = c01. `uni` selects the route for the y^0 part.
template <Field T>
BivPade<T> right_induction_coeffs(const RiccatiProblem<T>& prob, const T& c01, int n,
                                  UniAlgorithm uni = UniAlgorithm::direct_ratios);

/// y^1 coefficients (b, a) of the right-(n, 1) denominator and numerator for
/// any series, through U(x) = -C_2(x)/C_1(x) with C_j(x) = sum_p c_{p,j} x^p:
///   b_k = sum_j u_{k-j} b^{(n)}_{j,0},
///   a_k = sum_q u_q a^{(n)}_{k-q,0} + sum_s b^{(n)}_{s,0} c_{k-s,1}.
/// Entries up to k_max are returned, so k > n gives the extension past the
/// approximant's degree.
template <Field T>
std::pair<std::vector<T>, std::vector<T>> right_level1_induction(const BivSeries<T>& series, int n, int k_max);

enum class Method { general, refined };

const char* method_name(Method m);

template <Field T>
struct C01Estimate {
    T value;
    Side variant = Side::left;
    int n = 0;
    std::optional<double> error_vs_exact;
};

/// (n, 1) approximant of the Riccati series at the given c01.
template <Field T>
BivPade<T> riccati_pade(const RiccatiProblem<T>& prob, const T& c01, int n, Side side, Method method,
                        const Deadline* deadline = nullptr);

/// Numerator parts N_0(1) and N_1(1) of an (n, 1) approximant, where N_j
/// multiplies y^j.
template <Field T>
std::pair<T, T> numerator_parts_at_one(const BivPade<T>& pade);

/// c01 = -N_0(1) / N_1(1) with N_1 built at c01 = 1, which is exact since the
/// y^1 part is linear in c01.
template <Field T>
C01Estimate<T> estimate_c01(const RiccatiProblem<T>& prob, int n, Side side, Method method,
                            const Deadline* deadline = nullptr);

/// Root of N_0(1) + N_1(1)(c) by bisection on [lo, hi], rebuilding the
/// approximant at every trial c. Slow; kept to cross-check estimate_c01.
C01Estimate<double> estimate_c01_bisection(const RiccatiProblem<double>& prob, int n, Side side, Method method,
                                           double lo, double hi, int iterations = 200);

// Closed-form solution -----------------------------------------------------

template <typename Real>
Real bessel_ratio_constant(const Real& alpha, const Real& beta) {
    using std::sqrt;
    const Real z = 2 * sqrt(alpha * beta);
    return bessel_j(Real(beta - 1), z) / bessel_y(Real(beta - 1), z);
}

/// Coefficients of
///   w = (sum_{m>=1} a_{m,0} x^m + x^beta sum a_{m,1} x^m)
///     / (1 + sum_{m>=1} b_{m,0} x^m + x^beta sum b_{m,1} x^m).
template <typename Real>
struct RiccratCoeffs {
    std::vector<Real> a_m0;  ///< index 0 unused
    std::vector<Real> b_m0;  ///< b_m0[0] = 1
    std::vector<Real> a_m1;
    std::vector<Real> b_m1;
    Real C;
    Real z;  ///< 2 sqrt(alpha beta), the argument fixing C
};

template <typename Real>
RiccratCoeffs<Real> riccrat_coeffs(const Real& alpha, const Real& beta, int count) {
    using std::pow;
    using std::sqrt;
    const Real pi = pi_value<Real>();
    const Real ab = alpha * beta;
    RiccratCoeffs<Real> out;
    out.z = 2 * sqrt(ab);
    out.C = bessel_ratio_constant(alpha, beta);
    const Real& C = out.C;
    const Real k1 = pi * (1 / gamma(beta) + C * gamma(Real(1 - beta)) * cos_pi(Real(beta - 1)) / pi) /
                    (beta * C * gamma(beta));
    const Real k2 = pi * (1 / gamma(Real(beta + 1)) + C * gamma(Real(-beta)) * cos_pi(beta) / pi) /
                    (C * gamma(beta));
    Real fact(1);  // m!
    for (int m = 0; m <= count; ++m) {
        if (m > 0) fact *= m;
        const Real sign = (m % 2 == 0) ? Real(1) : Real(-1);
        const Real abm = pow(ab, m);
        if (m == 0) {
            out.a_m0.push_back(Real(0));
            out.b_m0.push_back(Real(1));
        } else {
            out.a_m0.push_back(-sign * abm / ((fact / m) * pochhammer(Real(-beta), m + 1)));
            out.b_m0.push_back(sign * abm / (fact * pochhammer(Real(1 - beta), m)));
        }
        const Real abmb = pow(ab, Real(m + beta));
        out.a_m1.push_back(sign * k1 * abmb / (pochhammer(beta, m) * fact));
        out.b_m1.push_back(sign * k2 * abmb / (pochhammer(Real(beta + 1), m) * fact));
    }
    return out;
}

/// c^E_{0,1} = a_{0,1} of the closed form.
template <typename Real>
Real exact_c01(const Real& alpha, const Real& beta) {
    return riccrat_coeffs(alpha, beta, 0).a_m1[0];
}

/// w(x) = z/(2 beta) (J_{beta-1}(z) - C Y_{beta-1}(z)) / (J_beta(z) - C Y_beta(z)),
/// z = 2 sqrt(alpha beta x), 0 < x <= 1.
template <typename Real>
Real evaluate_bessel_solution(const Real& alpha, const Real& beta, const Real& x) {
    using std::isfinite;
    using std::sqrt;
    if (!(x > 0) || x > 1) throw InputError("the Bessel solution is evaluated on 0 < x <= 1");
    const Real C = bessel_ratio_constant(alpha, beta);
    const Real z = 2 * sqrt(alpha * beta * x);
    const Real num = bessel_j(Real(beta - 1), z) - C * bessel_y(Real(beta - 1), z);
    const Real den = bessel_j(beta, z) - C * bessel_y(beta, z);
    if (den == 0) {
        throw Error("pole of the Bessel solution at x = " + std::to_string(static_cast<double>(x)));
    }
    return z / (2 * beta) * num / den;
}

/// alpha, beta of an exact or float problem in the real type Real.
template <typename Real, Field T>
Real to_real(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        return Real(v.get_num().get_str()) / Real(v.get_den().get_str());
    } else {
        return Real(v);
    }
}

// Error table --------------------------------------------------------------

struct ErrorTableRow {
    int n = 0;
    std::optional<double> err_left;
    std::optional<double> err_right;
    std::optional<double> time_general;  ///< seconds; empty on timeout or failure
    std::optional<double> time_refined;
    std::string note;  ///< degeneracies and timeouts of this row
};

struct ErrorTableOptions {
    double timeout_secs = 60.0;
    int jobs = 1;  ///< rows computed concurrently when > 1
};

/// One row per n = 1..n_max. Errors come from the refined estimates and are
/// measured against c^E computed with 100-digit arithmetic. time_general
/// covers the general left and right estimates of the row, time_refined the
/// refined ones; each includes building the series.
template <Field T>
std::vector<ErrorTableRow> error_table(const RiccatiProblem<T>& prob, int n_max, const ErrorTableOptions& opts = {});

/// Same rows, computed one after another on the calling thread.
template <Field T>
std::vector<ErrorTableRow> error_table_serial(const RiccatiProblem<T>& prob, int n_max,
                                              const ErrorTableOptions& opts = {});

}  // namespace pade
