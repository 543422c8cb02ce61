#pragma once

// Gamma, Pochhammer and real-order Bessel functions of the first and second
// kind, for double and for a 100-digit MPFR type.
//
// Bessel functions use the ascending series only; they are intended for the
// moderate arguments (z <= ~10) of the Riccati reference solution.

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "pade/errors.hpp"

namespace pade {

using HighPrec = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                               boost::multiprecision::et_off>;

template <typename Real>
Real pi_value() {
    if constexpr (std::is_same_v<Real, double>) {
        return 3.141592653589793238462643383279502884;
    } else {
        return boost::math::constants::pi<Real>();
    }
}

/// sin(pi x) with exact argument reduction.
template <typename Real>
Real sin_pi(const Real& x) {
    using std::floor;
    using std::sin;
    Real r = x - 2 * floor(x / 2);  // [0, 2)
    int sign = 1;
    if (r >= 1) {
        r -= 1;
        sign = -1;
    }
    if (r > Real(0.5)) r = 1 - r;
    return sign * sin(pi_value<Real>() * r);
}

/// cos(pi x) with exact argument reduction.
template <typename Real>
Real cos_pi(const Real& x) {
    using std::abs;
    using std::floor;
    Real r = x - 2 * floor(x / 2);  // [0, 2)
    if (r > 1) r = 2 - r;           // cos is even about 1
    // cos(pi r) = sin(pi (1/2 - r))
    return sin_pi<Real>(Real(0.5) - r);
}

/// Lanczos approximation (g = 7, 9 terms) with reflection below 1/2.
double gamma(double x);

/// MPFR gamma.
HighPrec gamma(const HighPrec& x);

/// Rising factorial (c)_n = c (c+1) ... (c+n-1); for n < 0 it is
/// 1 / ((c-1)(c-2)...(c+n)), consistent with (c)_n = Gamma(c+n)/Gamma(c).
template <typename T>
T pochhammer(const T& c, int n) {
    T out(1);
    if (n >= 0) {
        for (int i = 0; i < n; ++i) out *= c + T(i);
    } else {
        for (int i = 1; i <= -n; ++i) out /= c - T(i);
    }
    return out;
}

/// Sum of the first `terms` terms of the ascending series of J_nu(z).
template <typename Real>
Real bessel_j_terms(const Real& nu, const Real& z, int terms) {
    using std::pow;
    const Real half = z / 2;
    const Real q = -half * half;
    Real term = pow(half, nu) / gamma(nu + 1);
    Real sum = term;
    for (int k = 1; k < terms; ++k) {
        term *= q / (Real(k) * (Real(k) + nu));
        sum += term;
    }
    return sum;
}

/// Number of series terms bessel_j uses at (nu, z).
template <typename Real>
int bessel_j_term_count(const Real& nu, const Real& z) {
    using std::abs;
    using std::pow;
    const Real eps = std::numeric_limits<Real>::epsilon() / 10;
    const Real half = z / 2;
    const Real q = -half * half;
    Real term = pow(half, nu) / gamma(nu + 1);
    Real sum = term;
    int k = 1;
    for (;; ++k) {
        term *= q / (Real(k) * (Real(k) + nu));
        sum += term;
        // Terms grow while k(k + nu) < (z/2)^2; stop only once they shrink.
        if (Real(k) * (Real(k) + nu) > -q && abs(term) <= eps * abs(sum)) break;
        if (k > 10000) throw Error("bessel_j: series did not converge");
    }
    return k + 1;
}

/// J_nu(z) for z >= 0.
template <typename Real>
Real bessel_j(const Real& nu, const Real& z) {
    using std::floor;
    if (z < 0) throw InputError("bessel_j requires z >= 0");
    if (z == 0) {
        if (nu == 0) return Real(1);
        if (nu > 0) return Real(0);
        if (nu == floor(nu)) return Real(0);
        throw Error("bessel_j: J_nu(0) is infinite for negative non-integer nu");
    }
    if (nu < 0 && nu == floor(nu)) {
        // J_{-n} = (-1)^n J_n
        const Real j = bessel_j(Real(-nu), z);
        return (static_cast<long>(-nu) % 2 == 0) ? j : Real(-j);
    }
    return bessel_j_terms(nu, z, bessel_j_term_count(nu, z));
}

/// True when nu is within 1e-9 of an integer.
template <typename Real>
bool near_integer(const Real& nu) {
    using std::abs;
    using std::round;
    return abs(nu - round(nu)) <= Real(1e-9);
}

/// Y_nu(z) = (J_nu(z) cos(nu pi) - J_{-nu}(z)) / sin(nu pi), non-integer nu, z > 0.
template <typename Real>
Real bessel_y(const Real& nu, const Real& z) {
    if (near_integer(nu)) throw InputError("bessel_y requires a non-integer order");
    if (!(z > 0)) throw InputError("bessel_y requires z > 0");
    return (bessel_j(nu, z) * cos_pi(nu) - bessel_j(Real(-nu), z)) / sin_pi(nu);
}

}  // namespace pade
