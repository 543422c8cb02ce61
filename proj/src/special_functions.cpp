#include "pade/special_functions.hpp"

#include <array>
#include <cmath>
#include <string>

namespace pade {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos_positive(double x) {
    // x >= 1/2
    const double xm = x - 1.0;
    double a = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (xm + static_cast<double>(i));
    const double t = xm + kLanczosG + 0.5;
    // t^(xm + 1/2) split in two halves to delay overflow.
    const double half_pow = std::pow(t, (xm + 0.5) / 2.0);
    return std::sqrt(2.0 * pi_value<double>()) * half_pow * (half_pow * std::exp(-t)) * a;
}

bool is_pole(double x) { return x <= 0 && x == std::floor(x); }

}  // namespace

double gamma(double x) {
    if (is_pole(x)) throw InputError("gamma: pole at x=" + std::to_string(x));
    if (x < 0.5) return pi_value<double>() / (sin_pi(x) * lanczos_positive(1.0 - x));
    return lanczos_positive(x);
}

HighPrec gamma(const HighPrec& x) {
    if (x <= 0 && x == floor(x)) throw InputError("gamma: pole at x=" + x.str(20));
    return tgamma(x);
}

}  // namespace pade
