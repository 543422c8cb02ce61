#include <cmath>
#include <random>

#include "doctest.h"
#include <gmpxx.h>

#include "pade/special_functions.hpp"

namespace {

const double kPi = 3.141592653589793238462643383279502884;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

}  // namespace

TEST_CASE("gamma at known points") {
    CHECK(rel(pade::gamma(0.5), std::sqrt(kPi)) < 1e-15);
    CHECK(rel(pade::gamma(5.0), 24.0) < 1e-15);
    CHECK(rel(pade::gamma(-0.5), -2 * std::sqrt(kPi)) < 1e-15);
    CHECK_THROWS_AS(pade::gamma(0.0), pade::InputError);
    CHECK_THROWS_AS(pade::gamma(-3.0), pade::InputError);
}

TEST_CASE("gamma relative error on [-30, 30]") {
    double worst = 0;
    for (int i = -3000; i <= 3000; ++i) {
        const double x = i / 100.0 + 0.003;
        worst = std::max(worst, rel(pade::gamma(x), std::tgamma(x)));
    }
    CHECK(worst <= 1e-13);
}

TEST_CASE("high-precision gamma") {
    const pade::HighPrec half("0.5");
    const pade::HighPrec g = pade::gamma(half);
    CHECK(abs(g * g - pade::pi_value<pade::HighPrec>()) < pade::HighPrec("1e-95"));
    CHECK(pade::gamma(pade::HighPrec(6)) == 120);
}

TEST_CASE("pochhammer") {
    CHECK(pade::pochhammer(3.7, 0) == 1.0);
    CHECK(pade::pochhammer(1.0, 6) == 720.0);
    CHECK(pade::pochhammer(-0.5, 2) == -0.25);
    CHECK(pade::pochhammer(2.5, -1) == doctest::Approx(1 / 1.5));
    // (c)_n = Gamma(c + n) / Gamma(c), negative n included
    for (int n = -3; n <= 4; ++n) {
        const double c = 4.3;
        CHECK(rel(pade::pochhammer(c, n), pade::gamma(c + n) / pade::gamma(c)) < 1e-13);
    }
    using Q = mpq_class;
    CHECK(pade::pochhammer(Q(1, 2), 3) == Q(15, 8));
    CHECK(pade::pochhammer(Q(1, 2), -1) == Q(-2));
}

TEST_CASE("trigonometric reductions") {
    CHECK(pade::sin_pi(1.0) == 0.0);
    CHECK(pade::sin_pi(0.5) == 1.0);
    CHECK(pade::cos_pi(0.5) == doctest::Approx(0.0));
    CHECK(pade::cos_pi(-1.0) == -1.0);
    for (double x = -3.3; x < 3.3; x += 0.17) {
        CHECK(pade::sin_pi(x) == doctest::Approx(std::sin(kPi * x)).epsilon(1e-12));
        CHECK(pade::cos_pi(x) == doctest::Approx(std::cos(kPi * x)).epsilon(1e-12));
    }
}

TEST_CASE("J and Y of order 1/2") {
    for (double z : {1.0, 2.0, 5.0}) {
        CHECK(std::fabs(pade::bessel_j(0.5, z) - std::sqrt(2 / (kPi * z)) * std::sin(z)) < 1e-12);
    }
    for (double z : {1.0, 3.0}) {
        CHECK(std::fabs(pade::bessel_y(0.5, z) + std::sqrt(2 / (kPi * z)) * std::cos(z)) < 1e-12);
    }
}

TEST_CASE("J at the origin and at the first zero of J_0") {
    CHECK(pade::bessel_j(0.7, 0.0) == 0.0);
    CHECK(pade::bessel_j(2.0, 0.0) == 0.0);
    CHECK(pade::bessel_j(0.0, 0.0) == 1.0);
    CHECK(std::fabs(pade::bessel_j(0.0, 2.404825557695773)) < 1e-9);

    double lo = 2.0;
    double hi = 3.0;
    for (int i = 0; i < 60; ++i) {
        const double mid = (lo + hi) / 2;
        (pade::bessel_j(0.0, mid) > 0 ? lo : hi) = mid;
    }
    CHECK(std::fabs(lo - 2.404825557695773) < 1e-12);
}

TEST_CASE("integer order Y is rejected") {
    CHECK_THROWS_AS(pade::bessel_y(1.0, 2.0), pade::InputError);
    CHECK_THROWS_AS(pade::bessel_y(2.0 + 1e-11, 2.0), pade::InputError);
}

TEST_CASE("Wronskian") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> nd(0.1, 3.0);
    std::uniform_real_distribution<double> zd(0.5, 8.0);
    int checked = 0;
    while (checked < 200) {
        const double nu = nd(rng);
        const double z = zd(rng);
        if (pade::near_integer(nu) || pade::near_integer(nu + 1)) continue;
        const double w = pade::bessel_j(nu + 1, z) * pade::bessel_y(nu, z) - pade::bessel_j(nu, z) * pade::bessel_y(nu + 1, z);
        CHECK(std::fabs(w - 2 / (kPi * z)) < 1e-10);
        ++checked;
    }
}

TEST_CASE("series cutoff is converged") {
    for (double nu : {-0.5, 0.25, 1.5, 2.75})
        for (double z : {0.3, 1.4, 4.0, 9.0}) {
            const int k = pade::bessel_j_term_count(nu, z);
            const double a = pade::bessel_j_terms(nu, z, k);
            const double b = pade::bessel_j_terms(nu, z, 2 * k);
            CHECK(std::fabs(a - b) <= 1e-15 * std::fabs(b));
        }
}

TEST_CASE("high-precision J of order 1/2") {
    using R = pade::HighPrec;
    const R z("1.25");
    const R expected = sqrt(2 / (pade::pi_value<R>() * z)) * sin(z);
    CHECK(abs(pade::bessel_j(R("0.5"), z) - expected) < R("1e-90"));
    const R y_expected = -sqrt(2 / (pade::pi_value<R>() * z)) * cos(z);
    CHECK(abs(pade::bessel_y(R("0.5"), z) - y_expected) < R("1e-90"));
}

TEST_CASE("negative integer order") {
    CHECK(pade::bessel_j(-1.0, 1.3) == doctest::Approx(-pade::bessel_j(1.0, 1.3)));
    CHECK(pade::bessel_j(-2.0, 1.3) == doctest::Approx(pade::bessel_j(2.0, 1.3)));
}
