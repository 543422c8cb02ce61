#include <random>

#include "doctest.h"
#include "pade/errors.hpp"
#include "pade/univariate.hpp"
#include "support/generators.hpp"

using pade::Poly;
using Q = pade::Rational;

namespace {

std::vector<Q> geometric(int len) {
    std::vector<Q> c(static_cast<std::size_t>(len), Q(1));
    c[0] = 0;
    return c;
}

// exp(x) - 1 through x^len-1.
std::vector<Q> exp_minus_one(int len) {
    std::vector<Q> c(static_cast<std::size_t>(len), Q(0));
    Q f(1);
    for (int i = 1; i < len; ++i) {
        f *= i;
        c[static_cast<std::size_t>(i)] = Q(1) / f;
    }
    return c;
}

}  // namespace

TEST_CASE("jacobi_init") {
    const auto tr = pade::jacobi_init(geometric(5));
    CHECK(tr.level() == 0);
    CHECK(tr.current.A.is_zero_poly());
    CHECK(tr.current.B == Poly<Q>{1});
    CHECK(tr.previous.is_seed());
    CHECK(tr.previous.error_coeff(-1) == -1);

    std::vector<Q> bad = geometric(5);
    bad[1] = 0;
    CHECK_THROWS_WITH_AS(pade::jacobi_init(bad), "non-normal series: c_{1,0}=0; Jacobi recursion undefined",
                         pade::DegenerateError);
}

TEST_CASE("first step uses alpha_1 = -c_1 and beta_1 = -c_2/c_1") {
    auto tr = pade::jacobi_init(geometric(5));
    const auto& u = pade::jacobi_step(tr);
    CHECK(tr.alpha[1] == -1);
    CHECK(tr.beta[1] == -1);
    CHECK(u.A == Poly<Q>{0, 1});
    CHECK(u.B == Poly<Q>{1, -1});

    std::vector<Q> c{0, Q(3), Q(-2), Q(5, 2)};
    auto t2 = pade::jacobi_init(c);
    const auto& v = pade::jacobi_step(t2);
    CHECK(t2.alpha[1] == -3);
    CHECK(t2.beta[1] == Q(2, 3));
    CHECK(v.A == Poly<Q>{0, 3});
    CHECK(v.B == Poly<Q>{1, Q(2, 3)});
    CHECK(v == pade::oracle_pade(c, 1));
}

TEST_CASE("exp(x) - 1 reproduces the classical [2/2] table entry") {
    // exp = (1 + x/2 + x^2/12)/(1 - x/2 + x^2/12) + O(x^5), so
    // exp - 1 = x/(1 - x/2 + x^2/12) + O(x^5).
    const auto c = exp_minus_one(5);
    const auto r = pade::jacobi_pade(c, 2);
    CHECK(r.A == Poly<Q>{0, 1});
    CHECK(r.B == Poly<Q>{1, Q(-1, 2), Q(1, 12)});
    CHECK(pade::oracle_pade(c, 2).A == r.A);
    CHECK(pade::oracle_pade(c, 2).B == r.B);
}

TEST_CASE("geometric series: the [2/2] entry is non-normal") {
    const auto c = geometric(5);
    CHECK_THROWS_AS(pade::oracle_pade(c, 2), pade::DegenerateError);
    CHECK_THROWS_AS(pade::jacobi_pade(c, 2), pade::DegenerateError);
    const auto p = pade::oracle_pade(c, 2, pade::SingularPolicy::particular);
    CHECK(p.A == Poly<Q>{0, 1});
    CHECK(p.B == Poly<Q>{1, -1});
}

TEST_CASE("order zero") {
    const auto p = pade::oracle_pade(geometric(1), 0);
    CHECK(p.A.is_zero_poly());
    CHECK(p.B == Poly<Q>{1});
    CHECK(pade::jacobi_pade(geometric(1), 0).B == Poly<Q>{1});
}

TEST_CASE("insufficient orders name (2n, 0)") {
    CHECK_THROWS_WITH_AS(pade::jacobi_pade(geometric(5), 3), doctest::Contains("(6, 0)"), pade::InputError);
    CHECK_THROWS_WITH_AS(pade::oracle_pade(geometric(5), 3), doctest::Contains("(6, 0)"), pade::InputError);
}

TEST_CASE("recursion equals oracle on random normal series") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        const auto c = pade::testing::random_normal_univariate(rng, 8);
        auto tr = pade::jacobi_init(c);
        for (int n = 1; n <= 8; ++n) {
            const auto& r = pade::jacobi_step(tr);
            const auto o = pade::oracle_pade(c, n);
            REQUIRE(r.A == o.A);
            REQUIRE(r.B == o.B);
            REQUIRE(r.e == o.e);
            CHECK(r.B.coeff(0) == 1);
            CHECK(r.A.coeff(0) == 0);
            CHECK(r.A.degree() <= n);
            CHECK(r.B.degree() <= n);
        }
    }
}

TEST_CASE("order of contact and stored errors") {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 6;
        auto c = pade::testing::random_normal_univariate(rng, n);
        auto tr = pade::jacobi_init(c);
        for (int k = 1; k <= n; ++k) {
            const auto& r = pade::jacobi_step(tr);
            const Poly<Q> d = pade::defect(r.A, r.B, c, 2 * k, 3 * k);
            for (int i = 0; i <= 2 * k; ++i) CHECK(d.coeff(i) == 0);
            for (int j = 1; j <= k; ++j) CHECK(d.coeff(2 * k + j) == r.e[static_cast<std::size_t>(j - 1)]);
        }
    }
}

TEST_CASE("float realization tracks the exact one") {
    std::mt19937_64 rng(103);
    const auto c = pade::testing::random_normal_univariate(rng, 5);
    std::vector<double> cd;
    for (const Q& x : c) cd.push_back(x.get_d());
    const auto e = pade::jacobi_pade(c, 5);
    const auto f = pade::jacobi_pade(cd, 5);
    for (int i = 0; i <= 5; ++i) {
        CHECK(f.B.coeff(i) == doctest::Approx(e.B.coeff(i).get_d()).epsilon(1e-8));
        CHECK(f.A.coeff(i) == doctest::Approx(e.A.coeff(i).get_d()).epsilon(1e-8));
    }
}
