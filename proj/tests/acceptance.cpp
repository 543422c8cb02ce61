// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pade/bivariate.hpp"
#include "pade/errors.hpp"
#include "pade/remainder.hpp"
#include "pade/riccati.hpp"
#include "pade/special_functions.hpp"
#include "pade/univariate.hpp"
#include "support/generators.hpp"
#include "support/rational_functions.hpp"

using pade::BivSeries;
using pade::Method;
using pade::Poly;
using pade::Side;
using pade::UniAlgorithm;
using Q = pade::Rational;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kPi = 3.14159265358979323846;

const pade::RiccatiProblem<Q> kHalf{Q(1), Q(1, 2)};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double t = seconds_since(t0);
    if (limit_s > 0 && t > limit_s) {
        o.ok = false;
        o.detail += " [over time limit " + std::to_string(limit_s) + " s]";
    }
    if (!o.ok) ++failures;
    std::printf("%s %2d %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", id, title, t, o.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::vector<Q>> univariate_corpus() {
    std::mt19937_64 rng(20240);
    std::vector<std::vector<Q>> out;
    for (int i = 0; i < 50; ++i) out.push_back(pade::testing::random_normal_univariate(rng, 8));
    return out;
}

Outcome univariate_oracle(const std::vector<std::vector<Q>>& corpus) {
    int compared = 0;
    for (const auto& c : corpus) {
        auto tr = pade::jacobi_init(c);
        for (int n = 1; n <= 8; ++n) {
            const auto& r = pade::jacobi_step(tr);
            const auto o = pade::oracle_pade(c, n);
            if (!(r.A == o.A && r.B == o.B && r.e == o.e)) {
                return {false, "mismatch at n=" + std::to_string(n)};
            }
            ++compared;
        }
    }
    return {true, std::to_string(compared) + " approximants equal"};
}

Outcome univariate_contact(const std::vector<std::vector<Q>>& corpus) {
    for (const auto& c : corpus) {
        auto tr = pade::jacobi_init(c);
        for (int n = 1; n <= 8; ++n) {
            const auto& r = pade::jacobi_step(tr);
            const Poly<Q> d = pade::defect(r.A, r.B, c, 2 * n, 3 * n);
            for (int i = 0; i <= 2 * n; ++i) {
                if (d.coeff(i) != 0) return {false, "nonzero x^" + std::to_string(i) + " at n=" + std::to_string(n)};
            }
            for (int k = 1; k <= n; ++k) {
                if (d.coeff(2 * n + k) != r.e[static_cast<std::size_t>(k - 1)]) {
                    return {false, "stored error mismatch at n=" + std::to_string(n)};
                }
            }
        }
    }
    return {true, "x^0..x^{2n} vanish, e_{2n+1..3n} match, n <= 8"};
}

Outcome remainder_identity() {
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const int n_max = 6;
        const auto c = pade::testing::random_normal_univariate(rng, n_max);
        auto tr = pade::jacobi_init(c);
        const pade::RemainderComponents<Q>* prev = nullptr;
        std::vector<pade::RemainderComponents<Q>> comps;
        comps.reserve(n_max);
        for (int n = 1; n <= n_max; ++n) {
            const pade::UniPade<Q> l2 = tr.previous;
            const pade::UniPade<Q> l1 = tr.current;
            comps.push_back(pade::remainder_components(n, c, l1, l2, prev));
            prev = &comps.back();
            const Q so = pade::testing::random_coeff(rng);
            const Q se = pade::testing::random_coeff(rng);
            const auto r = pade::apply_remainder(comps.back(), so, se, l1, l2);
            Poly<Q> lhs;
            lhs.at(2 * n - 1) += so;
            lhs.at(2 * n) += se;
            for (int k = 1; k <= n; ++k) lhs.at(2 * n + k) -= r.tau[static_cast<std::size_t>(k - 1)];
            if (!(lhs - pade::defect(r.A, r.B, c, 2 * n, 3 * n)).is_zero_poly()) {
                return {false, "identity fails at n=" + std::to_string(n)};
            }
            ++checked;
            if (n < n_max) pade::jacobi_step(tr);
        }
    }
    return {true, std::to_string(checked) + " (series, sigma, n) cases through x^{3n}"};
}

Outcome bivariate_oracle() {
    std::mt19937_64 rng(4242);
    int compared = 0;
    int both_degenerate = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const BivSeries<Q> s = pade::testing::random_normal_bivariate(rng, 5, 3);
        for (int m = 0; m <= 3; ++m) {
            for (int n = 0; n <= 5; ++n) {
                bool oracle_degenerate = false;
                pade::BivPade<Q> o;
                try {
                    o = pade::oracle_left_pade(s, n, m);
                } catch (const pade::DegenerateError&) {
                    oracle_degenerate = true;
                }
                bool rec_degenerate = false;
                pade::BivPade<Q> r;
                try {
                    r = pade::left_pade(s, n, m);
                } catch (const pade::DegenerateError&) {
                    rec_degenerate = true;
                }
                if (oracle_degenerate != rec_degenerate) {
                    return {false, "degeneracy disagrees at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
                }
                if (oracle_degenerate) {
                    ++both_degenerate;
                    continue;
                }
                if (!pade::same_polynomials(r, o) || r.e != o.e) {
                    return {false, "mismatch at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
                }
                ++compared;
            }
        }
    }
    return {true, std::to_string(compared) + " approximants equal, " + std::to_string(both_degenerate) +
                      " degenerate in both"};
}

Outcome defect_property() {
    std::mt19937_64 rng(515);
    int checked = 0;
    for (int trial = 0; trial < 10; ++trial) {
        const int n_max = 4;
        const int m = 3;
        const BivSeries<Q> s = pade::testing::random_normal_bivariate(rng, n_max, m);
        const std::vector<Q> y_axis = s.row(0);
        for (int n = 0; n <= n_max; ++n) {
            const auto r = pade::left_pade(s, n, m);
            for (int p = 0; p <= m; ++p) {
                const Poly<Q> d = pade::level_defect(r, s, p, 2 * n);
                for (int i = 0; i <= 2 * n; ++i) {
                    if (d.coeff(i) != 0) {
                        return {false, "level p=" + std::to_string(p) + " defect at x^" + std::to_string(i)};
                    }
                }
            }
            Poly<Q> a0, b0;
            for (int p = 0; p <= m; ++p) {
                const auto pu = static_cast<std::size_t>(p);
                if (r.A[pu].coeff(0) != r.seeds.a0[pu] || r.B[pu].coeff(0) != r.seeds.b0[pu]) {
                    return {false, "seed not propagated at p=" + std::to_string(p)};
                }
                a0.at(p) = r.seeds.a0[pu];
                b0.at(p) = r.seeds.b0[pu];
            }
            if (!pade::defect(a0, b0, y_axis, 2 * m, 2 * m).is_zero_poly()) {
                return {false, "seed conditions fail"};
            }
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " approximants, all levels p <= m O(x^{2n+1})"};
}

Outcome riccati_equivalence() {
    for (int n = 0; n <= 10; ++n) {
        const auto g = pade::riccati_univariate(kHalf, n, UniAlgorithm::general);
        const auto e = pade::riccati_univariate(kHalf, n, UniAlgorithm::explicit_params);
        const auto d = pade::riccati_univariate(kHalf, n, UniAlgorithm::direct_ratios);
        if (!(g.A == e.A && g.B == e.B && g.A == d.A && g.B == d.B)) {
            return {false, "univariate algorithms differ at n=" + std::to_string(n)};
        }
    }
    for (const Q& c01 : {Q(3, 2), Q(-7, 5)}) {
        for (int n = 0; n <= 8; ++n) {
            for (Side side : {Side::left, Side::right}) {
                const auto g = pade::riccati_pade(kHalf, c01, n, side, Method::general);
                const auto r = pade::riccati_pade(kHalf, c01, n, side, Method::refined);
                if (!pade::same_polynomials(g, r)) {
                    return {false, std::string(pade::side_name(side)) + " paths differ at n=" + std::to_string(n)};
                }
            }
        }
    }
    return {true, "univariate n <= 10, left and right n <= 8"};
}

Outcome right_identity() {
    const Q c01(3, 2);
    for (const auto& p : {kHalf, pade::RiccatiProblem<Q>{Q(1), Q(1, 3)}}) {
        for (int n = 1; n <= 4; ++n) {
            const BivSeries<Q> s = pade::generate_series(p, c01, 2 * n, 6);
            const auto r1 = pade::right_pade(s, n, 1);
            for (int m : {2, 3}) {
                const auto rm = pade::oracle_right_pade(s, n, m, pade::SingularPolicy::particular);
                if (!pade::testing::same_rational_function(rm, r1)) {
                    return {false, "differs at n=" + std::to_string(n) + ", m=" + std::to_string(m)};
                }
            }
        }
    }
    return {true, "beta in {1/2, 1/3}, n <= 4, m in {2, 3}"};
}

Outcome homogeneity() {
    const Q c01(3, 2);
    const Q lambda(-5, 7);
    const BivSeries<Q> s1 = pade::generate_series(kHalf, c01, 12, 12);
    const BivSeries<Q> s2 = pade::generate_series(kHalf, Q(lambda * c01), 12, 12);
    Q scale(1);
    for (int m = 0; m <= 12; ++m) {
        for (int n = 0; n + m <= 12; ++n) {
            if (s2(n, m) != scale * s1(n, m)) {
                return {false, "fails at (" + std::to_string(n) + "," + std::to_string(m) + ")"};
            }
        }
        scale *= lambda;
    }
    return {true, "n + m <= 12"};
}

// Regression pins from the reference run at (1, 1/2).
constexpr double kErrRight10 = 1.9580364e-41;
constexpr double kMinImprovement = 1e3;

Outcome convergence_trend() {
    const auto rows = pade::error_table(kHalf, 10, {60.0, 1});
    auto err = [&](int n) { return *rows[static_cast<std::size_t>(n - 1)].err_right; };
    for (int n = 4; n <= 10; ++n) {
        if (!(err(n) < err(n - 1))) return {false, "not decreasing at n=" + std::to_string(n)};
    }
    if (*rows[0].err_left != *rows[0].err_right) return {false, "n = 1 left and right differ"};
    const double factor = err(3) / err(10);
    if (factor < kMinImprovement) return {false, "improvement factor " + std::to_string(factor)};
    if (std::abs(err(10) / kErrRight10 - 1) > 1e-6) return {false, "n = 10 error drifted from the pinned value"};
    char buf[160];
    std::snprintf(buf, sizeof buf, "n=1 err %.6e (left = right), n=3 %.3e, n=10 %.3e, factor %.2e", err(1), err(3),
                  err(10), factor);
    return {true, buf};
}

Outcome bessel_reference() {
    double worst_closed = 0;
    for (double z = 0.25; z <= 10; z += 0.25) {
        worst_closed = std::max(worst_closed, std::abs(pade::bessel_j(0.5, z) - std::sqrt(2 / (kPi * z)) * std::sin(z)));
        worst_closed = std::max(worst_closed, std::abs(pade::bessel_y(0.5, z) + std::sqrt(2 / (kPi * z)) * std::cos(z)));
    }
    double worst_wronskian = 0;
    for (double nu : {0.5, 1.0 / 3.0, 0.4, 1.7, 2.25}) {
        for (double z = 0.5; z <= 8; z += 0.5) {
            const double w =
                pade::bessel_j(nu + 1, z) * pade::bessel_y(nu, z) - pade::bessel_j(nu, z) * pade::bessel_y(nu + 1, z);
            worst_wronskian = std::max(worst_wronskian, std::abs(w - 2 / (kPi * z)));
        }
    }
    double worst_boundary = 0;
    double worst_residual = 0;
    const double h = 1e-5;
    for (const auto& [a, b] : {std::pair{1.0, 0.5}, std::pair{1.0, 1.0 / 3.0}, std::pair{2.0, 0.4}}) {
        worst_boundary = std::max(worst_boundary, std::abs(pade::evaluate_bessel_solution(a, b, 1.0)));
        for (double x = 0.1; x < 0.95; x += 0.1) {
            const double w = pade::evaluate_bessel_solution(a, b, x);
            const double dw =
                (pade::evaluate_bessel_solution(a, b, x + h) - pade::evaluate_bessel_solution(a, b, x - h)) / (2 * h);
            worst_residual = std::max(worst_residual, std::abs(x * dw - b * w + b * w * w + a * x));
        }
    }
    char buf[200];
    std::snprintf(buf, sizeof buf, "closed forms %.1e (tol 1e-12), Wronskian %.1e (tol 1e-10), w(1) %.1e (tol 1e-10), "
                                   "residual %.1e (tol 1e-6)",
                  worst_closed, worst_wronskian, worst_boundary, worst_residual);
    return {worst_closed <= 1e-12 && worst_wronskian <= 1e-10 && worst_boundary <= 1e-10 && worst_residual <= 1e-6,
            buf};
}

double median_time(const std::function<void()>& f, int repeats) {
    std::vector<double> t;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = Clock::now();
        f();
        t.push_back(seconds_since(t0));
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
}

Outcome performance_ordering() {
    const int n = 10;
    const int repeats = 9;
    const Q c01(3, 2);
    std::string detail;
    bool ok = true;
    for (Side side : {Side::left, Side::right}) {
        const double g = median_time([&] { pade::riccati_pade(kHalf, c01, n, side, Method::general); }, repeats);
        const double r = median_time([&] { pade::riccati_pade(kHalf, c01, n, side, Method::refined); }, repeats);
        ok = ok && r <= g;
        char buf[120];
        std::snprintf(buf, sizeof buf, "%s general %.4f s, refined %.4f s. ", pade::side_name(side), g, r);
        detail += buf;
    }
    return {ok, detail};
}

}  // namespace

int main() {
    const auto corpus = univariate_corpus();
    report(1, "univariate recursion equals the linear-solve oracle", 30, [&] { return univariate_oracle(corpus); });
    report(2, "univariate order of contact and stored errors", 0, [&] { return univariate_contact(corpus); });
    report(3, "remainder identity", 0, remainder_identity);
    report(4, "bivariate recursion equals the linear-system oracle", 120, bivariate_oracle);
    report(5, "defect property and seed conditions", 0, defect_property);
    report(6, "Riccati algorithm equivalence at (1, 1/2)", 0, riccati_equivalence);
    report(7, "right-(n,m) equals right-(n,1)", 0, right_identity);
    report(8, "series homogeneity in c01", 0, homogeneity);
    report(9, "convergence trend at (1, 1/2)", 60, convergence_trend);
    report(10, "Bessel reference", 0, bessel_reference);
    report(11, "refined paths are not slower than general paths at n = 10", 0, performance_ordering);
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
