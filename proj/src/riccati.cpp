#include "pade/riccati.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <string>
#include <tuple>

#include "pade/errors.hpp"

namespace pade {

namespace {

template <Field T>
bool is_integer_value(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
        return v.get_den() == 1;
    } else {
        return std::floor(v) == v;
    }
}

template <Field T>
T checked_div(const T& num, const T& den, const std::string& what, int n, int k = -1) {
    if (is_zero(den)) {
        std::string msg = "zero denominator in " + what + " at n=" + std::to_string(n);
        if (k >= 0) msg += ", k=" + std::to_string(k);
        throw DegenerateError(msg, n);
    }
    return num / den;
}

template <Field T>
T factorial(int n) {
    T out(1);
    for (int i = 2; i <= n; ++i) out *= T(i);
    return out;
}

template <Field T>
T half(int twice) {
    return from_ratio<T>(twice, 2);
}

template <Field T>
struct Level {
    Poly<T> A;
    Poly<T> B;
};

// P_k = (1 + beta x) P_{k-1} + alpha x^2 P_{k-2}; at k = 1 the level k-2 is
// the seed (A, B) = (-x^{-1}, 0).
template <Field T>
Level<T> three_term(const Level<T>& p1, const Level<T>& p2, bool p2_seed, const T& alpha, const T& beta) {
    Level<T> out{p1.A, p1.B};
    poly_axpy_shifted(out.A, p1.A, 1, beta);
    poly_axpy_shifted(out.B, p1.B, 1, beta);
    if (p2_seed) {
        out.A.at(1) -= alpha;
    } else {
        poly_axpy_shifted(out.A, p2.A, 2, alpha);
        poly_axpy_shifted(out.B, p2.B, 2, alpha);
    }
    return out;
}

// alpha_1 = -c_{1,0}, beta_1 = -c_{2,0}/c_{1,0}; closed forms above.
template <Field T>
std::pair<T, T> riccati_jacobi_params(const RiccatiProblem<T>& prob, const BivSeries<T>& small, int k) {
    if (k >= 2) return explicit_jacobi_params(prob, k);
    return {-small(1, 0), -small(2, 0) / small(1, 0)};
}

template <Field T>
UniPade<T> explicit_univariate(const RiccatiProblem<T>& prob, int n) {
    if (n == 0) return UniPade<T>::zeroth();
    const BivSeries<T> small = generate_series(prob, T(0), 2, 0);
    Level<T> prev2;
    Level<T> prev{Poly<T>{T(0)}, Poly<T>{T(1)}};
    for (int k = 1; k <= n; ++k) {
        const auto [alpha, beta] = riccati_jacobi_params(prob, small, k);
        Level<T> next = three_term(prev, prev2, k == 1, alpha, beta);
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    prev.A.trim();
    prev.B.trim();
    return UniPade<T>{n, std::move(prev.A), std::move(prev.B), {}};
}

template <Field T>
T poly_sum(const Poly<T>& p) {
    T out(0);
    for (const T& v : p.coeffs()) out += v;
    return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <Field T>
struct RowWork {
    ErrorTableRow row;
    std::optional<T> left;
    std::optional<T> right;
};

void add_note(std::string& note, const std::string& text) {
    if (!note.empty()) note += "; ";
    note += text;
}

template <Field T>
RowWork<T> table_row(const RiccatiProblem<T>& prob, int n, double timeout_secs) {
    RowWork<T> w;
    w.row.n = n;
    const Side sides[] = {Side::left, Side::right};

    std::optional<T> refined[2];
    bool refined_ok = true;
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 2; ++i) {
        try {
            refined[i] = estimate_c01(prob, n, sides[i], Method::refined).value;
        } catch (const std::exception& e) {
            refined_ok = false;
            add_note(w.row.note, std::string(side_name(sides[i])) + " refined: " + e.what());
        }
    }
    if (refined_ok) w.row.time_refined = seconds_since(t0);

    std::optional<T> general[2];
    bool general_ok = true;
    const Deadline deadline(timeout_secs);
    const auto t1 = std::chrono::steady_clock::now();
    for (int i = 0; i < 2; ++i) {
        try {
            general[i] = estimate_c01(prob, n, sides[i], Method::general, &deadline).value;
        } catch (const TimeoutError&) {
            general_ok = false;
            add_note(w.row.note, "general timed out");
            break;
        } catch (const std::exception& e) {
            general_ok = false;
            add_note(w.row.note, std::string(side_name(sides[i])) + " general: " + e.what());
        }
    }
    if (general_ok) w.row.time_general = seconds_since(t1);

    for (int i = 0; i < 2; ++i) {
        if (ScalarTraits<T>::exact && refined[i] && general[i] && !(*refined[i] == *general[i])) {
            add_note(w.row.note, std::string(side_name(sides[i])) + ": general and refined estimates differ");
        }
        std::optional<T>& slot = (i == 0) ? w.left : w.right;
        slot = refined[i] ? refined[i] : general[i];
    }
    return w;
}

template <Field T>
std::vector<ErrorTableRow> finish_rows(const RiccatiProblem<T>& prob, std::vector<RowWork<T>>& work) {
    using std::abs;
    const HighPrec exact = exact_c01(to_real<HighPrec>(prob.alpha), to_real<HighPrec>(prob.beta));
    std::vector<ErrorTableRow> rows;
    rows.reserve(work.size());
    for (RowWork<T>& w : work) {
        if (w.left) w.row.err_left = static_cast<double>(abs(to_real<HighPrec>(*w.left) - exact));
        if (w.right) w.row.err_right = static_cast<double>(abs(to_real<HighPrec>(*w.right) - exact));
        rows.push_back(std::move(w.row));
    }
    return rows;
}

void require_table_args(int n_max, const ErrorTableOptions& opts) {
    if (n_max < 1) throw InputError("error table needs nmax >= 1");
    if (!(opts.timeout_secs > 0)) throw InputError("timeout must be positive");
}

}  // namespace

const char* uni_algorithm_name(UniAlgorithm a) {
    switch (a) {
        case UniAlgorithm::general: return "general";
        case UniAlgorithm::explicit_params: return "explicit";
        case UniAlgorithm::direct_ratios: return "ratios";
    }
    return "?";
}

const char* method_name(Method m) { return m == Method::general ? "general" : "refined"; }

template <Field T>
void validate(const RiccatiProblem<T>& prob) {
    if constexpr (std::is_same_v<T, double>) {
        if (!std::isfinite(prob.alpha) || !std::isfinite(prob.beta)) {
            throw InputError("alpha and beta must be finite");
        }
    }
    if (!(T(0) < prob.alpha)) throw InputError("alpha must be positive");
    if (!(T(0) < prob.beta)) throw InputError("beta must be positive");
    if (is_integer_value(prob.beta)) throw InputError("beta must be non-integer");
}

template <Field T>
BivSeries<T> generate_series(const RiccatiProblem<T>& prob, const T& c01, int N, int M) {
    validate(prob);
    BivSeries<T> s(N, M);
    if (M >= 1) s.set(0, 1, c01);
    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= M; ++m) {
            if (n == 0 && m <= 1) continue;
            const T div = T(n) + T(m - 1) * prob.beta;
            if (is_zero(div)) {
                throw DegenerateError("resonance at (n,m)=(" + std::to_string(n) + "," + std::to_string(m) +
                                          "): n + (m-1) beta = 0",
                                      n, m);
            }
            T sum(0);
            for (int i = 0; i <= n; ++i) {
                for (int j = 0; j <= m; ++j) {
                    if ((i == 0 && j == 0) || (i == n && j == m)) continue;
                    sum += s(i, j) * s(n - i, m - j);
                }
            }
            T rhs = -prob.beta * sum;
            if (n == 1 && m == 0) rhs -= prob.alpha;
            s.set(n, m, rhs / div);
        }
    }
    return s;
}

template <Field T>
std::pair<T, T> explicit_jacobi_params(const RiccatiProblem<T>& prob, int n) {
    if (n < 2) {
        throw InputError("explicit alpha_n, beta_n start at n = 2; level 1 uses alpha_1 = -c_{1,0}, "
                         "beta_1 = -c_{2,0}/c_{1,0}");
    }
    const T& a = prob.alpha;
    const T& b = prob.beta;
    const T d1 = b - T(2 * n - 1);
    const T d2 = b - T(2 * n - 2);
    const T d3 = b - T(2 * n - 3);
    const T d4 = b - T(2 * n);
    const T alpha_n = checked_div<T>(-a * a * b * b, d1 * d2 * d2 * d3, "alpha_n", n);
    const T beta_n = checked_div<T>(-2 * a * b, d4 * d2, "beta_n", n);
    return {alpha_n, beta_n};
}

template <Field T>
std::pair<T, T> explicit_check_params(const RiccatiProblem<T>& prob, const T& c01, int n) {
    if (n < 2) throw InputError("explicit level-1 parameters start at n = 2");
    const auto [alpha_n, beta_n] = explicit_jacobi_params(prob, n);
    const T& b = prob.beta;
    const T one_minus_2b = T(1) - 2 * b;
    const T fact = factorial<T>(2 * n - 1);
    const T n1 = T(n - 1);

    const T beta_bracket = T(2 * (2 * n - 1) * (2 * n - 1)) + b * (T(-8) * n1 - 3 + 2 * b);
    const T check_beta = -b * pochhammer(one_minus_2b, 2 * n - 3) * beta_bracket * beta_n * c01 / (T(n) * fact);

    const T alpha_bracket = T(8) * n1 * n1 - 1 + b * (2 * b - T(8) * n1 - 1);
    const T check_alpha =
        T(8) * b * (b - T(n - 2)) * alpha_bracket * pochhammer(one_minus_2b, 2 * n - 5) * alpha_n * c01 / fact;
    return {check_beta, check_alpha};
}

template <Field T>
T ratio_p0(const RiccatiProblem<T>& prob, int n, int k) {
    const T& b = prob.beta;
    const T num = -prob.alpha * b * T(2 * n - 2 * k + 1) * T(n - k + 1);
    const T den = T(k) * half<T>(2 * n - k + 1) * (b - T(2 * n - k + 1)) * (b - T(k));
    return checked_div(num, den, "P0", n, k);
}

template <Field T>
T ratio_q0(const RiccatiProblem<T>& prob, int n, int k) {
    const T& b = prob.beta;
    const T num = -prob.alpha * b * T(2 * n - 2 * k + 3) * T(n - k + 1);
    const T den = T(k - 1) * half<T>(2 * n - k + 1) * (b - T(2 * n - k + 2)) * (b - T(k));
    return checked_div(num, den, "Q0", n, k);
}

template <Field T>
T ratio_p1(const RiccatiProblem<T>& prob, int n, int k) {
    const T& b = prob.beta;
    const T num = -prob.alpha * b * (b - T(n - k + 1)) * (2 * b - T(2 * n - 2 * k + 1));
    const T den = T(k) * (b - half<T>(2 * n - k + 1)) * (b - T(2 * n - k + 1)) * (T(k) + b);
    return checked_div(num, den, "P1", n, k);
}

template <Field T>
T ratio_q1(const RiccatiProblem<T>& prob, int n, int k) {
    const T& b = prob.beta;
    const T num = -prob.alpha * b * (b - T(n - k + 1)) * (2 * b - T(2 * n - 2 * k + 3));
    const T den = T(k) * (b - half<T>(2 * n - k + 2)) * (b - T(2 * n - k + 1)) * (T(k - 1) + b);
    return checked_div(num, den, "Q1", n, k);
}

template <Field T>
UniPade<T> direct_coeff_ratios(const RiccatiProblem<T>& prob, int n) {
    validate(prob);
    if (n < 0) throw InputError("order must be non-negative");
    if (n == 0) return UniPade<T>::zeroth();
    std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
    std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
    b[0] = T(1);
    a[1] = checked_div<T>(prob.alpha, prob.beta - 1, "c_{1,0}", n);
    for (int k = 1; k <= n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        b[ku] = ratio_p0(prob, n, k) * b[ku - 1];
        if (k >= 2) a[ku] = ratio_q0(prob, n, k) * a[ku - 1];
    }
    UniPade<T> out{n, Poly<T>(std::move(a)), Poly<T>(std::move(b)), {}};
    out.A.trim();
    out.B.trim();
    return out;
}

template <Field T>
UniPade<T> riccati_univariate(const RiccatiProblem<T>& prob, int n, UniAlgorithm algo) {
    validate(prob);
    if (n < 0) throw InputError("order must be non-negative");
    switch (algo) {
        case UniAlgorithm::general:
            return jacobi_pade(generate_series(prob, T(0), 2 * n, 0).column(0), n);
        case UniAlgorithm::explicit_params:
            return explicit_univariate(prob, n);
        case UniAlgorithm::direct_ratios:
            return direct_coeff_ratios(prob, n);
    }
    throw InputError("unknown univariate algorithm");
}

template <Field T>
BivPade<T> refined_left_pade(const RiccatiProblem<T>& prob, const T& c01, int n) {
    if (n < 0) throw InputError("order must be non-negative");
    if (is_zero(c01)) throw InputError("c01 must be nonzero");
    const BivSeries<T> s = generate_series(prob, c01, 2, 2);
    const T b01 = -s(0, 2) / c01;

    BivPade<T> out;
    out.n = n;
    out.m = 1;
    out.side = Side::left;
    out.seeds = Seeds<T>{{T(0), c01}, {T(1), b01}};
    const auto rows = static_cast<std::size_t>(n) + 1;
    out.params.check_beta.assign(rows, std::vector<T>(2, T(0)));
    out.params.check_alpha.assign(rows, std::vector<T>(2, T(0)));

    // Levels p = 0, 1 at steps k-2 and k-1.
    Level<T> prev2_0;
    Level<T> prev_0{Poly<T>{T(0)}, Poly<T>{T(1)}};
    Level<T> prev2_1;
    Level<T> prev_1{Poly<T>{c01}, Poly<T>{b01}};
    for (int k = 1; k <= n; ++k) {
        const auto [alpha, beta] = riccati_jacobi_params(prob, s, k);
        T u;
        T v;
        if (k == 1) {
            u = -(s(2, 1) + beta * s(1, 1)) / s(1, 0);
            v = -(s(1, 1) + b01 * s(1, 0));
        } else {
            std::tie(u, v) = explicit_check_params(prob, c01, k);
        }
        const auto ku = static_cast<std::size_t>(k);
        out.params.check_beta[ku] = {beta, u};
        out.params.check_alpha[ku] = {alpha, v};

        Level<T> next_1{prev_1.A, prev_1.B};
        poly_axpy_shifted(next_1.A, prev_1.A, 1, beta);
        poly_axpy_shifted(next_1.B, prev_1.B, 1, beta);
        poly_axpy_shifted(next_1.A, prev_0.A, 1, u);
        poly_axpy_shifted(next_1.B, prev_0.B, 1, u);
        if (k == 1) {
            next_1.A.at(1) -= v;  // v x^2 (-x^{-1})
        } else {
            poly_axpy_shifted(next_1.A, prev2_1.A, 2, alpha);
            poly_axpy_shifted(next_1.B, prev2_1.B, 2, alpha);
            poly_axpy_shifted(next_1.A, prev2_0.A, 2, v);
            poly_axpy_shifted(next_1.B, prev2_0.B, 2, v);
        }
        Level<T> next_0 = three_term(prev_0, prev2_0, k == 1, alpha, beta);

        prev2_0 = std::move(prev_0);
        prev_0 = std::move(next_0);
        prev2_1 = std::move(prev_1);
        prev_1 = std::move(next_1);
    }
    for (Level<T>* l : {&prev_0, &prev_1}) {
        l->A.trim();
        l->B.trim();
    }
    out.A = {std::move(prev_0.A), std::move(prev_1.A)};
    out.B = {std::move(prev_0.B), std::move(prev_1.B)};
    return out;
}

template <Field T>
BivPade<T> right_induction_coeffs(const RiccatiProblem<T>& prob, const T& c01, int n, UniAlgorithm uni) {
    if (n < 0) throw InputError("order must be non-negative");
    if (is_zero(c01)) throw InputError("c01 must be nonzero");
    const BivSeries<T> s = generate_series(prob, c01, 0, 2);
    const UniPade<T> base = riccati_univariate(prob, n, uni);

    const auto len = static_cast<std::size_t>(n) + 1;
    std::vector<T> b1(len);
    std::vector<T> a1(len);
    b1[0] = -s(0, 2) / c01;
    a1[0] = c01;
    for (int k = 1; k <= n; ++k) {
        const auto ku = static_cast<std::size_t>(k);
        b1[ku] = ratio_p1(prob, n, k) * b1[ku - 1];
        a1[ku] = ratio_q1(prob, n, k) * a1[ku - 1];
    }

    BivPade<T> out;
    out.n = n;
    out.m = 1;
    out.side = Side::right;
    out.seeds = Seeds<T>{base.A.coeffs_padded(len), base.B.coeffs_padded(len)};
    for (std::size_t p = 0; p < len; ++p) {
        Poly<T> a{base.A.coeff(static_cast<int>(p)), a1[p]};
        Poly<T> b{base.B.coeff(static_cast<int>(p)), b1[p]};
        a.trim();
        b.trim();
        out.A.push_back(std::move(a));
        out.B.push_back(std::move(b));
    }
    return out;
}

template <Field T>
std::pair<std::vector<T>, std::vector<T>> right_level1_induction(const BivSeries<T>& series, int n, int k_max) {
    if (n < 0 || k_max < 0) throw InputError("orders must be non-negative");
    const int need_x = std::max(2 * n, k_max);
    if (series.x_order() < need_x || series.y_order() < 2) {
        throw InputError("order-insufficient series: right level-1 induction needs orders (N, M) >= (" +
                         std::to_string(need_x) + ", 2)");
    }
    if (is_zero(series(0, 1))) throw DegenerateError("right level-1 induction needs c_{0,1} != 0", n, 1);

    const UniPade<T> base = jacobi_pade(series.column(0), n);
    const auto len = static_cast<std::size_t>(k_max) + 1;

    std::vector<T> u(len);
    for (int q = 0; q <= k_max; ++q) {
        T acc = -series(q, 2);
        for (int i = 0; i < q; ++i) acc -= u[static_cast<std::size_t>(i)] * series(q - i, 1);
        u[static_cast<std::size_t>(q)] = acc / series(0, 1);
    }
    // a^{(n)}_{p,0} continued past p = n by the same convolution
    std::vector<T> a0(len, T(0));
    for (int p = 0; p <= k_max; ++p) {
        T acc(0);
        for (int s = 0; s <= std::min(p, n); ++s) acc += base.B.coeff(s) * series(p - s, 0);
        a0[static_cast<std::size_t>(p)] = acc;
    }

    std::vector<T> b(len, T(0));
    std::vector<T> a(len, T(0));
    for (int k = 0; k <= k_max; ++k) {
        T bk(0);
        T ak(0);
        for (int j = 0; j <= std::min(k, n); ++j) {
            bk += u[static_cast<std::size_t>(k - j)] * base.B.coeff(j);
            ak += base.B.coeff(j) * series(k - j, 1);
        }
        for (int q = 0; q <= k; ++q) ak += u[static_cast<std::size_t>(q)] * a0[static_cast<std::size_t>(k - q)];
        b[static_cast<std::size_t>(k)] = bk;
        a[static_cast<std::size_t>(k)] = ak;
    }
    return {std::move(b), std::move(a)};
}

template <Field T>
BivPade<T> riccati_pade(const RiccatiProblem<T>& prob, const T& c01, int n, Side side, Method method,
                        const Deadline* deadline) {
    if (n < 0) throw InputError("order must be non-negative");
    if (method == Method::refined) {
        return side == Side::left ? refined_left_pade(prob, c01, n) : right_induction_coeffs(prob, c01, n);
    }
    const BivSeries<T> s = generate_series(prob, c01, 2 * n, 2);
    return side == Side::left ? left_pade(s, n, 1, deadline) : right_pade(s, n, 1, deadline);
}

template <Field T>
std::pair<T, T> numerator_parts_at_one(const BivPade<T>& pade) {
    T n0(0);
    T n1(0);
    if (pade.side == Side::left) {
        if (!pade.A.empty()) n0 = poly_sum(pade.A[0]);
        if (pade.A.size() > 1) n1 = poly_sum(pade.A[1]);
    } else {
        for (const Poly<T>& a : pade.A) {
            n0 += a.coeff(0);
            n1 += a.coeff(1);
        }
    }
    return {n0, n1};
}

template <Field T>
C01Estimate<T> estimate_c01(const RiccatiProblem<T>& prob, int n, Side side, Method method,
                            const Deadline* deadline) {
    const BivPade<T> pade = riccati_pade(prob, T(1), n, side, method, deadline);
    const auto [n0, n1] = numerator_parts_at_one(pade);
    if (is_zero(n1)) throw DegenerateError("estimation singular at order n=" + std::to_string(n), n, 1);
    C01Estimate<T> out;
    out.value = -n0 / n1;
    out.variant = side;
    out.n = n;
    return out;
}

C01Estimate<double> estimate_c01_bisection(const RiccatiProblem<double>& prob, int n, Side side, Method method,
                                           double lo, double hi, int iterations) {
    auto residual = [&](double c) {
        const auto [n0, n1] = numerator_parts_at_one(riccati_pade(prob, c, n, side, method));
        return n0 + n1;
    };
    double flo = residual(lo);
    const double fhi = residual(hi);
    if (flo == 0) return {lo, side, n, {}};
    if (fhi == 0) return {hi, side, n, {}};
    if ((flo < 0) == (fhi < 0)) {
        throw InputError("bisection bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                         "] does not change sign");
    }
    for (int i = 0; i < iterations && hi - lo > 0; ++i) {
        const double mid = lo + (hi - lo) / 2;
        if (mid == lo || mid == hi) break;
        const double fm = residual(mid);
        if (fm == 0) return {mid, side, n, {}};
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo + (hi - lo) / 2, side, n, {}};
}

template <Field T>
std::vector<ErrorTableRow> error_table_serial(const RiccatiProblem<T>& prob, int n_max,
                                              const ErrorTableOptions& opts) {
    validate(prob);
    require_table_args(n_max, opts);
    std::vector<RowWork<T>> work;
    work.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) work.push_back(table_row(prob, n, opts.timeout_secs));
    return finish_rows(prob, work);
}

template <Field T>
std::vector<ErrorTableRow> error_table(const RiccatiProblem<T>& prob, int n_max, const ErrorTableOptions& opts) {
    if (opts.jobs <= 1) return error_table_serial(prob, n_max, opts);
    validate(prob);
    require_table_args(n_max, opts);
    std::vector<RowWork<T>> work(static_cast<std::size_t>(n_max));
    // Largest n first so the slowest rows start early.
#pragma omp parallel for schedule(dynamic, 1) num_threads(opts.jobs)
    for (int i = 0; i < n_max; ++i) {
        const int n = n_max - i;
        work[static_cast<std::size_t>(n - 1)] = table_row(prob, n, opts.timeout_secs);
    }
    return finish_rows(prob, work);
}

#define PADE_INSTANTIATE(T)                                                                                    \
    template void validate<T>(const RiccatiProblem<T>&);                                                      \
    template BivSeries<T> generate_series<T>(const RiccatiProblem<T>&, const T&, int, int);                   \
    template std::pair<T, T> explicit_jacobi_params<T>(const RiccatiProblem<T>&, int);                        \
    template std::pair<T, T> explicit_check_params<T>(const RiccatiProblem<T>&, const T&, int);               \
    template T ratio_p0<T>(const RiccatiProblem<T>&, int, int);                                               \
    template T ratio_q0<T>(const RiccatiProblem<T>&, int, int);                                               \
    template T ratio_p1<T>(const RiccatiProblem<T>&, int, int);                                               \
    template T ratio_q1<T>(const RiccatiProblem<T>&, int, int);                                               \
    template UniPade<T> riccati_univariate<T>(const RiccatiProblem<T>&, int, UniAlgorithm);                   \
    template UniPade<T> direct_coeff_ratios<T>(const RiccatiProblem<T>&, int);                                \
    template BivPade<T> refined_left_pade<T>(const RiccatiProblem<T>&, const T&, int);                        \
    template BivPade<T> right_induction_coeffs<T>(const RiccatiProblem<T>&, const T&, int, UniAlgorithm);     \
    template std::pair<std::vector<T>, std::vector<T>> right_level1_induction<T>(const BivSeries<T>&, int,    \
                                                                                 int);                        \
    template BivPade<T> riccati_pade<T>(const RiccatiProblem<T>&, const T&, int, Side, Method,                \
                                        const Deadline*);                                                     \
    template std::pair<T, T> numerator_parts_at_one<T>(const BivPade<T>&);                                    \
    template C01Estimate<T> estimate_c01<T>(const RiccatiProblem<T>&, int, Side, Method, const Deadline*);    \
    template std::vector<ErrorTableRow> error_table_serial<T>(const RiccatiProblem<T>&, int,                  \
                                                              const ErrorTableOptions&);                      \
    template std::vector<ErrorTableRow> error_table<T>(const RiccatiProblem<T>&, int, const ErrorTableOptions&);

PADE_INSTANTIATE(double)
PADE_INSTANTIATE(Rational)
#undef PADE_INSTANTIATE

}  // namespace pade
