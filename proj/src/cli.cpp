#include "pade/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pade/bivariate.hpp"
#include "pade/errors.hpp"
#include "pade/series_io.hpp"
#include "pade/univariate.hpp"

namespace pade::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
    std::string mode;  // empty: PADE_MODE or exact
};

struct UniArgs {
    std::string file;
    int n = 0;
    std::string algo = "jacobi";
};

struct BivArgs {
    std::string file;
    int n = 0;
    int m = 0;
    std::string side = "left";
    std::string algo = "recursion";
    bool check = false;
};

struct RiccatiArgs {
    std::string alpha = "1";
    std::string beta = "1/2";
    int nmax = 10;
    double timeout = 60.0;
    std::string format = "table";
    int jobs = 1;
};

struct BenchArgs {
    std::string alpha = "1";
    std::string beta = "1/2";
    int nmax = 10;
    int repeats = 5;
    std::string format = "csv";
};

struct SeriesArgs {
    std::string alpha = "1";
    std::string beta = "1/2";
    std::string c01 = "1";
    int N = 4;
    int M = 2;
    std::string name;
};

std::string resolve_mode(const std::string& flag, const char* env_mode) {
    std::string mode = flag;
    if (mode.empty() && env_mode != nullptr && *env_mode != '\0') mode = env_mode;
    if (mode.empty()) mode = "exact";
    if (mode != "exact" && mode != "float") {
        throw InputError("mode must be 'exact' or 'float', got '" + mode + "'");
    }
    return mode;
}

template <Field T>
T parse_param(const std::string& text, const char* what) {
    try {
        const Rational r = parse_decimal_exact(text);
        if constexpr (ScalarTraits<T>::exact) {
            return r;
        } else {
            if (text.find('/') == std::string::npos) return std::strtod(text.c_str(), nullptr);
            return r.get_d();
        }
    } catch (const InputError&) {
        throw InputError(std::string(what) + ": cannot parse '" + text + "'");
    }
}

template <Field T>
std::string format_list(const std::vector<T>& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + "]";
}

template <Field T>
std::string format_poly(const Poly<T>& p, int min_len) {
    const std::size_t len = std::max(p.size(), static_cast<std::size_t>(std::max(min_len, 1)));
    return format_list(p.coeffs_padded(len));
}

std::string format_sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string format_secs(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string opt_sci(const std::optional<double>& v) { return v ? format_sci(*v) : "?"; }
std::string opt_secs(const std::optional<double>& v) { return v ? format_secs(*v) : "?"; }

// --- uni --------------------------------------------------------------------

template <Field T>
int cmd_uni(const UniArgs& a, std::ostream& out) {
    const SeriesFile<T> f = read_series_file<T>(a.file);
    if (a.n < 0) throw InputError("order n must be non-negative");
    const std::vector<T> c = f.series.column(0);
    UniPade<T> res;
    res = a.algo == "jacobi" ? jacobi_pade(c, a.n) : oracle_pade(c, a.n);
    out << "A: " << format_poly(res.A, a.n + 1) << "  B: " << format_poly(res.B, a.n + 1) << "\n";
    if (!res.e.empty()) out << "e: " << format_list(res.e) << "\n";
    return exit_ok;
}

// --- biv --------------------------------------------------------------------

template <Field T>
bool close_matrices(const std::vector<std::vector<T>>& a, const std::vector<std::vector<T>>& b) {
    if (a.size() != b.size()) return false;
    double scale = 0;
    for (const auto& row : a)
        for (const T& v : row) scale = std::max(scale, std::abs(to_double(v)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if constexpr (ScalarTraits<T>::exact) {
                if (!(a[i][j] == b[i][j])) return false;
            } else {
                if (std::abs(a[i][j] - b[i][j]) > 1e-9 * std::max(scale, 1.0)) return false;
            }
        }
    }
    return true;
}

template <Field T>
BivPade<T> build_biv(const BivSeries<T>& s, int n, int m, Side side, bool oracle) {
    if (side == Side::left) return oracle ? oracle_left_pade(s, n, m) : left_pade(s, n, m);
    return oracle ? oracle_right_pade(s, n, m) : right_pade(s, n, m);
}

template <Field T>
int cmd_biv(const BivArgs& a, std::ostream& out, std::ostream& err) {
    const SeriesFile<T> f = read_series_file<T>(a.file);
    const Side side = a.side == "left" ? Side::left : Side::right;
    const bool oracle = a.algo == "oracle";
    const BivPade<T> res = build_biv(f.series, a.n, a.m, side, oracle);

    out << side_name(side) << "-(" << a.n << "," << a.m << ")";
    if (side == Side::left) {
        out << "  A_p(x), B_p(x) multiply y^p\n";
    } else {
        out << "  A_p(y), B_p(y) multiply x^p\n";
    }
    const int inner = side == Side::left ? a.n : a.m;
    for (std::size_t p = 0; p < res.A.size(); ++p) {
        out << "p=" << p << "  A: " << format_poly(res.A[p], inner + 1) << "  B: " << format_poly(res.B[p], inner + 1)
            << "\n";
    }
    if (a.check) {
        const BivPade<T> other = build_biv(f.series, a.n, a.m, side, !oracle);
        const bool same = close_matrices(res.numerator_coeffs(), other.numerator_coeffs()) &&
                          close_matrices(res.denominator_coeffs(), other.denominator_coeffs());
        if (!same) {
            err << "check failed: recursion and oracle differ\n";
            return exit_check_failed;
        }
        out << "check: recursion and oracle agree\n";
    }
    return exit_ok;
}

// --- riccati ----------------------------------------------------------------

TableFormat parse_format(const std::string& s) {
    if (s == "table") return TableFormat::table;
    if (s == "csv") return TableFormat::csv;
    return TableFormat::json;
}

template <Field T>
int cmd_riccati(const RiccatiArgs& a, const std::string& mode, std::ostream& out, std::ostream& err) {
    const RiccatiProblem<T> prob{parse_param<T>(a.alpha, "--alpha"), parse_param<T>(a.beta, "--beta")};
    validate(prob);
    if (a.nmax < 1) throw InputError("--nmax must be at least 1");
    if (a.jobs < 1) throw InputError("--jobs must be at least 1");
    ErrorTableOptions opts;
    opts.timeout_secs = a.timeout;
    opts.jobs = a.jobs;
    const std::vector<ErrorTableRow> rows = error_table(prob, a.nmax, opts);
    const HighPrec ce = exact_c01(to_real<HighPrec>(prob.alpha), to_real<HighPrec>(prob.beta));
    const TableMeta meta{{"alpha", to_string(prob.alpha)},
                         {"beta", to_string(prob.beta)},
                         {"mode", mode},
                         {"c01_exact", ce.str(30)}};
    const TableFormat fmt = parse_format(a.format);
    out << format_error_table(rows, fmt, meta);
    if (fmt == TableFormat::csv) {
        for (const auto& r : rows)
            if (!r.note.empty()) err << "note: n=" << r.n << ": " << r.note << "\n";
    }
    return exit_ok;
}

// --- bench ------------------------------------------------------------------

double median_seconds(const std::function<void()>& f, int repeats) {
    std::vector<double> t;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(t.begin(), t.end());
    const std::size_t h = t.size() / 2;
    return t.size() % 2 == 1 ? t[h] : (t[h - 1] + t[h]) / 2;
}

template <Field T>
int cmd_bench(const BenchArgs& a, std::ostream& out) {
    const RiccatiProblem<T> prob{parse_param<T>(a.alpha, "--alpha"), parse_param<T>(a.beta, "--beta")};
    validate(prob);
    if (a.nmax < 1) throw InputError("--nmax must be at least 1");
    if (a.repeats < 1) throw InputError("--repeats must be at least 1");
    const int n = a.nmax;

    std::vector<std::pair<std::string, std::function<void()>>> variants;
    for (UniAlgorithm u : {UniAlgorithm::general, UniAlgorithm::explicit_params, UniAlgorithm::direct_ratios}) {
        variants.emplace_back(std::string("uni_") + uni_algorithm_name(u),
                              [&prob, n, u] { riccati_univariate(prob, n, u); });
    }
    for (Side s : {Side::left, Side::right}) {
        for (Method m : {Method::general, Method::refined}) {
            variants.emplace_back(std::string(side_name(s)) + "_" + method_name(m),
                                  [&prob, n, s, m] { estimate_c01(prob, n, s, m); });
        }
    }

    ordered_json rows = ordered_json::array();
    if (a.format == "csv") out << "variant,n,repeats,median_s\n";
    for (const auto& [name, f] : variants) {
        const double med = median_seconds(f, a.repeats);
        if (a.format == "csv") {
            out << name << "," << n << "," << a.repeats << "," << format_secs(med) << "\n";
        } else {
            ordered_json r;
            r["variant"] = name;
            r["n"] = n;
            r["repeats"] = a.repeats;
            r["median_s"] = med;
            rows.push_back(std::move(r));
        }
    }
    if (a.format == "json") {
        ordered_json doc;
        doc["alpha"] = to_string(prob.alpha);
        doc["beta"] = to_string(prob.beta);
        doc["results"] = std::move(rows);
        out << doc.dump(2) << "\n";
    }
    return exit_ok;
}

// --- series -----------------------------------------------------------------

template <Field T>
int cmd_series(const SeriesArgs& a, std::ostream& out) {
    const RiccatiProblem<T> prob{parse_param<T>(a.alpha, "--alpha"), parse_param<T>(a.beta, "--beta")};
    const T c01 = parse_param<T>(a.c01, "--c01");
    SeriesFile<T> f;
    f.name = a.name.empty() ? "riccati alpha=" + a.alpha + " beta=" + a.beta : a.name;
    f.series = generate_series(prob, c01, a.N, a.M);
    out << series_to_json(f);
    return exit_ok;
}

// --- dispatch ---------------------------------------------------------------

int guarded(std::ostream& err, const std::function<int()>& f) {
    try {
        return f();
    } catch (const DegenerateError& e) {
        err << "degenerate: " << e.what() << "\n";
        return exit_degenerate;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_failure;
    }
}

template <typename F>
int by_mode(const std::string& mode, F&& f) {
    return mode == "exact" ? f(Rational()) : f(double());
}

}  // namespace

std::string format_error_table(const std::vector<ErrorTableRow>& rows, TableFormat format, const TableMeta& meta) {
    std::ostringstream out;
    switch (format) {
        case TableFormat::csv:
            out << "n,err_left,err_right,time_general_s,time_refined_s\n";
            for (const auto& r : rows) {
                out << r.n << "," << opt_sci(r.err_left) << "," << opt_sci(r.err_right) << ","
                    << opt_secs(r.time_general) << "," << opt_secs(r.time_refined) << "\n";
            }
            break;
        case TableFormat::table: {
            for (const auto& [k, v] : meta) out << k << " = " << v << "\n";
            char buf[256];
            std::snprintf(buf, sizeof buf, "%4s  %13s  %13s  %14s  %14s\n", "n", "err_left", "err_right",
                          "time_general_s", "time_refined_s");
            out << buf;
            for (const auto& r : rows) {
                std::snprintf(buf, sizeof buf, "%4d  %13s  %13s  %14s  %14s", r.n, opt_sci(r.err_left).c_str(),
                              opt_sci(r.err_right).c_str(), opt_secs(r.time_general).c_str(),
                              opt_secs(r.time_refined).c_str());
                out << buf;
                if (!r.note.empty()) out << "  " << r.note;
                out << "\n";
            }
            break;
        }
        case TableFormat::json: {
            ordered_json doc;
            for (const auto& [k, v] : meta) doc[k] = v;
            ordered_json arr = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json j;
                j["n"] = r.n;
                j["err_left"] = r.err_left ? ordered_json(*r.err_left) : ordered_json("?");
                j["err_right"] = r.err_right ? ordered_json(*r.err_right) : ordered_json("?");
                j["time_general_s"] = r.time_general ? ordered_json(*r.time_general) : ordered_json("?");
                j["time_refined_s"] = r.time_refined ? ordered_json(*r.time_refined) : ordered_json("?");
                j["note"] = r.note;
                arr.push_back(std::move(j));
            }
            doc["rows"] = std::move(arr);
            out << doc.dump(2) << "\n";
            break;
        }
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_mode) {
    CLI::App app{"Padé approximants of univariate and bivariate series", "pade"};
    app.require_subcommand(1);

    Common common;
    UniArgs uni;
    BivArgs biv;
    RiccatiArgs ric;
    BenchArgs bench;
    SeriesArgs ser;

    auto add_mode = [&common](CLI::App* sub) {
        sub->add_option("--mode", common.mode, "exact (rationals) or float; default from PADE_MODE, else exact")
            ->check(CLI::IsMember({"exact", "float"}));
    };

    CLI::App* u = app.add_subcommand("uni", "[n/n] Padé approximant of the x-axis series c[.][0]");
    u->add_option("file", uni.file, "series JSON file")->required();
    u->add_option("n", uni.n, "order")->required();
    u->add_option("--algo", uni.algo)->check(CLI::IsMember({"jacobi", "oracle"}));
    add_mode(u);

    CLI::App* b = app.add_subcommand("biv", "left- or right-(n,m) bivariate approximant");
    b->add_option("file", biv.file, "series JSON file")->required();
    b->add_option("n", biv.n, "order in x")->required();
    b->add_option("m", biv.m, "order in y")->required();
    b->add_option("--side", biv.side)->check(CLI::IsMember({"left", "right"}));
    b->add_option("--algo", biv.algo)->check(CLI::IsMember({"recursion", "oracle"}));
    b->add_flag("--check", biv.check, "also run the other algorithm and require equality");
    add_mode(b);

    CLI::App* r = app.add_subcommand("riccati", "c01 estimates and timings for x w' - beta w + beta w^2 + alpha x = 0");
    r->add_option("--alpha", ric.alpha);
    r->add_option("--beta", ric.beta);
    r->add_option("--nmax", ric.nmax);
    r->add_option("--timeout-secs", ric.timeout, "budget per general-method cell");
    r->add_option("--format", ric.format)->check(CLI::IsMember({"table", "csv", "json"}));
    r->add_option("--jobs", ric.jobs, "rows computed concurrently");
    add_mode(r);

    CLI::App* be = app.add_subcommand("bench", "median timings of the Riccati algorithms at n = nmax");
    be->add_option("--alpha", bench.alpha);
    be->add_option("--beta", bench.beta);
    be->add_option("--nmax", bench.nmax);
    be->add_option("--repeats", bench.repeats);
    be->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));
    add_mode(be);

    CLI::App* s = app.add_subcommand("series", "write the Riccati series as a series file");
    s->add_option("--alpha", ser.alpha);
    s->add_option("--beta", ser.beta);
    s->add_option("--c01", ser.c01);
    s->add_option("--N", ser.N);
    s->add_option("--M", ser.M);
    s->add_option("--name", ser.name);
    add_mode(s);

    std::vector<std::string> argv_store{"pade"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }

    return guarded(err, [&]() -> int {
        const std::string mode = resolve_mode(common.mode, env_mode);
        if (u->parsed()) return by_mode(mode, [&](auto t) { return cmd_uni<decltype(t)>(uni, out); });
        if (b->parsed()) return by_mode(mode, [&](auto t) { return cmd_biv<decltype(t)>(biv, out, err); });
        if (r->parsed()) return by_mode(mode, [&](auto t) { return cmd_riccati<decltype(t)>(ric, mode, out, err); });
        if (be->parsed()) return by_mode(mode, [&](auto t) { return cmd_bench<decltype(t)>(bench, out); });
        return by_mode(mode, [&](auto t) { return cmd_series<decltype(t)>(ser, out); });
    });
}

}  // namespace pade::cli
