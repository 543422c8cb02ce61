#include "pade/series_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "pade/errors.hpp"

namespace pade {

namespace {

using nlohmann::ordered_json;

bool is_decimal_literal(const std::string& s) {
    return s.find_first_of(".eE") != std::string::npos;
}

template <Field T>
T parse_value(const ordered_json& v, int n, int m) {
    const std::string where = "entry (" + std::to_string(n) + ", " + std::to_string(m) + ")";
    std::string text;
    if (v.is_string()) {
        text = v.get<std::string>();
    } else if (v.is_number_integer()) {
        text = std::to_string(v.get<long long>());
    } else if (v.is_number_float()) {
        if constexpr (ScalarTraits<T>::exact) {
            throw InputError(where + ": decimal values need float mode; write \"p/q\"");
        } else {
            return v.get<double>();
        }
    } else {
        throw InputError(where + ": value must be a \"p/q\" string or a number");
    }
    try {
        if constexpr (ScalarTraits<T>::exact) {
            if (is_decimal_literal(text)) throw InputError("decimal values need float mode; write \"p/q\"");
            return parse_rational(text);
        } else {
            if (is_decimal_literal(text)) {
                char* end = nullptr;
                const double d = std::strtod(text.c_str(), &end);
                if (end == text.c_str() || *end != '\0') throw InputError("malformed number \"" + text + "\"");
                return d;
            }
            return parse_rational(text).get_d();
        }
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

int read_order(const ordered_json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw InputError(std::string("series file: \"") + key + "\" must be a non-negative integer");
    }
    const long long v = doc[key].get<long long>();
    if (v < 0 || v > 100000) throw InputError(std::string("series file: \"") + key + "\" out of range");
    return static_cast<int>(v);
}

}  // namespace

template <Field T>
SeriesFile<T> parse_series_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("series file: malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("series file: top level must be an object");

    SeriesFile<T> out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("series file: \"name\" must be a string");
        out.name = doc["name"].get<std::string>();
    }
    const int N = read_order(doc, "N");
    const int M = read_order(doc, "M");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        throw InputError("series file: \"entries\" must be an array");
    }

    out.series = BivSeries<T>(N, M);
    std::vector<char> seen(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(M + 1), 0);
    for (const auto& e : doc["entries"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("series file: each entry must be [n, m, value]");
        }
        const long long n = e[0].get<long long>();
        const long long m = e[1].get<long long>();
        if (n < 0 || m < 0 || n > N || m > M) {
            throw InputError("series file: entry (" + std::to_string(n) + ", " + std::to_string(m) +
                             ") outside the declared orders (" + std::to_string(N) + ", " + std::to_string(M) + ")");
        }
        const int ni = static_cast<int>(n);
        const int mi = static_cast<int>(m);
        char& flag = seen[static_cast<std::size_t>(ni) * static_cast<std::size_t>(M + 1) + static_cast<std::size_t>(mi)];
        if (flag) {
            throw InputError("series file: duplicate entry (" + std::to_string(n) + ", " + std::to_string(m) + ")");
        }
        flag = 1;
        out.series.set(ni, mi, parse_value<T>(e[2], ni, mi));
    }
    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= M; ++m) {
            if (!seen[static_cast<std::size_t>(n) * static_cast<std::size_t>(M + 1) + static_cast<std::size_t>(m)]) {
                throw InputError("series file: missing entry (" + std::to_string(n) + ", " + std::to_string(m) + ")");
            }
        }
    }
    if (!is_zero(out.series(0, 0))) throw InputError("invalid series: c_{0,0} must be 0");
    return out;
}

template <Field T>
SeriesFile<T> read_series_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open series file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_series_json<T>(ss.str());
}

template <Field T>
std::string series_to_json(const SeriesFile<T>& file) {
    ordered_json doc;
    doc["name"] = file.name;
    doc["N"] = file.series.x_order();
    doc["M"] = file.series.y_order();
    ordered_json entries = ordered_json::array();
    for (int n = 0; n <= file.series.x_order(); ++n) {
        for (int m = 0; m <= file.series.y_order(); ++m) {
            entries.push_back(ordered_json::array({n, m, to_string(file.series(n, m))}));
        }
    }
    doc["entries"] = std::move(entries);
    return doc.dump(2) + "\n";
}

template SeriesFile<double> parse_series_json<double>(const std::string&);
template SeriesFile<Rational> parse_series_json<Rational>(const std::string&);
template SeriesFile<double> read_series_file<double>(const std::string&);
template SeriesFile<Rational> read_series_file<Rational>(const std::string&);
template std::string series_to_json<double>(const SeriesFile<double>&);
template std::string series_to_json<Rational>(const SeriesFile<Rational>&);

}  // namespace pade
