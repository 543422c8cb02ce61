#pragma once

// JSON series files:
//
//   {"name": "...", "N": 4, "M": 2, "entries": [[0, 0, "0"], [0, 1, "1/2"], ...]}
//
// Every (n, m) with n <= N, m <= M appears exactly once and c[0][0] = 0.
// Values are "p/q" strings or integers; decimal literals are accepted only
// when reading into double.

#include <string>

#include "pade/scalar.hpp"
#include "pade/series.hpp"

namespace pade {

template <Field T>
struct SeriesFile {
    std::string name;
    BivSeries<T> series;
};

/// Parses file contents. Throws InputError naming the offending entry.
template <Field T>
SeriesFile<T> parse_series_json(const std::string& text);

template <Field T>
SeriesFile<T> read_series_file(const std::string& path);

/// Entries in (n, m) row-major order; exact values as "p/q", doubles with
/// 17 significant digits.
template <Field T>
std::string series_to_json(const SeriesFile<T>& file);

}  // namespace pade
