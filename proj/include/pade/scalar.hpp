#pragma once

// Scalar field realizations: exact rationals (GMP) and IEEE doubles.
//
// Every algorithm in the library is a template over a type satisfying
// `Field`; the two supported instantiations are `Rational` and `double`.

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace pade {

using Rational = mpq_class;

template <typename T>
concept Field = requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
};

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "float";

    static bool is_zero(double x) { return x == 0.0; }
    static double from_ratio(std::int64_t p, std::int64_t q) {
        return static_cast<double>(p) / static_cast<double>(q);
    }
    static double from_rational(const Rational& r) { return r.get_d(); }
    static double to_double(double x) { return x; }
    static std::string to_string(double x);
};

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "exact";

    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational from_ratio(std::int64_t p, std::int64_t q) {
        Rational r(static_cast<long>(p), static_cast<long>(q));
        r.canonicalize();
        return r;
    }
    static Rational from_rational(const Rational& r) { return r; }
    static double to_double(const Rational& x) { return x.get_d(); }
    static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <typename T>
bool is_zero(const T& x) {
    return ScalarTraits<T>::is_zero(x);
}

template <typename T>
double to_double(const T& x) {
    return ScalarTraits<T>::to_double(x);
}

template <typename T>
std::string to_string(const T& x) {
    return ScalarTraits<T>::to_string(x);
}

template <typename T>
T from_ratio(std::int64_t p, std::int64_t q = 1) {
    return ScalarTraits<T>::from_ratio(p, q);
}

/// Parses "p/q" or an integer into an exact rational. Throws InputError.
Rational parse_rational(std::string_view text);

/// Parses "p/q", an integer, or a decimal literal ("0.5", "1e-3") exactly.
/// Decimal literals are converted digit by digit, never through a double.
Rational parse_decimal_exact(std::string_view text);

}  // namespace pade
