#include "pade/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <string>

#include "pade/errors.hpp"

namespace pade {

std::string ScalarTraits<double>::to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string trimmed(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    return std::string(text.substr(b, e - b));
}

bool is_integer_literal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

mpz_class parse_integer(const std::string& s, std::string_view whole) {
    if (!is_integer_literal(s)) throw InputError("malformed rational literal '" + std::string(whole) + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = trimmed(text);
    const auto slash = s.find('/');
    Rational out;
    if (slash == std::string::npos) {
        out = Rational(parse_integer(s, text));
    } else {
        const mpz_class den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        out = Rational(parse_integer(s.substr(0, slash), text), den);
    }
    out.canonicalize();
    return out;
}

Rational parse_decimal_exact(std::string_view text) {
    const std::string s = trimmed(text);
    if (s.find('/') != std::string::npos || is_integer_literal(s)) return parse_rational(s);

    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_point = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        const char ch = s[i];
        if (ch == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits += ch;
            if (seen_point) ++frac_digits;
        } else {
            throw InputError("malformed numeric literal '" + std::string(text) + "'");
        }
    }
    if (digits.empty()) throw InputError("malformed numeric literal '" + std::string(text) + "'");
    long exponent = 0;
    if (i < s.size()) {
        const std::string exp_part = s.substr(i + 1);
        if (!is_integer_literal(exp_part)) throw InputError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::stol(exp_part);
    }
    exponent -= frac_digits;

    mpz_class num(digits, 10);
    if (negative) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    Rational out = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
    out.canonicalize();
    return out;
}

}  // namespace pade
