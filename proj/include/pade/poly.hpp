#pragma once

// Dense univariate polynomials over a scalar field.

#include <algorithm>
#include <climits>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <utility>
#include <vector>

#include "pade/scalar.hpp"

namespace pade {

template <Field T>
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = INT_MIN;

    Poly() = default;
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) {}
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {}

    static Poly constant(const T& value) { return Poly(std::vector<T>{value}); }

    /// The monomial s*x^power.
    static Poly monomial(int power, const T& s) {
        std::vector<T> c(static_cast<std::size_t>(power) + 1, T(0));
        c.back() = s;
        return Poly(std::move(c));
    }

    /// Highest index with a nonzero coefficient, or kZeroDegree.
    int degree() const {
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (!is_zero(c_[i])) return static_cast<int>(i);
        }
        return kZeroDegree;
    }

    bool is_zero_poly() const { return degree() == kZeroDegree; }

    /// Coefficient of x^i; zero outside the stored range (including i < 0).
    T coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return T(0);
        return c_[static_cast<std::size_t>(i)];
    }

    /// Mutable access; grows storage with zeros as needed.
    T& at(int i) {
        if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1, T(0));
        return c_[static_cast<std::size_t>(i)];
    }

    std::size_t size() const { return c_.size(); }
    const std::vector<T>& coeffs() const { return c_; }

    /// Coefficients padded or cut to exactly `len` entries.
    std::vector<T> coeffs_padded(std::size_t len) const {
        std::vector<T> out(len, T(0));
        for (std::size_t i = 0; i < std::min(len, c_.size()); ++i) out[i] = c_[i];
        return out;
    }

    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    /// Logical equality: trailing zeros are ignored.
    friend bool operator==(const Poly& p, const Poly& q) {
        const std::size_t n = std::max(p.c_.size(), q.c_.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (!(p.coeff(static_cast<int>(i)) == q.coeff(static_cast<int>(i)))) return false;
        }
        return true;
    }

    friend Poly operator+(const Poly& p, const Poly& q) { return poly_add(p, q); }
    friend Poly operator-(const Poly& p, const Poly& q) {
        const std::size_t n = std::max(p.c_.size(), q.c_.size());
        std::vector<T> out(n, T(0));
        for (std::size_t i = 0; i < n; ++i) out[i] = p.coeff(static_cast<int>(i)) - q.coeff(static_cast<int>(i));
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& p) {
        std::vector<T> out(p.c_.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = -p.c_[i];
        return Poly(std::move(out));
    }

    friend Poly poly_add(const Poly& p, const Poly& q) {
        const std::size_t n = std::max(p.c_.size(), q.c_.size());
        std::vector<T> out(n, T(0));
        for (std::size_t i = 0; i < n; ++i) out[i] = p.coeff(static_cast<int>(i)) + q.coeff(static_cast<int>(i));
        return Poly(std::move(out));
    }

private:
    std::vector<T> c_;
};

/// p*q with every term of degree > max_deg discarded.
template <Field T>
Poly<T> poly_mul_truncated(const Poly<T>& p, const Poly<T>& q, int max_deg) {
    if (max_deg < 0) return Poly<T>();
    const int dp = std::min(static_cast<int>(p.size()) - 1, max_deg);
    const int dq = std::min(static_cast<int>(q.size()) - 1, max_deg);
    if (dp < 0 || dq < 0) return Poly<T>();
    std::vector<T> out(static_cast<std::size_t>(std::min(dp + dq, max_deg)) + 1, T(0));
    for (int i = 0; i <= dp; ++i) {
        const T& a = p.coeffs()[static_cast<std::size_t>(i)];
        if (is_zero(a)) continue;
        for (int j = 0; j <= dq && i + j <= max_deg; ++j) {
            out[static_cast<std::size_t>(i + j)] += a * q.coeffs()[static_cast<std::size_t>(j)];
        }
    }
    return Poly<T>(std::move(out));
}

/// s * x^power * p.
template <Field T>
Poly<T> poly_shift_scale(const Poly<T>& p, int power, const std::type_identity_t<T>& s) {
    std::vector<T> out(p.size() + static_cast<std::size_t>(power), T(0));
    for (std::size_t i = 0; i < p.size(); ++i) out[i + static_cast<std::size_t>(power)] = s * p.coeffs()[i];
    return Poly<T>(std::move(out));
}

/// Horner evaluation.
template <Field T>
T poly_eval(const Poly<T>& p, const std::type_identity_t<T>& x0) {
    T acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x0 + p.coeffs()[i];
    return acc;
}

/// acc += s * x^power * p, in place.
template <Field T>
void poly_axpy_shifted(Poly<T>& acc, const Poly<T>& p, int power, const std::type_identity_t<T>& s) {
    if (is_zero(s)) return;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc.at(static_cast<int>(i) + power) += s * p.coeffs()[i];
    }
}

}  // namespace pade
