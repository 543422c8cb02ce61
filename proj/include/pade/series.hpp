#pragma once

// Truncated bivariate power series f(x, y) = sum c[n][m] x^n y^m, c[0][0] = 0.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pade/errors.hpp"
#include "pade/poly.hpp"
#include "pade/scalar.hpp"

namespace pade {

/// Orders of a coefficient table: entries exist for n <= x_order, m <= y_order.
struct SeriesOrders {
    int x_order = 0;
    int y_order = 0;
    friend bool operator==(const SeriesOrders&, const SeriesOrders&) = default;
};

/// Orders a series must have for the left-(n, m) approximant to be computable.
///
/// The x^0..x^{2n} equations read c[i][j] for i <= 2n, j <= m, and the
/// y-axis seeds read c[0][j] for j <= 2m. A dense table therefore needs
/// (2n, 2m); for m = 0 this is (2n, 0).
inline SeriesOrders required_orders(int n, int m) { return {2 * n, 2 * m}; }

template <Field T>
class BivSeries {
public:
    BivSeries() : BivSeries(0, 0) {}

    /// Zero-filled table of orders (N, M).
    BivSeries(int N, int M) : N_(N), M_(M) {
        if (N < 0 || M < 0) throw InputError("series orders must be non-negative");
        c_.assign(static_cast<std::size_t>(N + 1) * static_cast<std::size_t>(M + 1), T(0));
    }

    int x_order() const { return N_; }
    int y_order() const { return M_; }
    SeriesOrders orders() const { return {N_, M_}; }

    /// Coefficient of x^n y^m. Negative indices read as zero; indices past
    /// the stored orders raise InputError.
    T operator()(int n, int m) const {
        if (n < 0 || m < 0) return T(0);
        if (n > N_ || m > M_) {
            throw InputError("series coefficient c[" + std::to_string(n) + "][" + std::to_string(m) +
                             "] requested but the series only has orders (" + std::to_string(N_) + ", " +
                             std::to_string(M_) + ")");
        }
        return c_[index(n, m)];
    }

    void set(int n, int m, T value) {
        if (n < 0 || m < 0 || n > N_ || m > M_) throw InputError("series index out of range");
        c_[index(n, m)] = std::move(value);
    }

    /// Fails with a message naming the orders needed for left-(n, m) (or
    /// right-(n, m), which needs the same table).
    void require_for_left(int n, int m, const char* variant = "left") const {
        const SeriesOrders need = required_orders(n, m);
        if (N_ < need.x_order || M_ < need.y_order) {
            throw InputError("order-insufficient series: " + std::string(variant) + "-(" + std::to_string(n) + "," + std::to_string(m) +
                             ") requires orders (N, M) >= (" + std::to_string(need.x_order) + ", " +
                             std::to_string(need.y_order) + "), got (" + std::to_string(N_) + ", " +
                             std::to_string(M_) + ")");
        }
    }

    /// C_{up_to, m}(x) = sum_{i=0}^{up_to} c[i][m] x^i.
    Poly<T> slice_x(int up_to, int m) const {
        if (up_to > N_ || m > M_ || m < 0) {
            throw InputError("order-insufficient series: slice needs (N, M) >= (" + std::to_string(up_to) + ", " +
                             std::to_string(m) + "), got (" + std::to_string(N_) + ", " + std::to_string(M_) +
                             ")");
        }
        std::vector<T> out;
        out.reserve(static_cast<std::size_t>(up_to) + 1);
        for (int i = 0; i <= up_to; ++i) out.push_back(c_[index(i, m)]);
        return Poly<T>(std::move(out));
    }

    /// Coefficients c[0..N][m] of the column m.
    std::vector<T> column(int m) const { return slice_x(N_, m).coeffs(); }

    /// Coefficients c[n][0..M] of the row n.
    std::vector<T> row(int n) const {
        std::vector<T> out;
        for (int m = 0; m <= M_; ++m) out.push_back((*this)(n, m));
        return out;
    }

    friend bool operator==(const BivSeries& a, const BivSeries& b) {
        return a.N_ == b.N_ && a.M_ == b.M_ && a.c_ == b.c_;
    }

private:
    std::size_t index(int n, int m) const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(M_ + 1) + static_cast<std::size_t>(m);
    }

    int N_;
    int M_;
    std::vector<T> c_;
};

/// f^T(x, y) = f(y, x).
template <Field T>
BivSeries<T> transpose(const BivSeries<T>& s) {
    BivSeries<T> out(s.y_order(), s.x_order());
    for (int n = 0; n <= s.x_order(); ++n)
        for (int m = 0; m <= s.y_order(); ++m) out.set(m, n, s(n, m));
    return out;
}

/// Series f(x, 0) built from x-coefficients c[0..]; c[0] must be zero.
template <Field T>
BivSeries<T> series_from_x_coeffs(const std::vector<T>& c) {
    BivSeries<T> s(static_cast<int>(c.size()) - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) s.set(static_cast<int>(i), 0, c[i]);
    return s;
}

/// Converts an exact table to another realization.
template <Field T>
BivSeries<T> convert_series(const BivSeries<Rational>& s) {
    BivSeries<T> out(s.x_order(), s.y_order());
    for (int n = 0; n <= s.x_order(); ++n)
        for (int m = 0; m <= s.y_order(); ++m) out.set(n, m, ScalarTraits<T>::from_rational(s(n, m)));
    return out;
}

}  // namespace pade
