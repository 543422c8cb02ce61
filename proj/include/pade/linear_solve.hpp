#pragma once

// Dense Gaussian elimination over a scalar field. Used by the oracle paths
// only; the recursive algorithms never build a matrix.

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "pade/scalar.hpp"

namespace pade {

/// What to do when a square block is singular.
enum class SingularPolicy {
    reject,      ///< report failure
    particular,  ///< if consistent, return the solution with free unknowns = 0
};

template <Field T>
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> data;

    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T(0)) {}

    T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

namespace detail {

template <Field T>
double pivot_magnitude(const T& x) {
    if constexpr (ScalarTraits<T>::exact) {
        return is_zero(x) ? 0.0 : 1.0;
    } else {
        return std::fabs(to_double(x));
    }
}

}  // namespace detail

/// Solves A x = b. Exact fields take the first nonzero pivot; doubles use
/// partial pivoting. Returns nullopt when the system is singular and the
/// policy rejects it, or when it is inconsistent.
template <Field T>
std::optional<std::vector<T>> solve_dense(DenseMatrix<T> a, std::vector<T> b,
                                          SingularPolicy policy = SingularPolicy::reject) {
    const std::size_t rows = a.rows;
    const std::size_t cols = a.cols;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t best = rows;
        double best_mag = 0.0;
        for (std::size_t i = r; i < rows; ++i) {
            const double mag = detail::pivot_magnitude(a(i, col));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
                if constexpr (ScalarTraits<T>::exact) break;
            }
        }
        if (best == rows) {
            if (policy == SingularPolicy::reject) return std::nullopt;
            continue;
        }
        if (best != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(best, j));
            std::swap(b[r], b[best]);
        }
        const T piv = a(r, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a(i, col))) continue;
            const T f = a(i, col) / piv;
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    if (pivot_cols.size() < cols && policy == SingularPolicy::reject) return std::nullopt;
    for (std::size_t i = r; i < rows; ++i) {
        if (!is_zero(b[i])) return std::nullopt;
    }
    std::vector<T> x(cols, T(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i] / a(i, pivot_cols[i]);
    return x;
}

}  // namespace pade
