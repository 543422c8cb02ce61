#pragma once

// Diagonal [n/n] Padé approximants of a univariate series f(x) with
// f(0) = 0, computed by the three-term Jacobi recursion
//
//   A_n = (1 + beta_n x) A_{n-1} + alpha_n x^2 A_{n-2}
//   B_n = (1 + beta_n x) B_{n-1} + alpha_n x^2 B_{n-2}
//
// with an independent Hankel linear-solve oracle.

#include <vector>

#include "pade/linear_solve.hpp"
#include "pade/poly.hpp"
#include "pade/scalar.hpp"

namespace pade {

template <Field T>
struct UniPade {
    /// Order; -1 marks the formal seed level A = -x^{-1}, B = 0.
    int n = 0;
    Poly<T> A;
    Poly<T> B;
    /// e[k-1] = coefficient of x^{2n+k} in E_n = A - B*C_{2n}, k = 1..n.
    std::vector<T> e;

    bool is_seed() const { return n < 0; }

    /// Coefficient of x^j in E_n; zero outside 2n+1..3n except for the
    /// seed level, whose E = -x^{-1}.
    T error_coeff(int j) const {
        if (is_seed()) return j == -1 ? T(-1) : T(0);
        const int k = j - 2 * n;
        if (k < 1 || k > n) return T(0);
        return e[static_cast<std::size_t>(k - 1)];
    }

    /// E_n as a polynomial (not defined for the seed level).
    Poly<T> error_poly() const {
        Poly<T> out;
        for (int k = 1; k <= n; ++k) out.at(2 * n + k) = e[static_cast<std::size_t>(k - 1)];
        return out;
    }

    friend bool operator==(const UniPade& a, const UniPade& b) {
        return a.n == b.n && a.A == b.A && a.B == b.B && a.e == b.e;
    }

    static UniPade seed() { return UniPade{-1, Poly<T>(), Poly<T>(), {}}; }
    static UniPade zeroth() { return UniPade{0, Poly<T>{T(0)}, Poly<T>{T(1)}, {}}; }
};

/// Running state of the Jacobi recursion: the two most recent levels and
/// every (alpha_k, beta_k) computed so far.
template <Field T>
struct JacobiTrace {
    std::vector<T> c;      ///< x-coefficients c_0, c_1, ... (c_0 = 0)
    std::vector<T> alpha;  ///< alpha[k] for k >= 1; alpha[0] unused
    std::vector<T> beta;   ///< beta[k] for k >= 1; beta[0] unused
    UniPade<T> previous;   ///< level n-1
    UniPade<T> current;    ///< level n

    int level() const { return current.n; }
};

/// Starts the recursion at levels -1 and 0. Requires c_1 != 0.
template <Field T>
JacobiTrace<T> jacobi_init(std::vector<T> c);

/// Advances the trace by one level and returns the new [n/n] approximant.
/// n = 1 uses alpha_1 = -c_1, beta_1 = -c_2/c_1; n >= 2 reads alpha_n
/// from the x^{2n-1} and beta_n from the x^{2n} coefficient of E_n.
template <Field T>
const UniPade<T>& jacobi_step(JacobiTrace<T>& trace);

/// Same as jacobi_step, but with caller-supplied (alpha_n, beta_n). Used by
/// the closed-form Riccati variants.
template <Field T>
const UniPade<T>& jacobi_step_with(JacobiTrace<T>& trace, const T& alpha_n, const T& beta_n);

/// Runs the recursion from scratch up to order n.
template <Field T>
UniPade<T> jacobi_pade(const std::vector<T>& c, int n);

/// Direct solve of the x^{n+1}..x^{2n} Hankel block for B, then the
/// x^0..x^n equations for A.
template <Field T>
UniPade<T> oracle_pade(const std::vector<T>& c, int n, SingularPolicy policy = SingularPolicy::reject);

/// A - B*C_{upto} truncated to degree `max_deg`.
template <Field T>
Poly<T> defect(const Poly<T>& A, const Poly<T>& B, const std::vector<T>& c, int upto, int max_deg);

}  // namespace pade
