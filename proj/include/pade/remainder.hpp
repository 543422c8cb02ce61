#pragma once

// Canonical decomposition of a two-term remainder against the univariate
// approximants of f(x, 0):
//
//   s_odd x^{2n-1} + s_even x^{2n}
//       = A^{(n)}[s] - B^{(n)}[s] C_{2n,0} + sum_{k=1}^{n} tau_{2n+k}[s] x^{2n+k}
//
// with A^{(n)} = x b* A_{n-1,0} + x^2 b*' A_{n-2,0} (same for B), where
// b* = F_odd s_odd + F_even s_even and b*' = F_prev s_odd. The components
// F and tau depend only on the series and the level n, never on s.

#include <type_traits>
#include <vector>

#include "pade/poly.hpp"
#include "pade/scalar.hpp"
#include "pade/univariate.hpp"

namespace pade {

template <Field T>
struct RemainderComponents {
    int n = 0;
    T F_odd;   ///< F^{(n)}_{2n-1}
    T F_even;  ///< F^{(n)}_{2n}
    T F_prev;  ///< F^{(n-1)}_{2(n-1)}
    std::vector<T> tau_odd;   ///< tau^{(n)}_{2n+k,2n-1}, k = 1..n
    std::vector<T> tau_even;  ///< tau^{(n)}_{2n+k,2n},   k = 1..n
};

template <Field T>
struct RemainderCorrection {
    Poly<T> A;
    Poly<T> B;
    std::vector<T> tau;  ///< tau_{2n+k}, k = 1..n
    T b_star;            ///< coefficient of x A_{n-1,0}
    T b_star_prev;       ///< coefficient of x^2 A_{n-2,0}
};

/// Components at level n from the univariate levels n-1 (`lvl1`) and n-2
/// (`lvl2`, the seed level when n = 1) and the components of level n-1
/// (ignored when n = 1). `c` holds the x-coefficients c_{k,0}.
template <Field T>
RemainderComponents<T> remainder_components(int n, const std::vector<T>& c, const UniPade<T>& lvl1,
                                            const UniPade<T>& lvl2,
                                            const std::type_identity_t<RemainderComponents<T>>* previous);

template <Field T>
RemainderCorrection<T> apply_remainder(const RemainderComponents<T>& comp, const T& sigma_odd,
                                       const T& sigma_even, const UniPade<T>& lvl1, const UniPade<T>& lvl2);

}  // namespace pade
