#pragma once

// Rectangular bivariate Padé approximants
//
//   f^L_{n,m}(x, y) = sum_p A_{n,p}(x) y^p / sum_p B_{n,p}(x) y^p,  p = 0..m,
//
// where each A_{n,p}, B_{n,p} has degree <= n in x and
//
//   A_{n,p} - sum_{s<=p} B_{n,s} C_{2n,p-s} = O(x^{2n+1}).
//
// The constants B_{n,p}(0) are fixed by the [m/m] approximant of f(0, y).
// For each step k the levels p = 0..m obey
//
//   A_{k,p} = A_{k-1,p} + sum_{q=0}^{p} (x u_{k,q} A_{k-1,p-q} + x^2 v_{k,q} A_{k-2,p-q})
//
// with u_{k,0} = beta_k, v_{k,0} = alpha_k (the univariate parameters of
// f(x, 0)) and u_{k,q}, v_{k,q} (q >= 1) obtained from the two-term
// remainder at x^{2k-1}, x^{2k}. The same u, v serve every level, which is
// the copy rule: the coefficient of A_{k-1,p'} at level p is u_{k,p-p'}.

#include <utility>
#include <vector>

#include "pade/deadline.hpp"
#include "pade/linear_solve.hpp"
#include "pade/poly.hpp"
#include "pade/remainder.hpp"
#include "pade/scalar.hpp"
#include "pade/series.hpp"
#include "pade/univariate.hpp"

namespace pade {

enum class Side { left, right };

const char* side_name(Side s);

template <Field T>
struct Seeds {
    std::vector<T> a0;  ///< a0[p], p = 0..m; a0[0] = 0
    std::vector<T> b0;  ///< b0[p], p = 0..m; b0[0] = 1
};

/// u[k][q] = check_beta^{k,q}_0, v[k][q] = check_alpha^{k,q}_0 for k = 1..n;
/// column q = 0 holds beta_k, alpha_k. Row 0 is unused.
template <Field T>
struct LevelParams {
    std::vector<std::vector<T>> check_beta;
    std::vector<std::vector<T>> check_alpha;
    std::vector<std::vector<T>> sigma_odd;   ///< full sigma at x^{2k-1}, q >= 1
    std::vector<std::vector<T>> sigma_even;  ///< full sigma at x^{2k}, q >= 1
};

template <Field T>
struct BivPade {
    int n = 0;
    int m = 0;
    Side side = Side::left;
    /// For the left variant A[p] = A_{n,p}(x), p = 0..m. For the right
    /// variant these are the left-(m, n) polynomials of the transposed
    /// series, so A[p] is a polynomial in y multiplying x^p, p = 0..n.
    std::vector<Poly<T>> A;
    std::vector<Poly<T>> B;
    Seeds<T> seeds;
    /// e[p][k-1] = coefficient of x^{2n'+k} in the level-p defect, where n'
    /// is the order in the recursion variable.
    std::vector<std::vector<T>> e;
    LevelParams<T> params;  ///< empty for oracle results

    /// Coefficient matrix N[i][j] of x^i y^j in the numerator.
    std::vector<std::vector<T>> numerator_coeffs() const;
    std::vector<std::vector<T>> denominator_coeffs() const;
};

/// Seeds from the Jacobi recursion on the y-axis series c[0][1..2m].
template <Field T>
Seeds<T> compute_seeds(const BivSeries<T>& series, int m);

/// Seeds from the y-axis Hankel solve.
template <Field T>
Seeds<T> oracle_seeds(const BivSeries<T>& series, int m, SingularPolicy policy = SingularPolicy::reject);

/// (beta-check, alpha-check) = (F_odd s_odd + F_even s_even, F_prev s_odd).
template <Field T>
std::pair<T, T> check_params(const std::pair<T, T>& sigma, const RemainderComponents<T>& comp);

/// Step-by-step driver of the left recursion for levels p = 0..m under a
/// fixed seed vector.
template <Field T>
class LeftRecursion {
public:
    LeftRecursion(const BivSeries<T>& series, int m, Seeds<T> seeds);

    /// Current step k (0 after construction).
    int level() const { return k_; }
    int m() const { return m_; }

    /// Advances every level p from k to k + 1.
    void step();

    /// Level-p data at the current step: A_{k,p}, B_{k,p}, e^{k,p}.
    const std::vector<UniPade<T>>& current() const { return cur_; }
    const LevelParams<T>& params() const { return params_; }
    const Seeds<T>& seeds() const { return seeds_; }

    /// Split sigma for level p of the *current* step k >= 1; recomputed from
    /// the stored state. `hat` holds the contribution of the level's own
    /// q = 0 parameters, `check` that of q = 1..p-1.
    struct SigmaParts {
        T hat_odd, hat_even, check_odd, check_even;
    };
    SigmaParts sigma_for_level(int p) const;

private:
    T c(int i, int p) const { return series_(i, p); }
    T b_at(const std::vector<UniPade<T>>& lvl, int i, int p) const;
    T e_at(const std::vector<UniPade<T>>& lvl, int p, int j) const;
    T G(int k, int p, int j, const std::vector<UniPade<T>>& l1) const;
    T H(int k, int p, int j, const std::vector<UniPade<T>>& l2) const;
    SigmaParts sigma_parts(int k, int p, const std::vector<UniPade<T>>& l1,
                           const std::vector<UniPade<T>>& l2) const;

    BivSeries<T> series_;
    int m_;
    int k_ = 0;
    Seeds<T> seeds_;
    JacobiTrace<T> trace_;
    std::vector<RemainderComponents<T>> comps_;  ///< comps_[k-1] for step k
    std::vector<UniPade<T>> prev2_;              ///< step k-2
    std::vector<UniPade<T>> prev_;               ///< step k-1
    std::vector<UniPade<T>> cur_;                ///< step k
    LevelParams<T> params_;
};

template <Field T>
BivPade<T> left_pade(const BivSeries<T>& series, int n, int m, const Deadline* deadline = nullptr);

/// Left recursion with caller-supplied seeds (b0 of length >= m + 1).
template <Field T>
BivPade<T> left_pade_with_seeds(const BivSeries<T>& series, int n, int m, const Seeds<T>& seeds,
                                const Deadline* deadline = nullptr);

/// f^R_{n,m}(x, y) = (f^T)^L_{m,n}(y, x).
template <Field T>
BivPade<T> right_pade(const BivSeries<T>& series, int n, int m, const Deadline* deadline = nullptr);

template <Field T>
BivPade<T> oracle_left_pade(const BivSeries<T>& series, int n, int m,
                            SingularPolicy policy = SingularPolicy::reject);

/// Oracle with caller-supplied seeds.
template <Field T>
BivPade<T> oracle_left_pade_with_seeds(const BivSeries<T>& series, int n, int m, const Seeds<T>& seeds,
                                       SingularPolicy policy = SingularPolicy::reject);

template <Field T>
BivPade<T> oracle_right_pade(const BivSeries<T>& series, int n, int m,
                             SingularPolicy policy = SingularPolicy::reject);

/// Numerator over denominator at (x, y). Throws Error at a pole.
template <Field T>
T evaluate(const BivPade<T>& pade, const T& x, const T& y);

/// A_p - sum_{s<=p} B_s C_{2n',p-s} through x^{max_deg}, in the recursion
/// variable of `pade` (x for left, y for right).
template <Field T>
Poly<T> level_defect(const BivPade<T>& pade, const BivSeries<T>& series, int p, int max_deg);

/// True when the two approximants have identical A and B (trailing zeros ignored).
template <Field T>
bool same_polynomials(const BivPade<T>& a, const BivPade<T>& b);

}  // namespace pade
