#pragma once

#include <gmpxx.h>

#include <vector>

#include "folner/boundary.hpp"
#include "folner/subset.hpp"

namespace folner {

/// Default cap on explicitly constructed elements. Formula-only paths are not
/// subject to it.
inline constexpr long long kDefaultElementBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// All (k,f) with cursor in [cursor_lo, cursor_hi] and supp(f) inside
/// [supp_lo, supp_hi].
FiniteSubset lamp_box_set(int d, int cursor_lo, int cursor_hi, int supp_lo, int supp_hi,
                          long long element_budget = kDefaultElementBudget);

/// F_n = {(k,f) : k in [1,n], supp(f) in [1,n]}; |F_n| = n d^n.
FiniteSubset standard_set_lamp(int d, int n, long long element_budget = kDefaultElementBudget);

/// F_n u outer(F_n) = {(k,f) : k in [0,n+1], supp(f) in [1,n]}; (n+2) d^n
/// elements, inner ratio exactly 2/(n+2).
FiniteSubset standard_closure_lamp(int d, int n, long long element_budget = kDefaultElementBudget);

/// Standard set adapted to the switch-walk-switch generating set:
/// cursor in [1,n], supp in [0,n+1]. Outer ratio under sws is exactly 2/n.
/// (With supp restricted to [1,n] the sws outer ratio is 4/n instead: the
/// switch-and-walk moves escape with a lamp lit just outside [1,n].)
FiniteSubset sws_standard_set(int n, long long element_budget = kDefaultElementBudget);

/// F_n = {(k,f) : k in [0,n-1], f integer in [0,p^n)}; |F_n| = n p^n.
FiniteSubset standard_set_bs(int p, int n, long long element_budget = kDefaultElementBudget);

/// The exact Folner function value 2n d^(2(n-1)), valid for n >= d.
/// Witness: standard_closure_lamp(d, 2n-2) has this cardinality and passes
/// folner_test(., n). Throws std::domain_error for n < d (the formula's
/// range); smaller arguments need the search oracle.
mpz_class fol_value(int d, long long n);

struct FolFormula {
    int d;
    long long n;
    mpz_class value;
};

/// Residual polynomial P_D of the generating function
///   sum Fol(n) x^n = 2x/(1-d^2 x)^2 - x + x^2 P_D(x),  deg P_D <= d-3.
struct SeriesResidual {
    int d = 0;
    std::vector<mpz_class> pd_coeffs;  // coefficient of x^j in P_D
    int degree() const;                // -1 when identically zero
};

/// Expands 2x/(1-d^2 x)^2 - x by formal power-series division (independent of
/// the closed form), checks the coefficient of x^n equals 2n d^(2(n-1)) - [n=1]
/// for every n <= N with n = 1 or n >= d, and solves for P_D's coefficients at
/// 2 <= n <= d-1 from `small_values` (the oracle-supplied Fol(n) for
/// 1 <= n < d, ascending). Throws std::runtime_error on any residual at n >= d.
SeriesResidual fol_series_check(int d, int N, const std::vector<mpz_class>& small_values);

/// Raw coefficients of 2x/(1-d^2 x)^2 - x for n = 1..N, by series division.
std::vector<mpz_class> fol_series_coefficients(int d, int N);

/// Counterexample family to standard-set edge optimality in BS(1,p):
/// F = {(k, f) : k in [0,3], f = sum eps_i p^i, 0 <= eps_i < p/3} compared
/// with the standard F_3. Requires p divisible by 3 and 36 <= p <= 60.
struct BsCounterexampleReport {
    int p = 0;
    mpz_class F_size;          // 4 (p/3)^4
    mpz_class F3_size;         // 3 p^3
    mpz_class a_edges;         // 2 (p/3)^4
    mpz_class b_edges;         // 8 (p/3)^3
    mpq_class ratio_F;         // 1/2 + 6/p
    mpq_class ratio_F3;        // (2/3)(p - p^-3)/(p - 1)
    bool size_ok = false;      // |F| <= |F_3|
    bool strict = false;       // ratio_F < ratio_F3 in exact rationals
    bool enumeration_ok = false;  // formula counts match direct enumeration
};

BsCounterexampleReport bs_counterexample(int p, long long element_budget = kDefaultElementBudget);

/// Per-generator edge boundary counts of a BS set (a-edges and b-edges are
/// always disjoint).
struct BsEdgeSplit {
    long long a_edges = 0;
    long long b_edges = 0;
};
BsEdgeSplit bs_edge_split(const FiniteSubset& F);

}  // namespace folner
