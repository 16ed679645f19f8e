#pragma once

// Ground truth by exhaustive enumeration. Everything else is checked
// against these builders.

#include "eulerian/polynomial.hpp"
#include "eulerian/signed_perm.hpp"

namespace eulerian {

/// Largest n each family may enumerate.
struct EnumerationBudget {
  int A = 12;
  int B = 9;
  int D = 9;

  int limit(GroupKind kind) const noexcept;
};

struct OracleOptions {
  EnumerationBudget budget;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Throws BudgetExceeded when n is over the family's limit.
void check_budget(GroupKind kind, int n, const EnumerationBudget& budget);

/// Sum of t^des s^asc over the requested subset. Degree n-1 for A, n for B, D.
HomBivPoly descent_poly(GroupKind kind, Parity parity, int n, const OracleOptions& opts = {});

/// Sum of (-1)^{inv_B} t^{des_B} s^{asc_B} over B_n.
HomBivPoly signed_descent_poly_B(int n, const OracleOptions& opts = {});

/// Joint distribution of descents and inverse descents. Type A uses
/// t^{des+1} s^{ides+1}; types B and D use unshifted exponents.
BivPoly two_sided_poly(GroupKind kind, Parity parity, int n, const OracleOptions& opts = {});

/// Product c_1(u) ... c_n(u) for a plain permutation with n >= 3.
/// Convention u_{n+1} = +infinity, so position n is never a peak.
HomBivPoly cfactor_product(const SignedPerm& u);

/// Direct sum of t^{des_D} s^{asc_D} over all 2^n signings of u (n >= 2).
HomBivPoly signing_sum_D(const SignedPerm& u);

/// Worker count actually used for a request.
unsigned resolve_threads(unsigned requested) noexcept;

}  // namespace eulerian
