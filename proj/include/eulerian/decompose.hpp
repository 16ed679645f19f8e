#pragma once

// Gamma-positive decompositions of the non-palindromic split polynomials,
// built from the recurrence pieces rather than from the final polynomial.

#include <string>
#include <utility>
#include <vector>

#include "eulerian/polynomial.hpp"
#include "eulerian/signed_perm.hpp"

namespace eulerian {

/// One exact identity and its two sides, rendered as text.
struct IdentityCheck {
  std::string identity;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

/// Odd-length f = sum g_i t^{r+i}(1+t)^{n-r-2i} written as p1 + p2 with
/// centers (n+r-1)/2 and (n+r+1)/2; both keep f's gamma entries.
std::pair<GammaVec, GammaVec> split_odd_length(const GammaVec& g);

/// n = 4m+2 >= 6. Two gamma vectors, lower center 2m first, summing to A_n^{+-}(t).
std::vector<GammaVec> decompose_2mod4(int n, Sign sign);
/// n = 4m+3 >= 7. Three gamma vectors with centers 2m+1/2, 2m+1, 2m+3/2.
std::vector<GammaVec> decompose_3mod4(int n, Sign sign);
/// Odd n >= 3. Two gamma vectors summing to B_n^{+-}(t), lower center first.
std::vector<GammaVec> decompose_B_odd(int n, Sign sign);

/// Sum of the collapses; the target the parts must reproduce.
IntPoly1 collapse_sum(const std::vector<GammaVec>& parts);

/// For n = 4m+2, each gamma coefficient of A_n(t) against the sum of the
/// low-center part at t^k and the high-center part at t^{k+1}, both signs.
std::vector<IdentityCheck> verify_gamma_addup(int m);

struct BivariateRemark {
  HomBivPoly f1;
  HomBivPoly f2;
  std::vector<IdentityCheck> checks;
};

/// The n = 6 pieces lifted to (s,t): f1 = s * (gamma part of center 2),
/// f2 = t * (gamma part of center 3, shifted down). They add up to A_6^+(s,t)
/// but neither is s<->t symmetric, so neither has a bivariate gamma expansion.
BivariateRemark remark_bivariate_counterexample();

}  // namespace eulerian
