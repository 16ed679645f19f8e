#pragma once

// Recurrence engines for the Eulerian families and their gamma vectors.
// These reach far past the enumeration budgets of the oracle.

#include <vector>

#include "eulerian/polynomial.hpp"

namespace eulerian {

struct SplitPair {
  HomBivPoly plus;
  HomBivPoly minus;

  HomBivPoly total() const { return plus + minus; }
};

/// (s+t) P + st DP
HomBivPoly foata_step(const HomBivPoly& p);
/// (s+t) P + 2st DP
HomBivPoly foata_step_B(const HomBivPoly& p);

HomBivPoly eulerian_A(int n);
/// n >= 1. Odd steps decouple; even steps mix both halves through
/// (1/2) st D A_{n-1}, divided exactly.
SplitPair eulerian_A_split(int n);
GammaVec gamma_A(int n);

HomBivPoly eulerian_B(int n);
GammaVec gamma_B(int n);
SplitPair eulerian_B_split(int n);

/// D_n^+ and D_n^- from the c-factor products, half the sum over even
/// (resp. odd) plain permutations. Small n falls back to enumeration.
SplitPair eulerian_D_split(int n, unsigned threads = 0);

/// Coefficient rows a^{+-}_{m,k}, b^{+-}_{m,k} for m = 1..n, built with the
/// coefficient-level recurrences alone. Row m is at index m; index 0 is empty.
struct CoeffTables {
  std::vector<std::vector<Integer>> a_plus, a_minus, b_plus, b_minus;
};
CoeffTables coeff_recurrences(int n);

}  // namespace eulerian
