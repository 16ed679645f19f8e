#pragma once

// Executable checkers for the open conjectures: exact real-rootedness and
// two-sided gamma expansions. Failures are data, never exceptions.

#include <optional>
#include <string>
#include <vector>

#include "eulerian/oracle.hpp"
#include "eulerian/polynomial.hpp"

namespace eulerian {

struct RealRootReport {
  bool real_rooted = false;
  int distinct_real_roots = 0;
  /// Degree of p / gcd(p, p').
  int squarefree_degree = 0;
};

/// Sturm sequence over Q on the squarefree part. ZeroPolynomial on zero input.
RealRootReport check_real_rooted(const IntPoly1& p);

/// Raised by ts_expand when the peel leaves something behind.
class NotInSpanError : public Error {
 public:
  NotInSpanError(const std::string& what, BivPoly residual)
      : Error(Errc::NotInSpan, what), residual_(std::move(residual)) {}
  const BivPoly& residual() const noexcept { return residual_; }

 private:
  BivPoly residual_;
};

/// Expansion in (st)^i (s+t)^j (1+st)^{N-2i-j}, peeled by total degree
/// d = 0..N. Both symmetries a_ij = a_ji and a_ij = a_{N-i,N-j} are checked
/// first (SymmetryViolated names the failing entry).
TSGammaVec ts_expand(const BivPoly& p, int N);

struct ConjectureConfig {
  /// Upper ends of the sweeps. Real-rootedness uses the recurrence engines;
  /// the two-sided sweep enumerates.
  int max_n_A = 9;
  int max_n_B = 6;
  int max_n_D = 8;
  int max_n_twosided = 6;
  bool realroot = true;
  bool twosided = true;
  OracleOptions oracle;
};

struct Verdict {
  std::string family;  // A, B, D, TSA, TSB, TSD
  std::string parity;  // all, plus, minus
  int n = 0;
  bool symmetric = false;
  std::optional<bool> expanded;
  std::optional<bool> gamma_nonneg;
  std::optional<bool> real_rooted;
  std::optional<int> distinct_real_roots;
  /// Negative verdict on a claim the conjecture makes.
  bool flagged = false;
  /// Polynomial (and expansion, when there is one) behind a flagged verdict.
  std::string witness;
};

std::vector<Verdict> run_conjecture_suite(const ConjectureConfig& config);

}  // namespace eulerian
