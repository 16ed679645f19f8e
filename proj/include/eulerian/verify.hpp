#pragma once

// Theorem-level checks behind `verify`. Each check is an exact identity or
// an exhaustive property; a failing one is a regression.

#include <string>
#include <vector>

#include "eulerian/oracle.hpp"

namespace eulerian {

enum class VerifySuite { Recurrences, Bijections, GammaTheorems, Identities };

struct CheckResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::string detail;
};

/// Runs every check of the suite for ranks up to max_n, each family clipped
/// to its enumeration budget where enumeration is involved.
std::vector<CheckResult> run_verify_suite(VerifySuite suite, int max_n, const OracleOptions& opts = {});

}  // namespace eulerian
