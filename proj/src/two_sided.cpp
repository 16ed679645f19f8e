#include <string>

#include "eulerian/conjectures.hpp"

namespace eulerian {
namespace {

std::string entry(int i, int j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

void check_symmetries(const BivPoly& p, int N) {
  for (const auto& [key, c] : p.terms()) {
    const auto [i, j] = key;
    if (p.coeff(j, i) != c) {
      throw Error(Errc::SymmetryViolated, "a_ij = a_ji fails at " + entry(i, j) + ": " + c.get_str() +
                                              " vs " + p.coeff(j, i).get_str());
    }
    if (N - i < 0 || N - j < 0 || p.coeff(N - i, N - j) != c) {
      throw Error(Errc::SymmetryViolated, "a_ij = a_{N-i,N-j} fails at " + entry(i, j) + " with N = " +
                                              std::to_string(N));
    }
  }
}

}  // namespace

TSGammaVec ts_expand(const BivPoly& p, int N) {
  if (N < 0) throw Error(Errc::InvalidArgument, "negative exponent budget");
  check_symmetries(p, N);
  BivPoly residual = p;
  TSGammaVec out{N, {}};
  for (int d = 0; d <= N; ++d) {
    for (int i = 0; 2 * i <= d; ++i) {
      const int j = d - 2 * i;
      // Lowest-i basis element still touching t^{i+j} s^i.
      const Integer g = residual.coeff(i + j, i);
      if (g == 0) continue;
      out.entries[{i, j}] = g;
      TSGammaVec single{N, {{{i, j}, g}}};
      residual -= ts_collapse(single);
    }
  }
  if (!residual.is_zero()) {
    throw NotInSpanError("nonzero residual after peeling all " + std::to_string(N + 1) + " layers",
                         residual);
  }
  return out;
}

}  // namespace eulerian
