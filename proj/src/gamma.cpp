#include <algorithm>
#include <stdexcept>
#include <string>

#include "eulerian/polynomial.hpp"

namespace eulerian {
namespace {

bool palindromic_profile(std::span<const Integer> a, int r, int n) {
  for (int i = 0; r + i < n - i; ++i)
    if (a[r + i] != a[n - i]) return false;
  return true;
}

// Triangular solve in { t^{r+i} (1+t)^{n-r-2i} }: the basis element for i is
// the only remaining one touching t^{r+i}, so peel from the low end.
std::vector<Integer> peel_gamma(std::vector<Integer> residual, int r, int n) {
  const int count = (n - r) / 2 + 1;
  std::vector<Integer> gammas(count);
  Integer binom;
  for (int i = 0; i < count; ++i) {
    const Integer g = residual[r + i];
    gammas[i] = g;
    if (g == 0) continue;
    const int power = n - r - 2 * i;
    for (int k = 0; k <= power; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), power, k);
      residual[r + i + k] -= g * binom;
    }
  }
  if (!std::all_of(residual.begin(), residual.end(), [](const Integer& c) { return c == 0; })) {
    throw std::logic_error("gamma expansion left a nonzero residual on palindromic input");
  }
  return gammas;
}

void check_well_formed(const GammaVec& g) {
  if (g.r < 0 || g.n < g.r) throw Error(Errc::InvalidArgument, "gamma vector needs 0 <= r <= n");
  if (g.gammas.size() > static_cast<size_t>((g.n - g.r) / 2 + 1)) {
    throw Error(Errc::InvalidArgument, "gamma vector has more entries than (n-r)/2 + 1");
  }
}

}  // namespace

Integer GammaVec::at_exponent(int k) const {
  const int i = k - r;
  if (i < 0 || i >= static_cast<int>(gammas.size())) return 0;
  return gammas[i];
}

bool GammaVec::is_nonnegative() const {
  return std::all_of(gammas.begin(), gammas.end(), [](const Integer& g) { return g >= 0; });
}

bool TSGammaVec::is_nonnegative() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& kv) { return kv.second >= 0; });
}

int poly_len(const IntPoly1& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "len of the zero polynomial");
  return p.degree() - p.low_degree();
}

bool is_palindromic(const IntPoly1& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "palindromicity of the zero polynomial");
  return palindromic_profile(p.coeffs(), p.low_degree(), p.degree());
}

bool is_palindromic(const HomBivPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "palindromicity of the zero polynomial");
  return palindromic_profile(p.coeffs(), p.low_t_degree(), p.high_t_degree());
}

bool is_st_symmetric(const HomBivPoly& p) {
  const int d = p.degree();
  for (int i = 0; i < d - i; ++i)
    if (p.coeff(i) != p.coeff(d - i)) return false;
  return true;
}

Rational center_of_symmetry(const IntPoly1& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "center of symmetry of the zero polynomial");
  return half_of(p.degree() + p.low_degree());
}

Rational center_of_symmetry(const HomBivPoly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "center of symmetry of the zero polynomial");
  return half_of(p.high_t_degree() + p.low_t_degree());
}

GammaVec gamma_expand(const IntPoly1& p) {
  if (!is_palindromic(p)) throw Error(Errc::NotPalindromic, "polynomial is not palindromic");
  const int r = p.low_degree();
  const int n = p.degree();
  std::vector<Integer> coeffs(p.coeffs().begin(), p.coeffs().end());
  return GammaVec{r, n, peel_gamma(std::move(coeffs), r, n)};
}

GammaVec gamma_expand_biv(const HomBivPoly& p) {
  if (!is_palindromic(p)) throw Error(Errc::NotPalindromic, "t-profile is not palindromic");
  const int r = p.low_t_degree();
  const int n = p.high_t_degree();
  if (p.degree() != n + r) {
    throw Error(Errc::NotPalindromic,
                "not symmetric in s and t: total degree " + std::to_string(p.degree()) +
                    " but t-exponents span [" + std::to_string(r) + ", " + std::to_string(n) + "]");
  }
  std::vector<Integer> coeffs(p.coeffs().begin(), p.coeffs().end());
  return GammaVec{r, n, peel_gamma(std::move(coeffs), r, n)};
}

IntPoly1 gamma_collapse(const GammaVec& g) {
  check_well_formed(g);
  std::vector<Integer> out(g.n + 1);
  Integer binom;
  for (size_t i = 0; i < g.gammas.size(); ++i) {
    if (g.gammas[i] == 0) continue;
    const int low = g.r + static_cast<int>(i);
    const int power = g.n - g.r - 2 * static_cast<int>(i);
    for (int k = 0; k <= power; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), power, k);
      out[low + k] += g.gammas[i] * binom;
    }
  }
  return IntPoly1(std::move(out));
}

HomBivPoly collapse_biv(const GammaVec& g) {
  // (st)^{r+i} (s+t)^{n-r-2i} has the same t-profile as t^{r+i} (1+t)^{n-r-2i}.
  const IntPoly1 profile = gamma_collapse(g);
  return HomBivPoly(g.n + g.r, std::vector<Integer>(profile.coeffs().begin(), profile.coeffs().end()));
}

BivPoly ts_collapse(const TSGammaVec& g) {
  BivPoly out;
  Integer bj, bk;
  for (const auto& [key, c] : g.entries) {
    const auto [i, j] = key;
    const int k = g.N - 2 * i - j;
    if (i < 0 || j < 0 || k < 0) {
      throw Error(Errc::InvalidArgument, "two-sided gamma index (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ") exceeds N = " +
                                             std::to_string(g.N));
    }
    // (st)^i * C(j,a) t^a s^{j-a} * C(k,b) (st)^b
    for (int a = 0; a <= j; ++a) {
      mpz_bin_uiui(bj.get_mpz_t(), j, a);
      for (int b = 0; b <= k; ++b) {
        mpz_bin_uiui(bk.get_mpz_t(), k, b);
        out.add_term(i + a + b, i + (j - a) + b, c * bj * bk);
      }
    }
  }
  return out;
}

GammaVec gamma_add(const GammaVec& a, const GammaVec& b) {
  if (a.n + a.r != b.n + b.r) {
    throw Error(Errc::InvalidArgument, "adding gamma vectors with different centers of symmetry");
  }
  const int r = std::min(a.r, b.r);
  const int end = std::max(a.r + static_cast<int>(a.gammas.size()),
                           b.r + static_cast<int>(b.gammas.size()));
  GammaVec out{r, a.n + a.r - r, {}};
  for (int k = r; k < end; ++k) out.gammas.push_back(a.at_exponent(k) + b.at_exponent(k));
  return out;
}

GammaVec gamma_times_t(const GammaVec& g) { return GammaVec{g.r + 1, g.n + 1, g.gammas}; }

GammaVec gamma_times_one_plus_t(const GammaVec& g) { return GammaVec{g.r, g.n + 1, g.gammas}; }

}  // namespace eulerian
