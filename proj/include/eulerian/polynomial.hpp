#pragma once

// Exact polynomial types: univariate IntPoly1, homogeneous bivariate
// HomBivPoly in (s,t), general bivariate BivPoly, and the gamma-basis
// coordinate types GammaVec / TSGammaVec.

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "eulerian/error.hpp"

namespace eulerian {

using Integer = mpz_class;
using Rational = mpq_class;

/// k/2 in lowest terms (mpq comparisons assume canonical form).
inline Rational half_of(int k) {
  Rational q(k, 2);
  q.canonicalize();
  return q;
}

/// Dense univariate polynomial in t with exact integer coefficients.
/// coeffs()[i] is the coefficient of t^i; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient list.
class IntPoly1 {
 public:
  IntPoly1() = default;
  explicit IntPoly1(std::vector<Integer> coeffs);
  IntPoly1(std::initializer_list<long> coeffs);

  static IntPoly1 monomial(const Integer& c, int exponent);
  /// (1+t)^k
  static IntPoly1 one_plus_t_pow(int k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  /// Least exponent with a nonzero coefficient; throws ZeroPolynomial.
  int low_degree() const;
  Integer coeff(int i) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  Rational eval(const Rational& x) const;
  Integer sum_of_coefficients() const;
  IntPoly1 derivative() const;
  /// Multiply by t^k.
  IntPoly1 shifted(int k) const;

  IntPoly1& operator+=(const IntPoly1& other);
  IntPoly1& operator-=(const IntPoly1& other);
  friend IntPoly1 operator+(IntPoly1 a, const IntPoly1& b) { return a += b; }
  friend IntPoly1 operator-(IntPoly1 a, const IntPoly1& b) { return a -= b; }
  friend IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b);
  friend IntPoly1 operator*(const Integer& c, const IntPoly1& p);
  friend bool operator==(const IntPoly1& a, const IntPoly1& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Homogeneous polynomial of fixed total degree d in (s,t).
/// coeff(i) is the coefficient of s^{d-i} t^i. All polynomials of the
/// Eulerian families are homogeneous, so only the t-profile is stored.
class HomBivPoly {
 public:
  /// The zero polynomial of the given degree.
  explicit HomBivPoly(int degree = 0);
  HomBivPoly(int degree, std::vector<Integer> coeffs);
  HomBivPoly(int degree, std::initializer_list<long> coeffs);

  static HomBivPoly constant(const Integer& c);
  /// (s+t)^k
  static HomBivPoly s_plus_t_pow(int k);
  /// c * s^{d-i} t^i
  static HomBivPoly monomial(int degree, int i, const Integer& c);

  int degree() const noexcept { return degree_; }
  bool is_zero() const noexcept;
  Integer coeff(int i) const;
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }
  /// Least / greatest t-exponent with a nonzero coefficient; throw ZeroPolynomial.
  int low_t_degree() const;
  int high_t_degree() const;
  Integer sum_of_coefficients() const;

  HomBivPoly times_s() const;
  HomBivPoly times_t() const;
  HomBivPoly times_st() const;
  HomBivPoly times_s_plus_t() const;
  /// Exact division by a scalar; a remainder anywhere raises InternalNonIntegral.
  HomBivPoly divided_exactly(const Integer& divisor) const;
  /// f(1, t)
  IntPoly1 at_s_equals_one() const;

  HomBivPoly& operator+=(const HomBivPoly& other);
  HomBivPoly& operator-=(const HomBivPoly& other);
  friend HomBivPoly operator+(HomBivPoly a, const HomBivPoly& b) { return a += b; }
  friend HomBivPoly operator-(HomBivPoly a, const HomBivPoly& b) { return a -= b; }
  friend HomBivPoly operator*(const HomBivPoly& a, const HomBivPoly& b);
  friend HomBivPoly operator*(const Integer& c, const HomBivPoly& p);
  friend bool operator==(const HomBivPoly& a, const HomBivPoly& b) {
    return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int degree_;
  std::vector<Integer> coeffs_;
};

/// The operator d/ds + d/dt. Lowers the degree by one; a degree-0 input
/// maps to the zero polynomial of degree 0.
HomBivPoly apply_D(const HomBivPoly& p);

/// Sparse bivariate polynomial; key (i, j) is the coefficient of t^i s^j.
class BivPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Integer>;

  BivPoly() = default;
  explicit BivPoly(Terms terms);

  /// c * t^i s^j
  static BivPoly monomial(int i, int j, const Integer& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(int i, int j) const;
  const Terms& terms() const noexcept { return terms_; }
  void add_term(int i, int j, const Integer& c);

  BivPoly& operator+=(const BivPoly& other);
  BivPoly& operator-=(const BivPoly& other);
  friend BivPoly operator+(BivPoly a, const BivPoly& b) { return a += b; }
  friend BivPoly operator-(BivPoly a, const BivPoly& b) { return a -= b; }
  friend BivPoly operator*(const BivPoly& a, const BivPoly& b);
  friend BivPoly operator*(const Integer& c, const BivPoly& p);
  friend bool operator==(const BivPoly& a, const BivPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// Coordinates in the gamma basis { t^{r+i} (1+t)^{n-r-2i} }, or its
/// bivariate analogue { (st)^{r+i} (s+t)^{n-r-2i} }. n is the top exponent
/// of t in the source polynomial and r the least one, so the center of
/// symmetry is (n+r)/2 and entry i multiplies t^{r+i}.
struct GammaVec {
  int r = 0;
  int n = 0;
  std::vector<Integer> gammas;

  Rational center() const { return half_of(n + r); }
  /// Coefficient attached to t^k (or (st)^k); zero outside the stored range.
  Integer at_exponent(int k) const;
  bool is_nonnegative() const;

  friend bool operator==(const GammaVec&, const GammaVec&) = default;
};

/// Coordinates in the two-sided basis (st)^i (s+t)^j (1+st)^{N-2i-j}.
struct TSGammaVec {
  int N = 0;
  std::map<std::pair<int, int>, Integer> entries;

  bool is_nonnegative() const;

  friend bool operator==(const TSGammaVec&, const TSGammaVec&) = default;
};

// -- Palindromicity and center of symmetry -----------------------------------

/// degree minus least exponent; ZeroPolynomial on zero input.
int poly_len(const IntPoly1& p);
bool is_palindromic(const IntPoly1& p);
bool is_palindromic(const HomBivPoly& p);
/// f(s,t) = f(t,s), i.e. a_i = a_{d-i} over the full degree. Zero is symmetric.
bool is_st_symmetric(const HomBivPoly& p);
/// (n+r)/2, where n and r are the greatest and least t-exponents.
Rational center_of_symmetry(const IntPoly1& p);
Rational center_of_symmetry(const HomBivPoly& p);

// -- Gamma basis --------------------------------------------------------------

GammaVec gamma_expand(const IntPoly1& p);
/// Requires palindromic t-profile and total degree n + r (s<->t symmetry);
/// either failure raises NotPalindromic.
GammaVec gamma_expand_biv(const HomBivPoly& p);
IntPoly1 gamma_collapse(const GammaVec& g);
HomBivPoly collapse_biv(const GammaVec& g);
BivPoly ts_collapse(const TSGammaVec& g);

/// Sum of two gamma vectors with equal centers of symmetry.
GammaVec gamma_add(const GammaVec& a, const GammaVec& b);
/// Gamma vector of t * f.
GammaVec gamma_times_t(const GammaVec& g);
/// Gamma vector of (1+t) * f.
GammaVec gamma_times_one_plus_t(const GammaVec& g);

}  // namespace eulerian
