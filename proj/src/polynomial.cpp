#include "eulerian/polynomial.hpp"

#include <algorithm>
#include <string>

namespace eulerian {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::NotPalindromic: return "NotPalindromic";
    case Errc::NotTypeA: return "NotTypeA";
    case Errc::TooSmallForD: return "TooSmallForD";
    case Errc::NotApplicable: return "NotApplicable";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InternalNonIntegral: return "InternalNonIntegral";
    case Errc::SymmetryViolated: return "SymmetryViolated";
    case Errc::NotInSpan: return "NotInSpan";
    case Errc::FactorizationUnavailable: return "FactorizationUnavailable";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// IntPoly1

IntPoly1::IntPoly1(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly1::IntPoly1(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly1 IntPoly1::monomial(const Integer& c, int exponent) {
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  std::vector<Integer> v(exponent + 1);
  v[exponent] = c;
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly1::one_plus_t_pow(int k) {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative power of (1+t)");
  std::vector<Integer> v(k + 1);
  for (int i = 0; i <= k; ++i) mpz_bin_uiui(v[i].get_mpz_t(), k, i);
  return IntPoly1(std::move(v));
}

void IntPoly1::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPoly1::low_degree() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "least exponent of the zero polynomial");
  int r = 0;
  while (coeffs_[r] == 0) ++r;
  return r;
}

Integer IntPoly1::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[i];
}

Rational IntPoly1::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Integer IntPoly1::sum_of_coefficients() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPoly1 IntPoly1::derivative() const {
  if (degree() < 1) return {};
  std::vector<Integer> v(degree());
  for (int i = 1; i <= degree(); ++i) v[i - 1] = coeffs_[i] * i;
  return IntPoly1(std::move(v));
}

IntPoly1 IntPoly1::shifted(int k) const {
  if (k < 0) throw Error(Errc::InvalidArgument, "negative shift");
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly1(std::move(v));
}

IntPoly1& IntPoly1::operator+=(const IntPoly1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly1& IntPoly1::operator-=(const IntPoly1& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly1 operator*(const IntPoly1& a, const IntPoly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly1(std::move(v));
}

IntPoly1 operator*(const Integer& c, const IntPoly1& p) {
  std::vector<Integer> v(p.coeffs_.begin(), p.coeffs_.end());
  for (auto& x : v) x *= c;
  return IntPoly1(std::move(v));
}

// ---------------------------------------------------------------------------
// HomBivPoly

HomBivPoly::HomBivPoly(int degree) : degree_(degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "negative degree");
  coeffs_.assign(degree + 1, Integer(0));
}

HomBivPoly::HomBivPoly(int degree, std::vector<Integer> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "negative degree");
  if (coeffs_.size() > static_cast<size_t>(degree + 1)) {
    throw Error(Errc::InvalidArgument,
                "homogeneous polynomial of degree " + std::to_string(degree) + " given " +
                    std::to_string(coeffs_.size()) + " coefficients");
  }
  coeffs_.resize(degree + 1);
}

HomBivPoly::HomBivPoly(int degree, std::initializer_list<long> coeffs)
    : HomBivPoly(degree, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

HomBivPoly HomBivPoly::constant(const Integer& c) { return HomBivPoly(0, std::vector<Integer>{c}); }

HomBivPoly HomBivPoly::s_plus_t_pow(int k) {
  const IntPoly1 binomials = IntPoly1::one_plus_t_pow(k);
  return HomBivPoly(k, std::vector<Integer>(binomials.coeffs().begin(), binomials.coeffs().end()));
}

HomBivPoly HomBivPoly::monomial(int degree, int i, const Integer& c) {
  if (i < 0 || i > degree) throw Error(Errc::InvalidArgument, "t-exponent out of range");
  HomBivPoly p(degree);
  p.coeffs_[i] = c;
  return p;
}

bool HomBivPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

Integer HomBivPoly::coeff(int i) const {
  if (i < 0 || i > degree_) return 0;
  return coeffs_[i];
}

int HomBivPoly::low_t_degree() const {
  for (int i = 0; i <= degree_; ++i)
    if (coeffs_[i] != 0) return i;
  throw Error(Errc::ZeroPolynomial, "least t-exponent of the zero polynomial");
}

int HomBivPoly::high_t_degree() const {
  for (int i = degree_; i >= 0; --i)
    if (coeffs_[i] != 0) return i;
  throw Error(Errc::ZeroPolynomial, "greatest t-exponent of the zero polynomial");
}

Integer HomBivPoly::sum_of_coefficients() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

HomBivPoly HomBivPoly::times_s() const {
  HomBivPoly out(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

HomBivPoly HomBivPoly::times_t() const {
  HomBivPoly out(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i + 1] = coeffs_[i];
  return out;
}

HomBivPoly HomBivPoly::times_st() const {
  HomBivPoly out(degree_ + 2);
  for (int i = 0; i <= degree_; ++i) out.coeffs_[i + 1] = coeffs_[i];
  return out;
}

HomBivPoly HomBivPoly::times_s_plus_t() const {
  HomBivPoly out(degree_ + 1);
  for (int i = 0; i <= degree_; ++i) {
    out.coeffs_[i] += coeffs_[i];
    out.coeffs_[i + 1] += coeffs_[i];
  }
  return out;
}

HomBivPoly HomBivPoly::divided_exactly(const Integer& divisor) const {
  if (divisor == 0) throw Error(Errc::InvalidArgument, "division by zero");
  HomBivPoly out(degree_);
  for (int i = 0; i <= degree_; ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), divisor.get_mpz_t())) {
      throw Error(Errc::InternalNonIntegral, "coefficient " + coeffs_[i].get_str() + " of t^" +
                                                 std::to_string(i) + " is not divisible by " +
                                                 divisor.get_str());
    }
    mpz_divexact(out.coeffs_[i].get_mpz_t(), coeffs_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

IntPoly1 HomBivPoly::at_s_equals_one() const { return IntPoly1(coeffs_); }

HomBivPoly& HomBivPoly::operator+=(const HomBivPoly& other) {
  if (other.degree_ != degree_) {
    throw Error(Errc::InvalidArgument, "adding homogeneous polynomials of degrees " +
                                           std::to_string(degree_) + " and " +
                                           std::to_string(other.degree_));
  }
  for (int i = 0; i <= degree_; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

HomBivPoly& HomBivPoly::operator-=(const HomBivPoly& other) {
  if (other.degree_ != degree_) {
    throw Error(Errc::InvalidArgument, "subtracting homogeneous polynomials of degrees " +
                                           std::to_string(degree_) + " and " +
                                           std::to_string(other.degree_));
  }
  for (int i = 0; i <= degree_; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

HomBivPoly operator*(const HomBivPoly& a, const HomBivPoly& b) {
  HomBivPoly out(a.degree_ + b.degree_);
  for (int i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j <= b.degree_; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

HomBivPoly operator*(const Integer& c, const HomBivPoly& p) {
  HomBivPoly out = p;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

HomBivPoly apply_D(const HomBivPoly& p) {
  const int n = p.degree();
  if (n == 0) return HomBivPoly(0);
  std::vector<Integer> out(n);
  for (int i = 0; i < n; ++i) out[i] = p.coeff(i) * (n - i) + p.coeff(i + 1) * (i + 1);
  return HomBivPoly(n - 1, std::move(out));
}

// ---------------------------------------------------------------------------
// BivPoly

BivPoly::BivPoly(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

BivPoly BivPoly::monomial(int i, int j, const Integer& c) {
  BivPoly p;
  p.add_term(i, j, c);
  return p;
}

Integer BivPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BivPoly::add_term(int i, int j, const Integer& c) {
  if (i < 0 || j < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivPoly& BivPoly::operator+=(const BivPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

BivPoly& BivPoly::operator-=(const BivPoly& other) {
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BivPoly operator*(const BivPoly& a, const BivPoly& b) {
  BivPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

BivPoly operator*(const Integer& c, const BivPoly& p) {
  BivPoly out;
  for (const auto& [k, v] : p.terms_) out.add_term(k.first, k.second, c * v);
  return out;
}

}  // namespace eulerian
