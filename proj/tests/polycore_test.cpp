#include <gtest/gtest.h>

#include <random>

#include "eulerian/oracle.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/serialize.hpp"
#include "support/brute.hpp"

using namespace eulerian;

namespace {

// Termwise d/ds + d/dt straight from the monomials, for comparison with apply_D.
HomBivPoly termwise_D(const HomBivPoly& p) {
  const int d = p.degree();
  std::vector<Integer> c(std::max(d, 1));
  for (int i = 0; i <= d; ++i) {
    if (d - i >= 1) c[i] += (d - i) * p.coeff(i);
    if (i >= 1) c[i - 1] += i * p.coeff(i);
  }
  return HomBivPoly(std::max(d - 1, 0), std::move(c));
}

IntPoly1 A6() { return IntPoly1{1, 57, 302, 302, 57, 1}; }

GammaVec random_gamma(std::mt19937_64& rng, bool nonneg) {
  std::uniform_int_distribution<int> pick_r(0, 3), pick_len(0, 8);
  GammaVec g;
  g.r = pick_r(rng);
  g.n = g.r + pick_len(rng);
  g.gammas = brute::random_coeffs(rng, (g.n - g.r) / 2 + 1, nonneg ? 0 : -9, 9);
  if (g.gammas[0] == 0) g.gammas[0] = 1;
  return g;
}

std::vector<HomBivPoly> palindromic_oracle_polys() {
  std::vector<HomBivPoly> out;
  for (int n = 1; n <= 9; ++n) {
    out.push_back(descent_poly(GroupKind::A, Parity::All, n));
    if (n >= 4 && (n % 4 == 0 || n % 4 == 1)) {
      out.push_back(descent_poly(GroupKind::A, Parity::Even, n));
      out.push_back(descent_poly(GroupKind::A, Parity::Odd, n));
    }
  }
  for (int n = 1; n <= 7; ++n) {
    out.push_back(descent_poly(GroupKind::B, Parity::All, n));
    if (n % 2 == 0) {
      out.push_back(descent_poly(GroupKind::B, Parity::Even, n));
      out.push_back(descent_poly(GroupKind::B, Parity::Odd, n));
    }
  }
  for (int n = 2; n <= 7; ++n) {
    out.push_back(descent_poly(GroupKind::D, Parity::All, n));
    out.push_back(descent_poly(GroupKind::D, Parity::Even, n));
    out.push_back(descent_poly(GroupKind::D, Parity::Odd, n));
  }
  return out;
}

}  // namespace

TEST(ApplyD, Examples) {
  EXPECT_EQ(apply_D(HomBivPoly(1, {1, 1})), HomBivPoly::constant(2));
  EXPECT_EQ(apply_D(HomBivPoly(2, {0, 1, 0})), HomBivPoly(1, {1, 1}));
  EXPECT_EQ(apply_D(HomBivPoly(3, {1, 5, 5, 1})), HomBivPoly(2, {8, 20, 8}));
  EXPECT_TRUE(apply_D(HomBivPoly::constant(7)).is_zero());
}

TEST(ApplyD, MatchesTermwiseAndLeibniz) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(0, 9);
  for (int trial = 0; trial < 300; ++trial) {
    const int d1 = deg(rng), d2 = deg(rng);
    const HomBivPoly f(d1, brute::random_coeffs(rng, d1 + 1, -20, 20));
    const HomBivPoly g(d2, brute::random_coeffs(rng, d2 + 1, -20, 20));
    EXPECT_EQ(apply_D(f), termwise_D(f));
    if (d1 + d2 >= 1 && d1 >= 1 && d2 >= 1) {
      EXPECT_EQ(apply_D(f * g), apply_D(f) * g + f * apply_D(g));
    }
  }
}

TEST(Palindromes, LengthAndCenter) {
  const IntPoly1 a4m{0, 6, 6};
  EXPECT_EQ(poly_len(a4m), 1);
  EXPECT_TRUE(is_palindromic(a4m));
  EXPECT_EQ(center_of_symmetry(a4m), Rational(3, 2));
  EXPECT_EQ(center_of_symmetry(A6()), Rational(5, 2));
  EXPECT_FALSE(is_palindromic(IntPoly1{1, 29, 147, 155, 28}));
  EXPECT_TRUE(is_palindromic(IntPoly1{5}));
}

TEST(Palindromes, ZeroPolynomialIsAnError) {
  const IntPoly1 zero;
  auto code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidArgument;
  };
  EXPECT_EQ(code([&] { poly_len(zero); }), Errc::ZeroPolynomial);
  EXPECT_EQ(code([&] { is_palindromic(zero); }), Errc::ZeroPolynomial);
  EXPECT_EQ(code([&] { center_of_symmetry(zero); }), Errc::ZeroPolynomial);
  EXPECT_EQ(code([&] { gamma_expand(zero); }), Errc::ZeroPolynomial);
}

TEST(GammaBasis, ExpandExamples) {
  EXPECT_EQ(gamma_expand(A6()), (GammaVec{0, 5, {1, 52, 136}}));
  EXPECT_EQ(gamma_expand(IntPoly1{0, 6, 6}), (GammaVec{1, 2, {6}}));
  EXPECT_EQ(gamma_expand_biv(HomBivPoly(3, {1, 5, 5, 1})), (GammaVec{0, 3, {1, 2}}));
  EXPECT_EQ(gamma_expand_biv(HomBivPoly(2, {0, 4, 0})), (GammaVec{1, 1, {4}}));
}

TEST(GammaBasis, CollapseExamples) {
  EXPECT_EQ(gamma_collapse(GammaVec{0, 5, {1, 52, 136}}), A6());
  EXPECT_EQ(gamma_collapse(GammaVec{1, 2, {6}}), (IntPoly1{0, 6, 6}));
  TSGammaVec ts{3, {{{1, 0}, Integer(1)}}};
  BivPoly want;
  want.add_term(1, 1, 1);
  want.add_term(2, 2, 1);
  EXPECT_EQ(ts_collapse(ts), want);
}

TEST(GammaBasis, RejectsNonPalindromic) {
  EXPECT_THROW(gamma_expand(IntPoly1{1, 2}), Error);
  try {
    gamma_expand(IntPoly1{1, 29, 147, 155, 28});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPalindromic);
  }
  // palindromic t-profile but not s<->t symmetric: s^2 t
  EXPECT_THROW(gamma_expand_biv(HomBivPoly(3, {0, 1, 0, 0})), Error);
}

TEST(GammaBasis, RoundTripOnOraclePolynomials) {
  for (const HomBivPoly& p : palindromic_oracle_polys()) {
    const IntPoly1 u = p.at_s_equals_one();
    ASSERT_TRUE(is_palindromic(u)) << format_poly(u);
    EXPECT_EQ(gamma_collapse(gamma_expand(u)), u);
    const GammaVec gb = gamma_expand_biv(p);
    EXPECT_EQ(collapse_biv(gb), p);
    // s = 1 specialization commutes with expansion, offset included
    EXPECT_EQ(gamma_expand(u), gb) << format_poly(p);
  }
}

TEST(GammaBasis, RoundTripOnRandomVectors) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const GammaVec g = random_gamma(rng, false);
    EXPECT_EQ(gamma_expand(gamma_collapse(g)), g);
    EXPECT_EQ(gamma_expand_biv(collapse_biv(g)), g);
    EXPECT_EQ(collapse_biv(g).at_s_equals_one(), gamma_collapse(g));
  }
}

TEST(GammaBasis, DerivativeLowersCenterByHalf) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const GammaVec g = random_gamma(rng, true);
    const HomBivPoly p = collapse_biv(g);
    if (p.degree() == 0) continue;
    const GammaVec dg = gamma_expand_biv(apply_D(p));
    EXPECT_TRUE(dg.is_nonnegative());
    EXPECT_EQ(dg.center(), g.center() - Rational(1, 2));
  }
}

TEST(GammaBasis, ProductsAddCenters) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const GammaVec a = random_gamma(rng, true), b = random_gamma(rng, true);
    const GammaVec prod = gamma_expand_biv(collapse_biv(a) * collapse_biv(b));
    EXPECT_TRUE(prod.is_nonnegative());
    EXPECT_EQ(prod.center(), a.center() + b.center());
  }
}

TEST(GammaBasis, AlgebraHelpers) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 200; ++trial) {
    const GammaVec g = random_gamma(rng, false);
    EXPECT_EQ(gamma_collapse(gamma_times_t(g)), gamma_collapse(g).shifted(1));
    EXPECT_EQ(gamma_collapse(gamma_times_one_plus_t(g)), gamma_collapse(g) * (IntPoly1{1, 1}));
    GammaVec h = random_gamma(rng, false);
    // force equal centers: same n + r
    h.n = g.n + g.r - h.r;
    if (h.n < h.r) continue;
    h.gammas.resize((h.n - h.r) / 2 + 1, 0);
    if (h.gammas[0] == 0) h.gammas[0] = 1;
    const GammaVec sum = gamma_add(g, h);
    EXPECT_EQ(collapse_biv(sum), collapse_biv(g) + collapse_biv(h));
  }
}

TEST(Serialize, JsonRoundTrips) {
  std::mt19937_64 rng(12);
  const Integer big = Integer(1) << 100;
  const IntPoly1 p({big, -big, 3});
  EXPECT_EQ(int_poly_from_json(to_json(p)), p);
  EXPECT_EQ(to_json(p)["coeffs"][0], big.get_str());
  for (int trial = 0; trial < 50; ++trial) {
    const HomBivPoly h(5, brute::random_coeffs(rng, 6, -1000, 1000));
    EXPECT_EQ(hom_biv_from_json(to_json(h)), h);
    const GammaVec g = random_gamma(rng, false);
    EXPECT_EQ(gamma_from_json(to_json(g)), g);
  }
  const BivPoly tsa = two_sided_poly(GroupKind::A, Parity::All, 4);
  EXPECT_EQ(biv_from_json(to_json(tsa)), tsa);
}

TEST(Serialize, TextForms) {
  EXPECT_EQ(format_poly(IntPoly1{1, 29, 147, 155, 28}, TextStyle::Latex),
            "1 + 29t + 147t^{2} + 155t^{3} + 28t^{4}");
  EXPECT_EQ(format_poly(IntPoly1{}), "0");
  EXPECT_EQ(to_csv(IntPoly1{0, 6, 6}), "k,coeff\n0,0\n1,6\n2,6\n");
}
