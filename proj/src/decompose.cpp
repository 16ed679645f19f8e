#include "eulerian/decompose.hpp"

#include <string>

#include "eulerian/recurrence.hpp"
#include "eulerian/serialize.hpp"

namespace eulerian {
namespace {

const HomBivPoly& pick(const SplitPair& pair, Sign sign, bool same) {
  return (sign == Sign::Plus) == same ? pair.plus : pair.minus;
}

GammaVec gamma_of(const IntPoly1& p) { return gamma_expand(p); }

std::string sign_name(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

}  // namespace

std::pair<GammaVec, GammaVec> split_odd_length(const GammaVec& g) {
  if ((g.n - g.r) % 2 == 0) {
    throw Error(Errc::NotApplicable, "split needs odd length, got n - r = " + std::to_string(g.n - g.r));
  }
  return {GammaVec{g.r, g.n - 1, g.gammas}, GammaVec{g.r + 1, g.n, g.gammas}};
}

IntPoly1 collapse_sum(const std::vector<GammaVec>& parts) {
  IntPoly1 sum;
  for (const auto& g : parts) sum += gamma_collapse(g);
  return sum;
}

// n = 4m+2: A_n^+ = s A^+ + t A^- + P with P = (1/2) st D A_{4m+1}, all at the
// previous (palindromic) rank. P has odd length and splits across the two centers.
std::vector<GammaVec> decompose_2mod4(int n, Sign sign) {
  if (n % 4 != 2 || n < 6) throw Error(Errc::NotApplicable, "needs n = 4m+2 >= 6, got " + std::to_string(n));
  const SplitPair prev = eulerian_A_split(n - 1);
  const HomBivPoly half = apply_D(prev.total()).times_st().divided_exactly(2);
  const auto [p1, p2] = split_odd_length(gamma_of(half.at_s_equals_one()));
  const GammaVec same = gamma_of(pick(prev, sign, true).at_s_equals_one());
  const GammaVec other = gamma_of(pick(prev, sign, false).at_s_equals_one());
  return {gamma_add(same, p1), gamma_add(gamma_times_t(other), p2)};
}

// n = 4m+3: one odd step applied to the n-1 identity above. With X = A^{+-}_{4m+1}
// on the matching side and Y on the other:
//   (1+t) X + t DX(1,t)                center 2m+1/2
//   tX + tY + (s+t)P + st DP at s=1   center 2m+1
//   (1+t) tY + t^2 DY(1,t)             center 2m+3/2
std::vector<GammaVec> decompose_3mod4(int n, Sign sign) {
  if (n % 4 != 3 || n < 7) throw Error(Errc::NotApplicable, "needs n = 4m+3 >= 7, got " + std::to_string(n));
  const SplitPair prev = eulerian_A_split(n - 2);
  const HomBivPoly& x = pick(prev, sign, true);
  const HomBivPoly& y = pick(prev, sign, false);
  const HomBivPoly half = apply_D(prev.total()).times_st().divided_exactly(2);
  const IntPoly1 one_plus_t{1, 1};
  const IntPoly1 t{0, 1};

  const IntPoly1 x1 = x.at_s_equals_one();
  const IntPoly1 y1 = y.at_s_equals_one();
  const IntPoly1 q1 = one_plus_t * x1 + t * apply_D(x).at_s_equals_one();
  const IntPoly1 q2 = t * x1 + t * y1 + foata_step(half).at_s_equals_one();
  const IntPoly1 q3 = one_plus_t * t * y1 + (t * t) * apply_D(y).at_s_equals_one();
  return {gamma_of(q1), gamma_of(q2), gamma_of(q3)};
}

// B analogue with no halving: B_n^+ = s B^+ + t B^- + st D B_{n-1}.
std::vector<GammaVec> decompose_B_odd(int n, Sign sign) {
  if (n % 2 == 0 || n < 3) throw Error(Errc::NotApplicable, "needs odd n >= 3, got " + std::to_string(n));
  const SplitPair prev = eulerian_B_split(n - 1);
  const HomBivPoly mixed = apply_D(prev.total()).times_st();
  const auto [p1, p2] = split_odd_length(gamma_of(mixed.at_s_equals_one()));
  const GammaVec same = gamma_of(pick(prev, sign, true).at_s_equals_one());
  const GammaVec other = gamma_of(pick(prev, sign, false).at_s_equals_one());
  return {gamma_add(same, p1), gamma_add(gamma_times_t(other), p2)};
}

std::vector<IdentityCheck> verify_gamma_addup(int m) {
  if (m < 1) throw Error(Errc::InvalidArgument, "gamma add-up needs m >= 1");
  const int n = 4 * m + 2;
  const GammaVec whole = gamma_A(n);
  std::vector<IdentityCheck> out;
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto parts = decompose_2mod4(n, sign);
    const GammaVec& low = parts[0];
    const GammaVec& high = parts[1];
    for (int k = 0; k < static_cast<int>(whole.gammas.size()); ++k) {
      const Integer a = low.at_exponent(k);
      const Integer b = high.at_exponent(k + 1);
      IdentityCheck c;
      c.identity = "gamma(A_" + std::to_string(n) + ")[" + std::to_string(k) + "] = low" + sign_name(sign) +
                   "[t^" + std::to_string(k) + "] + high" + sign_name(sign) + "[t^" + std::to_string(k + 1) + "]";
      c.lhs = whole.gammas[k].get_str();
      c.rhs = a.get_str() + " + " + b.get_str();
      c.pass = whole.gammas[k] == a + b;
      out.push_back(std::move(c));
    }
  }
  return out;
}

BivariateRemark remark_bivariate_counterexample() {
  const auto parts = decompose_2mod4(6, Sign::Plus);
  const GammaVec& low = parts[0];
  const GammaVec high_down{parts[1].r - 1, parts[1].n - 1, parts[1].gammas};
  BivariateRemark out{collapse_biv(low).times_s(), collapse_biv(high_down).times_t(), {}};

  auto add = [&](std::string identity, std::string lhs, std::string rhs) {
    const bool pass = lhs == rhs;
    out.checks.push_back({std::move(identity), std::move(lhs), std::move(rhs), pass});
  };
  const HomBivPoly a6 = eulerian_A_split(6).plus;
  add("f1(s,t) + f2(s,t) = A_6^+(s,t)", format_poly(out.f1 + out.f2), format_poly(a6));
  add("f1(1,t) = low part", format_poly(out.f1.at_s_equals_one()), format_poly(gamma_collapse(low)));
  add("f2(1,t) = high part", format_poly(out.f2.at_s_equals_one()), format_poly(gamma_collapse(parts[1])));
  for (const auto* f : {&out.f1, &out.f2}) {
    const std::string name = f == &out.f1 ? "f1" : "f2";
    std::string outcome;
    try {
      outcome = "expands: " + format_gamma_biv(gamma_expand_biv(*f));
    } catch (const Error& e) {
      outcome = e.code() == Errc::NotPalindromic ? "no bivariate gamma expansion" : e.what();
    }
    add(name + "(s,t) has no bivariate gamma expansion", outcome, "no bivariate gamma expansion");
  }
  return out;
}

}  // namespace eulerian
