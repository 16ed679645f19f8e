#include "eulerian/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "eulerian/conjectures.hpp"
#include "eulerian/decompose.hpp"
#include "eulerian/recurrence.hpp"
#include "eulerian/serialize.hpp"

namespace eulerian {
namespace {

struct Recorder {
  std::vector<CheckResult> out;

  void operator()(std::string name, int n, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), n, pass, std::move(detail)});
  }
  template <class A, class B>
  void equal(std::string name, int n, const A& lhs, const B& rhs) {
    const bool pass = lhs == rhs;
    (*this)(std::move(name), n, pass, pass ? std::string{} : format_poly(lhs) + " vs " + format_poly(rhs));
  }
};

std::string join(const std::vector<Integer>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

HomBivPoly half_sum(const HomBivPoly& a, const HomBivPoly& b) { return (a + b).divided_exactly(2); }

// ---------------------------------------------------------------------------

void recurrences(Recorder& rec, int max_n, const OracleOptions& opts) {
  const auto& budget = opts.budget;
  for (int n = 1; n <= std::min(max_n, std::min(budget.A, 10)); ++n) {
    rec.equal("A_n engine = oracle", n, eulerian_A(n), descent_poly(GroupKind::A, Parity::All, n, opts));
    const SplitPair s = eulerian_A_split(n);
    rec.equal("A_n^+ engine = oracle", n, s.plus, descent_poly(GroupKind::A, Parity::Even, n, opts));
    rec.equal("A_n^- engine = oracle", n, s.minus, descent_poly(GroupKind::A, Parity::Odd, n, opts));
  }
  for (int n = 1; n <= std::min(max_n, std::min(budget.B, 8)); ++n) {
    rec.equal("B_n engine = oracle", n, eulerian_B(n), descent_poly(GroupKind::B, Parity::All, n, opts));
    const SplitPair s = eulerian_B_split(n);
    const HomBivPoly plus = descent_poly(GroupKind::B, Parity::Even, n, opts);
    const HomBivPoly minus = descent_poly(GroupKind::B, Parity::Odd, n, opts);
    rec.equal("B_n^+ engine = oracle", n, s.plus, plus);
    rec.equal("B_n^- engine = oracle", n, s.minus, minus);
    const HomBivPoly sgn = signed_descent_poly_B(n, opts);
    rec.equal("SgnB_n = B_n^+ - B_n^-", n, sgn, plus - minus);
    rec.equal("B_n^+ = (B_n + SgnB_n)/2", n, plus, half_sum(plus + minus, sgn));
  }
  for (int n = 3; n <= std::min(max_n, std::min(budget.D, 8)); ++n) {
    const SplitPair s = eulerian_D_split(n, opts.threads);
    rec.equal("D_n^+ engine = oracle", n, s.plus, descent_poly(GroupKind::D, Parity::Even, n, opts));
    rec.equal("D_n^- engine = oracle", n, s.minus, descent_poly(GroupKind::D, Parity::Odd, n, opts));
  }
  for (int n = 1; n <= max_n; ++n) {
    const GammaVec ga = gamma_A(n);
    rec("gamma_A recurrence = expansion of A_n", n, ga == gamma_expand_biv(eulerian_A(n)), join(ga.gammas));
    const GammaVec gb = gamma_B(n);
    rec("gamma_B recurrence = expansion of B_n", n, gb == gamma_expand_biv(eulerian_B(n)), join(gb.gammas));
    bool odd_pattern = ga.gammas[0] == 1;
    for (size_t i = 1; i < ga.gammas.size(); ++i) odd_pattern &= mpz_even_p(ga.gammas[i].get_mpz_t()) != 0;
    rec("gamma_{n,0} = 1 and the rest even", n, odd_pattern, join(ga.gammas));
  }
  if (max_n >= 2) {
    const CoeffTables t = coeff_recurrences(max_n);
    for (int n = 2; n <= max_n; ++n) {
      const SplitPair a = eulerian_A_split(n);
      const SplitPair b = eulerian_B_split(n);
      auto row = [](const HomBivPoly& p) { return std::vector<Integer>(p.coeffs().begin(), p.coeffs().end()); };
      rec("a^+ coefficient recurrence = A_n^+", n, t.a_plus[n] == row(a.plus), join(t.a_plus[n]));
      rec("a^- coefficient recurrence = A_n^-", n, t.a_minus[n] == row(a.minus), join(t.a_minus[n]));
      rec("b^+ coefficient recurrence = B_n^+", n, t.b_plus[n] == row(b.plus), join(t.b_plus[n]));
      rec("b^- coefficient recurrence = B_n^-", n, t.b_minus[n] == row(b.minus), join(t.b_minus[n]));
    }
  }
}

// ---------------------------------------------------------------------------

// Generating polynomial keyed by (des, asc, pos) with an integer weight.
using Tally = std::map<std::tuple<int, int, int>, std::int64_t>;

void bijections(Recorder& rec, int max_n, const OracleOptions& opts) {
  for (int n = 3; n <= std::min({max_n, opts.budget.A, 8}); ++n) {
    bool rot_ok = true, comp_ok = true;
    int applicable = 0;
    for (const SignedPerm& p : iterate_group(GroupKind::A, Parity::All, n)) {
      const int d = stat::des_A(p.window());
      const int inv = stat::inv_A(p.window());
      try {
        const SignedPerm f = rotate_about_max(p);
        ++applicable;
        rot_ok &= stat::des_A(f.window()) == d && (stat::inv_A(f.window()) - inv) % 2 != 0 &&
                  rotate_about_max(f) == p;
      } catch (const Error& e) {
        rot_ok &= e.code() == Errc::NotApplicable;
      }
      const SignedPerm c = complement(p);
      comp_ok &= stat::des_A(c.window()) == n - 1 - d && inv + stat::inv_A(c.window()) == n * (n - 1) / 2 &&
                 complement(c) == p;
    }
    rec("rotation keeps des, flips inv parity, is an involution", n, rot_ok,
        std::to_string(applicable) + " applicable elements");
    rec("complement reverses des and inv, is an involution", n, comp_ok);
  }

  const int max_b = std::min({max_n, opts.budget.B, 7});
  for (int n = 2; n <= max_b; ++n) {
    // flip of the last sign on windows ending (..., +-n, +-(n-1))
    Tally s_sum, t_sum, signed_union;
    bool flip_ok = true;
    // pos_n != n, summed per position with the sign (-1)^{inv_B}
    Tally signed_off_last, plus_off_last, minus_off_last, all_off_last;
    bool first_ok = true, negate_ok = true;
    for_each_element(GroupKind::B, Parity::All, n, [&](std::span<const int> w) {
      const SignedPerm p(std::vector<int>(w.begin(), w.end()));
      const int db = stat::des_B(w);
      const int inv = stat::inv_B(w);
      const int pos = p.pos_max();
      const auto key = std::make_tuple(db, n - db, pos);
      const bool even = inv % 2 == 0;
      if (std::abs(w[n - 1]) == n - 1 && pos == n - 1) {
        (even ? s_sum : t_sum)[key] += 1;
        signed_union[key] += even ? 1 : -1;
        const SignedPerm h = flip_last_sign(p);
        flip_ok &= stat::des_B(h.window()) == db && h.pos_max() == pos &&
                   (stat::inv_B(h.window()) - inv) % 2 != 0 && flip_last_sign(h) == p;
      }
      if (pos != n) {
        signed_off_last[key] += even ? 1 : -1;
        (even ? plus_off_last : minus_off_last)[key] += 1;
        all_off_last[key] += 1;
      }
      const SignedPerm f = flip_first_sign(p);
      const int before = (w[0] > w[1]) + (w[0] + w[1] < 0);
      const int after = (f.at(1) > f.at(2)) + (f.at(1) + f.at(2) < 0);
      first_ok &= before == after && stat::des_D(f.window()) == stat::des_D(w) &&
                  (stat::inv_D(f.window()) - stat::inv_D(w)) % 2 == 0 && flip_first_sign(f) == p;
      if (n % 2 == 0) {
        negate_ok &= (stat::inv_B(negate_all(p).window()) - inv) % 2 == 0;
      }
    });
    auto zero = [](const Tally& t) {
      return std::all_of(t.begin(), t.end(), [](const auto& kv) { return kv.second == 0; });
    };
    rec("last-sign flip: unsigned sums over S and T agree", n, s_sum == t_sum);
    rec("last-sign flip: signed sum over S and T vanishes", n, zero(signed_union));
    rec("last-sign flip keeps des_B and pos_n, flips inv_B parity", n, flip_ok);
    rec("signed sum over pos_n != n vanishes per position", n, zero(signed_off_last));
    Tally doubled_plus = plus_off_last;
    for (auto& kv : doubled_plus) kv.second *= 2;
    rec("pos_n != n: B_n^+ sum = B_n^- sum = half the B_n sum", n,
        plus_off_last == minus_off_last && doubled_plus == all_off_last);
    rec("first-sign flip keeps des_D and inv_D parity", n, first_ok);
    if (n % 2 == 0) {
      rec("negate_all keeps inv_B parity (even n)", n, negate_ok);
    } else {
      const SplitPair b = eulerian_B_split(n);
      bool mirror = true;
      for (int k = 0; k <= n; ++k) mirror &= b.plus.coeff(k) == b.minus.coeff(n - k);
      rec("b^+_{n,k} = b^-_{n,n-k} (odd n)", n, mirror);
    }
  }

  for (int n = 2; n <= std::min({max_n, opts.budget.A, 7}); ++n) {
    bool constant = true;
    for (const SignedPerm& u : iterate_group(GroupKind::A, Parity::All, n)) {
      const int want = stat::inv_A(u.window()) % 2;
      for (const SignedPerm& w : signings(u)) constant &= stat::inv_D(w.window()) % 2 == want;
    }
    rec("signings of u share inv_D parity, even iff u is even", n, constant);
  }
}

// ---------------------------------------------------------------------------

void gamma_theorems(Recorder& rec, int max_n) {
  for (int n = 2; n <= max_n; ++n) {
    const SplitPair a = eulerian_A_split(n);
    const bool expect = n % 4 == 0 || n % 4 == 1;
    const bool got = is_st_symmetric(a.plus) && is_st_symmetric(a.minus);
    rec("A_n^+- symmetric iff n = 0,1 mod 4", n, got == expect);
    if (expect && n >= 4) {
      const GammaVec gp = gamma_expand_biv(a.plus);
      const GammaVec gm = gamma_expand_biv(a.minus);
      rec("A_n^+- gamma nonnegative with equal centers", n,
          gp.is_nonnegative() && gm.is_nonnegative() && gp.center() == gm.center(),
          format_gamma_biv(gp) + " | " + format_gamma_biv(gm));
    }
    if (!expect && n >= 3) {
      bool raised = true;
      for (const auto* half : {&a.plus, &a.minus}) {
        try {
          gamma_expand(half->at_s_equals_one());
          raised = false;
        } catch (const Error& e) {
          raised &= e.code() == Errc::NotPalindromic;
        }
      }
      rec("A_n^+- gamma expansion refused off 0,1 mod 4", n, raised);
    }
  }
  for (int n = 1; n <= max_n; ++n) {
    const SplitPair b = eulerian_B_split(n);
    const bool expect = n % 2 == 0;
    rec("B_n^+- symmetric iff n even", n, (is_st_symmetric(b.plus) && is_st_symmetric(b.minus)) == expect);
    if (expect) {
      const GammaVec gp = gamma_expand_biv(b.plus);
      const GammaVec gm = gamma_expand_biv(b.minus);
      rec("B_n^+- gamma nonnegative, center n/2", n,
          gp.is_nonnegative() && gm.is_nonnegative() && gp.center() == half_of(n) &&
              gm.center() == half_of(n),
          format_gamma_biv(gp) + " | " + format_gamma_biv(gm));
    }
  }
  for (int n = 3; n <= std::min(max_n, 12); ++n) {
    const SplitPair d = eulerian_D_split(n);
    const GammaVec gp = gamma_expand(d.plus.at_s_equals_one());
    const GammaVec gm = gamma_expand(d.minus.at_s_equals_one());
    rec("D_n^+- gamma nonnegative with equal centers", n,
        gp.is_nonnegative() && gm.is_nonnegative() && gp.center() == gm.center(),
        format_gamma(gp) + " | " + format_gamma(gm));
  }
  for (int n = 6; n <= max_n; n += 4) {
    const int m = (n - 2) / 4;
    const SplitPair a = eulerian_A_split(n);
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const auto parts = decompose_2mod4(n, sign);
      const HomBivPoly& target = sign == Sign::Plus ? a.plus : a.minus;
      rec(std::string("A_n^") + (sign == Sign::Plus ? "+" : "-") + " = two gamma-positive parts (n = 2 mod 4)", n,
          parts[0].is_nonnegative() && parts[1].is_nonnegative() && collapse_sum(parts) == target.at_s_equals_one() &&
              parts[0].center() == Rational(2 * m) && parts[1].center() == Rational(2 * m + 1),
          format_gamma(parts[0]) + " | " + format_gamma(parts[1]));
    }
  }
  for (int n = 7; n <= max_n; n += 4) {
    const int m = (n - 3) / 4;
    const SplitPair a = eulerian_A_split(n);
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const auto parts = decompose_3mod4(n, sign);
      const HomBivPoly& target = sign == Sign::Plus ? a.plus : a.minus;
      bool ok = collapse_sum(parts) == target.at_s_equals_one();
      for (int k = 0; k < 3; ++k) {
        ok &= parts[k].is_nonnegative() && parts[k].center() == half_of(4 * m + 1 + k);
      }
      rec(std::string("A_n^") + (sign == Sign::Plus ? "+" : "-") + " = three gamma-positive parts (n = 3 mod 4)", n,
          ok);
    }
  }
  for (int n = 3; n <= max_n; n += 2) {
    const SplitPair b = eulerian_B_split(n);
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const auto parts = decompose_B_odd(n, sign);
      const HomBivPoly& target = sign == Sign::Plus ? b.plus : b.minus;
      rec(std::string("B_n^") + (sign == Sign::Plus ? "+" : "-") + " = two gamma-positive parts (odd n)", n,
          parts[0].is_nonnegative() && parts[1].is_nonnegative() && collapse_sum(parts) == target.at_s_equals_one() &&
              parts[0].center() == half_of(n - 1) && parts[1].center() == half_of(n + 1),
          format_gamma(parts[0]) + " | " + format_gamma(parts[1]));
    }
  }
}

// ---------------------------------------------------------------------------

void identities(Recorder& rec, int max_n, const OracleOptions& opts) {
  for (int m = 1; 4 * m + 2 <= std::max(max_n, 6); ++m) {
    for (const auto& c : verify_gamma_addup(m)) rec(c.identity, 4 * m + 2, c.pass, c.lhs + " = " + c.rhs);
  }
  for (const auto& c : remark_bivariate_counterexample().checks) rec(c.identity, 6, c.pass, c.lhs);

  for (int n = 3; n <= std::min({max_n, opts.budget.A, 7}); ++n) {
    HomBivPoly total(n);
    bool direct = true, closed = true;
    int eligible = 0;
    for (const SignedPerm& u : iterate_group(GroupKind::A, Parity::All, n)) {
      const HomBivPoly prod = cfactor_product(u);
      direct &= prod == signing_sum_D(u);
      total += prod;
      const auto w = u.window();
      if ((w[0] < w[1] && w[1] > w[2]) || (w[0] > w[1] && w[1] > w[2]) || (w[2] > w[0] && w[0] > w[1])) {
        ++eligible;
        const int l = stat::lpk(w);
        HomBivPoly form = HomBivPoly::monomial(2 * l, l, Integer(1) << (2 * l)) * HomBivPoly::s_plus_t_pow(n - 2 * l);
        closed &= prod == form;
      }
    }
    rec("c-factor product = direct signing sum, every u", n, direct);
    rec("sum of c-factor products = 2 D_n", n, total == Integer(2) * eulerian_D_split(n).total());
    rec("left-peak closed form on eligible shapes", n, closed, std::to_string(eligible) + " eligible");
  }

  const auto& budget = opts.budget;
  for (GroupKind kind : {GroupKind::A, GroupKind::B, GroupKind::D}) {
    const int lo = kind == GroupKind::D ? 2 : 1;
    for (int n = lo; n <= std::min(max_n, std::min(budget.limit(kind), 8)); ++n) {
      const HomBivPoly all = descent_poly(kind, Parity::All, n, opts);
      const HomBivPoly even = descent_poly(kind, Parity::Even, n, opts);
      const HomBivPoly odd = descent_poly(kind, Parity::Odd, n, opts);
      const std::string name(to_string(kind));
      rec.equal(name + "_n = even part + odd part", n, all, even + odd);
      const Integer order(static_cast<unsigned long>(group_order(kind, n)));
      bool card = all.sum_of_coefficients() == order;
      if (n >= 2) card &= even.sum_of_coefficients() * 2 == order;
      rec("coefficient sums: group order, halves for n >= 2 (" + name + ")", n, card);
    }
  }
}

}  // namespace

std::vector<CheckResult> run_verify_suite(VerifySuite suite, int max_n, const OracleOptions& opts) {
  if (max_n < 1) throw Error(Errc::InvalidArgument, "max-n must be positive");
  Recorder rec;
  switch (suite) {
    case VerifySuite::Recurrences: recurrences(rec, max_n, opts); break;
    case VerifySuite::Bijections: bijections(rec, max_n, opts); break;
    case VerifySuite::GammaTheorems: gamma_theorems(rec, max_n); break;
    case VerifySuite::Identities: identities(rec, max_n, opts); break;
  }
  return std::move(rec.out);
}

}  // namespace eulerian
