#include "eulerian/recurrence.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

#include "eulerian/oracle.hpp"
#include "eulerian/signed_perm.hpp"

namespace eulerian {

// A constant has DP = 0, which apply_D reports at degree 0 rather than -1.
HomBivPoly foata_step(const HomBivPoly& p) {
  if (p.degree() == 0) return p.times_s_plus_t();
  return p.times_s_plus_t() + apply_D(p).times_st();
}

HomBivPoly foata_step_B(const HomBivPoly& p) {
  if (p.degree() == 0) return p.times_s_plus_t();
  return p.times_s_plus_t() + Integer(2) * apply_D(p).times_st();
}

HomBivPoly eulerian_A(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "A_n needs n >= 1");
  HomBivPoly a = HomBivPoly::constant(1);
  for (int m = 1; m < n; ++m) a = foata_step(a);
  return a;
}

SplitPair eulerian_A_split(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "A_n needs n >= 1");
  if (n == 1) return {HomBivPoly::constant(1), HomBivPoly(0)};
  SplitPair cur{HomBivPoly(1, {1, 0}), HomBivPoly(1, {0, 1})};
  for (int m = 3; m <= n; ++m) {
    if (m % 2 == 1) {
      cur = {foata_step(cur.plus), foata_step(cur.minus)};
    } else {
      const HomBivPoly half = apply_D(cur.total()).times_st().divided_exactly(2);
      cur = {cur.plus.times_s() + cur.minus.times_t() + half,
             cur.minus.times_s() + cur.plus.times_t() + half};
    }
  }
  return cur;
}

GammaVec gamma_A(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "A_n needs n >= 1");
  std::vector<Integer> g{1};
  for (int m = 1; m < n; ++m) {
    std::vector<Integer> next(m / 2 + 1);
    for (int i = 0; i < static_cast<int>(next.size()); ++i) {
      if (i < static_cast<int>(g.size())) next[i] += (i + 1) * g[i];
      if (i >= 1) next[i] += 2 * (m + 1 - 2 * i) * g[i - 1];
    }
    g = std::move(next);
  }
  return GammaVec{0, n - 1, std::move(g)};
}

HomBivPoly eulerian_B(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "B_n needs n >= 1");
  HomBivPoly b(1, {1, 1});
  for (int m = 1; m < n; ++m) b = foata_step_B(b);
  return b;
}

GammaVec gamma_B(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "B_n needs n >= 1");
  std::vector<Integer> g{1};
  for (int m = 1; m < n; ++m) {
    std::vector<Integer> next((m + 1) / 2 + 1);
    for (int i = 0; i < static_cast<int>(next.size()); ++i) {
      if (i < static_cast<int>(g.size())) next[i] += (2 * i + 1) * g[i];
      if (i >= 1) next[i] += 4 * (m - 2 * (i - 1)) * g[i - 1];
    }
    g = std::move(next);
  }
  return GammaVec{0, n, std::move(g)};
}

SplitPair eulerian_B_split(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "B_n needs n >= 1");
  SplitPair cur{HomBivPoly(1, {1, 0}), HomBivPoly(1, {0, 1})};
  for (int m = 2; m <= n; ++m) {
    const HomBivPoly mixed = apply_D(cur.total()).times_st();
    cur = {cur.plus.times_s() + cur.minus.times_t() + mixed,
           cur.minus.times_s() + cur.plus.times_t() + mixed};
  }
  return cur;
}

namespace {

constexpr int kMaxFastD = 16;

// Same product as cfactor_product, on machine words. Coefficients stay below
// 2^n n! for n <= 16, so uint64 is enough for the per-partition sums too.
void cfactor_words(std::span<const int> u, std::uint64_t* out) {
  const int n = static_cast<int>(u.size());
  std::fill(out, out + n + 1, 0);
  if (u[0] < u[1] && u[1] < u[2]) {
    out[0] = 2, out[2] = 2;
  } else if (u[0] > u[1] && u[1] < u[2]) {
    out[1] = 4;
  } else {
    out[1] = 2, out[2] = 2;
  }
  for (int j = 3; j <= n; ++j) {
    const int prev = u[j - 2];
    const int cur = u[j - 1];
    const bool next_greater = j == n || u[j] > cur;
    std::uint64_t a = 1, b = 1;  // a*s + b*t
    if (prev < cur && !next_greater) {
      a = 0, b = 2;
    } else if (prev > cur && next_greater) {
      a = 2, b = 0;
    }
    for (int i = j; i >= 1; --i) out[i] = a * out[i] + b * out[i - 1];
    out[0] *= a;
  }
}

}  // namespace

SplitPair eulerian_D_split(int n, unsigned threads) {
  if (n < 2) throw Error(Errc::TooSmallForD, "type D needs n >= 2");
  if (n < 3) {
    OracleOptions opts;
    opts.threads = threads;
    return {descent_poly(GroupKind::D, Parity::Even, n, opts),
            descent_poly(GroupKind::D, Parity::Odd, n, opts)};
  }
  if (n > kMaxFastD) {
    throw Error(Errc::InvalidArgument, "the c-factor engine is limited to n <= " + std::to_string(kMaxFastD));
  }
  const size_t cells = n + 1;
  // tables[first-1] holds plus sums in [0, cells) and minus sums in [cells, 2 cells).
  std::vector<std::vector<std::uint64_t>> tables(n, std::vector<std::uint64_t>(2 * cells, 0));
  std::atomic<int> next{1};
  auto worker = [&] {
    std::vector<std::uint64_t> prod(cells);
    for (int first = next++; first <= n; first = next++) {
      auto& table = tables[first - 1];
      for_each_in_partition(GroupKind::A, Parity::All, n, first, [&](std::span<const int> u) {
        cfactor_words(u, prod.data());
        const size_t base = stat::inv_A(u) % 2 == 0 ? 0 : cells;
        for (size_t i = 0; i < cells; ++i) table[base + i] += prod[i];
      });
    }
  };
  const unsigned count = std::min<unsigned>(resolve_threads(threads), n);
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  std::vector<Integer> plus(cells), minus(cells);
  for (const auto& table : tables) {
    for (size_t i = 0; i < cells; ++i) {
      plus[i] += Integer(static_cast<unsigned long>(table[i]));
      minus[i] += Integer(static_cast<unsigned long>(table[cells + i]));
    }
  }
  return {HomBivPoly(n, std::move(plus)).divided_exactly(2),
          HomBivPoly(n, std::move(minus)).divided_exactly(2)};
}

namespace {

Integer at(const std::vector<Integer>& row, int k) {
  if (k < 0 || k >= static_cast<int>(row.size())) return 0;
  return row[k];
}

Integer halve(const Integer& x) {
  if (!mpz_divisible_ui_p(x.get_mpz_t(), 2)) {
    throw Error(Errc::InternalNonIntegral, "odd value " + x.get_str() + " under the halving step");
  }
  return x / 2;
}

}  // namespace

CoeffTables coeff_recurrences(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "coefficient tables need n >= 1");
  CoeffTables t;
  t.a_plus.resize(n + 1);
  t.a_minus.resize(n + 1);
  t.b_plus.resize(n + 1);
  t.b_minus.resize(n + 1);
  t.a_plus[1] = {1};
  t.a_minus[1] = {0};
  t.b_plus[1] = {1, 0};
  t.b_minus[1] = {0, 1};
  for (int m = 2; m <= n; ++m) {
    const auto& P = t.a_plus[m - 1];
    const auto& M = t.a_minus[m - 1];
    auto& plus = t.a_plus[m];
    auto& minus = t.a_minus[m];
    plus.resize(m);
    minus.resize(m);
    for (int k = 0; k < m; ++k) {
      if (m % 2 == 1) {
        plus[k] = (m - k) * at(P, k - 1) + (k + 1) * at(P, k);
        minus[k] = (m - k) * at(M, k - 1) + (k + 1) * at(M, k);
      } else {
        plus[k] = halve((k + 2) * at(P, k) + k * at(M, k) + (m - k - 1) * at(P, k - 1) +
                        (m - k + 1) * at(M, k - 1));
        minus[k] = halve((k + 2) * at(M, k) + k * at(P, k) + (m - k - 1) * at(M, k - 1) +
                         (m - k + 1) * at(P, k - 1));
      }
    }
    const auto& BP = t.b_plus[m - 1];
    const auto& BM = t.b_minus[m - 1];
    auto& bplus = t.b_plus[m];
    auto& bminus = t.b_minus[m];
    bplus.resize(m + 1);
    bminus.resize(m + 1);
    for (int k = 0; k <= m; ++k) {
      bplus[k] = 2 * k * at(BM, k) + (2 * m - 2 * k + 1) * at(BM, k - 1) + at(BP, k);
      bminus[k] = 2 * k * at(BP, k) + (2 * m - 2 * k + 1) * at(BP, k - 1) + at(BM, k);
    }
  }
  return t;
}

}  // namespace eulerian
