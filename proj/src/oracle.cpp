#include "eulerian/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>

namespace eulerian {

int EnumerationBudget::limit(GroupKind kind) const noexcept {
  switch (kind) {
    case GroupKind::A: return A;
    case GroupKind::B: return B;
    case GroupKind::D: return D;
  }
  return 0;
}

void check_budget(GroupKind kind, int n, const EnumerationBudget& budget) {
  const int limit = budget.limit(kind);
  if (n > limit) {
    throw Error(Errc::BudgetExceeded, "enumeration of type " + std::string(to_string(kind)) +
                                          " at n = " + std::to_string(n) + " exceeds the budget n <= " +
                                          std::to_string(limit));
  }
}

unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Each partition (fixed |w_1|) fills its own counter table; tables are
// merged in partition order afterwards, so the result does not depend on
// scheduling.
template <class Counter, class Fn>
std::vector<Counter> reduce_partitions(GroupKind kind, Parity parity, int n, size_t cells,
                                       unsigned threads, Fn per_element) {
  std::vector<std::vector<Counter>> tables(n, std::vector<Counter>(cells, 0));
  std::atomic<int> next{1};
  auto worker = [&] {
    for (int first = next++; first <= n; first = next++) {
      auto& table = tables[first - 1];
      for_each_in_partition(kind, parity, n, first,
                            [&](std::span<const int> w) { per_element(w, table); });
    }
  };
  const unsigned count = std::min<unsigned>(resolve_threads(threads), n);
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  std::vector<Counter> total(cells, 0);
  for (const auto& table : tables)
    for (size_t i = 0; i < cells; ++i) total[i] += table[i];
  return total;
}

int family_degree(GroupKind kind, int n) { return kind == GroupKind::A ? n - 1 : n; }

template <class Counter>
HomBivPoly from_counts(int degree, const std::vector<Counter>& counts) {
  std::vector<Integer> c(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    if constexpr (std::is_signed_v<Counter>) {
      c[i] = Integer(static_cast<signed long>(counts[i]));
    } else {
      c[i] = Integer(static_cast<unsigned long>(counts[i]));
    }
  }
  return HomBivPoly(degree, std::move(c));
}

}  // namespace

HomBivPoly descent_poly(GroupKind kind, Parity parity, int n, const OracleOptions& opts) {
  check_group(kind, n);
  check_budget(kind, n, opts.budget);
  const int degree = family_degree(kind, n);
  auto counts = reduce_partitions<std::uint64_t>(
      kind, parity, n, degree + 1, opts.threads,
      [kind](std::span<const int> w, std::vector<std::uint64_t>& table) {
        ++table[stat::descents(kind, w)];
      });
  return from_counts(degree, counts);
}

HomBivPoly signed_descent_poly_B(int n, const OracleOptions& opts) {
  check_group(GroupKind::B, n);
  check_budget(GroupKind::B, n, opts.budget);
  auto counts = reduce_partitions<std::int64_t>(
      GroupKind::B, Parity::All, n, n + 1, opts.threads,
      [](std::span<const int> w, std::vector<std::int64_t>& table) {
        table[stat::des_B(w)] += stat::inv_B(w) % 2 == 0 ? 1 : -1;
      });
  return from_counts(n, counts);
}

BivPoly two_sided_poly(GroupKind kind, Parity parity, int n, const OracleOptions& opts) {
  check_group(kind, n);
  check_budget(kind, n, opts.budget);
  const int shift = kind == GroupKind::A ? 1 : 0;
  const int side = n + 2;
  auto counts = reduce_partitions<std::uint64_t>(
      kind, parity, n, static_cast<size_t>(side) * side, opts.threads,
      [kind, side, shift](std::span<const int> w, std::vector<std::uint64_t>& table) {
        const int i = stat::descents(kind, w) + shift;
        const int j = stat::ides(kind, w) + shift;
        ++table[static_cast<size_t>(i) * side + j];
      });
  BivPoly out;
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) {
      const auto c = counts[static_cast<size_t>(i) * side + j];
      if (c != 0) out.add_term(i, j, Integer(static_cast<unsigned long>(c)));
    }
  return out;
}

HomBivPoly cfactor_product(const SignedPerm& u) {
  if (!u.is_unsigned()) throw Error(Errc::NotTypeA, "c-factors are defined for plain permutations");
  const int n = u.size();
  if (n < 3) {
    throw Error(Errc::FactorizationUnavailable,
                "the first factor pair reads u_3; use the direct signing sum for n < 3");
  }
  auto w = u.window();
  HomBivPoly prod;
  if (w[0] < w[1] && w[1] < w[2]) {
    prod = HomBivPoly(2, {2, 0, 2});
  } else if (w[0] > w[1] && w[1] < w[2]) {
    prod = HomBivPoly(2, {0, 4, 0});
  } else {
    // u1 < u2 > u3 or u1 > u2 > u3
    prod = HomBivPoly(2, {0, 2, 2});
  }
  for (int j = 3; j <= n; ++j) {
    const int prev = w[j - 2];
    const int cur = w[j - 1];
    const bool next_greater = j == n || w[j] > cur;
    HomBivPoly c;
    if (prev < cur && !next_greater) {
      c = HomBivPoly(1, {0, 2});  // peak
    } else if (prev > cur && next_greater) {
      c = HomBivPoly(1, {2, 0});  // valley
    } else {
      c = HomBivPoly(1, {1, 1});
    }
    prod = prod * c;
  }
  return prod;
}

HomBivPoly signing_sum_D(const SignedPerm& u) {
  if (!u.is_unsigned()) throw Error(Errc::NotTypeA, "signings start from a plain permutation");
  const int n = u.size();
  if (n < 2) throw Error(Errc::TooSmallForD, "type D needs n >= 2");
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<int> w(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) w[i] = (mask >> (n - 1 - i)) & 1u ? -u.window()[i] : u.window()[i];
    ++counts[stat::des_D(w)];
  }
  return from_counts(n, counts);
}

}  // namespace eulerian
