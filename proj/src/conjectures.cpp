#include "eulerian/conjectures.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "eulerian/recurrence.hpp"
#include "eulerian/serialize.hpp"

namespace eulerian {
namespace {

Verdict make_verdict(std::string family, std::string parity, int n) {
  Verdict v;
  v.family = std::move(family);
  v.parity = std::move(parity);
  v.n = n;
  return v;
}

Verdict univariate_verdict(std::string family, std::string parity, int n, const HomBivPoly& p) {
  Verdict v = make_verdict(std::move(family), std::move(parity), n);
  const IntPoly1 f = p.at_s_equals_one();
  v.symmetric = is_palindromic(f);
  if (v.symmetric) {
    const GammaVec g = gamma_expand(f);
    v.expanded = true;
    v.gamma_nonneg = g.is_nonnegative();
  }
  const RealRootReport rr = check_real_rooted(f);
  v.real_rooted = rr.real_rooted;
  v.distinct_real_roots = rr.distinct_real_roots;
  v.flagged = !rr.real_rooted;
  if (v.flagged) v.witness = format_poly(f);
  return v;
}

Verdict two_sided_verdict(std::string family, std::string parity, int n, int N, const BivPoly& p) {
  Verdict v = make_verdict(std::move(family), std::move(parity), n);
  try {
    const TSGammaVec g = ts_expand(p, N);
    v.symmetric = true;
    v.expanded = true;
    v.gamma_nonneg = g.is_nonnegative();
    v.flagged = !*v.gamma_nonneg;
    if (v.flagged) v.witness = format_poly(p) + " = " + format_ts_gamma(g);
  } catch (const NotInSpanError& e) {
    v.symmetric = true;
    v.expanded = false;
    v.flagged = true;
    v.witness = format_poly(p) + "; residual " + format_poly(e.residual());
  } catch (const Error& e) {
    if (e.code() != Errc::SymmetryViolated) throw;
    v.symmetric = false;
    v.flagged = true;
    v.witness = format_poly(p) + "; " + e.what();
  }
  return v;
}

}  // namespace

std::vector<Verdict> run_conjecture_suite(const ConjectureConfig& config) {
  std::vector<std::function<Verdict()>> tasks;
  OracleOptions inner = config.oracle;
  inner.threads = 1;

  if (config.realroot) {
    for (int n = 4; n <= config.max_n_A; ++n) {
      if (n % 4 != 0 && n % 4 != 1) continue;
      tasks.emplace_back([n] { return univariate_verdict("A", "plus", n, eulerian_A_split(n).plus); });
      tasks.emplace_back([n] { return univariate_verdict("A", "minus", n, eulerian_A_split(n).minus); });
    }
    for (int n = 2; n <= config.max_n_B; n += 2) {
      tasks.emplace_back([n] { return univariate_verdict("B", "plus", n, eulerian_B_split(n).plus); });
      tasks.emplace_back([n] { return univariate_verdict("B", "minus", n, eulerian_B_split(n).minus); });
    }
    for (int n = 2; n <= config.max_n_D; ++n) {
      tasks.emplace_back([n] { return univariate_verdict("D", "plus", n, eulerian_D_split(n, 1).plus); });
      tasks.emplace_back([n] { return univariate_verdict("D", "minus", n, eulerian_D_split(n, 1).minus); });
    }
  }
  if (config.twosided) {
    auto add = [&](GroupKind kind, Parity parity, int n) {
      const std::string family = "TS" + std::string(to_string(kind));
      const std::string label = parity == Parity::All ? "all" : (parity == Parity::Even ? "plus" : "minus");
      const int N = kind == GroupKind::A ? n + 1 : n;
      tasks.emplace_back([=] { return two_sided_verdict(family, label, n, N, two_sided_poly(kind, parity, n, inner)); });
    };
    for (int n = 1; n <= config.max_n_twosided; ++n) {
      add(GroupKind::A, Parity::All, n);
      if (n % 4 == 0 || n % 4 == 1) {
        add(GroupKind::A, Parity::Even, n);
        add(GroupKind::A, Parity::Odd, n);
      }
    }
    for (int n = 2; n <= config.max_n_twosided; n += 2) {
      add(GroupKind::B, Parity::Even, n);
      add(GroupKind::B, Parity::Odd, n);
    }
    for (int n = 2; n <= config.max_n_twosided; ++n) {
      add(GroupKind::D, Parity::Even, n);
      add(GroupKind::D, Parity::Odd, n);
    }
  }

  // Results land in task order whatever the scheduling.
  std::vector<Verdict> out(tasks.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const unsigned count = std::min<size_t>(resolve_threads(config.oracle.threads), std::max<size_t>(tasks.size(), 1));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < count; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace eulerian
