#include <algorithm>
#include <vector>

#include "eulerian/conjectures.hpp"

namespace eulerian {
namespace {

// Dense polynomial over Q, lowest degree first, trailing zeros trimmed.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly derivative(const RatPoly& p) {
  RatPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Long division; returns the remainder and stores the quotient.
RatPoly divmod(RatPoly a, const RatPoly& b, RatPoly* quotient) {
  RatPoly q(std::max(0, deg(a) - deg(b) + 1));
  while (!a.empty() && deg(a) >= deg(b)) {
    const int shift = deg(a) - deg(b);
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    a.back() = 0;
    trim(a);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return a;
}

RatPoly monic_gcd(RatPoly a, RatPoly b) {
  while (!b.empty()) {
    RatPoly r = divmod(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  const Rational lead = a.back();
  for (auto& c : a) c /= lead;
  return a;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

RealRootReport check_real_rooted(const IntPoly1& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "real-rootedness of the zero polynomial");
  RatPoly f;
  for (const auto& c : p.coeffs()) f.emplace_back(c);
  RatPoly squarefree;
  divmod(f, monic_gcd(f, derivative(f)), &squarefree);

  RealRootReport report;
  report.squarefree_degree = deg(squarefree);
  if (report.squarefree_degree == 0) {
    report.real_rooted = true;
    return report;
  }
  std::vector<RatPoly> chain{squarefree, derivative(squarefree)};
  while (true) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back(), nullptr);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_neg_inf, at_pos_inf;
  for (const auto& q : chain) {
    const int lead = sign(q.back());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(deg(q) % 2 == 0 ? lead : -lead);
  }
  report.distinct_real_roots = sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
  report.real_rooted = report.distinct_real_roots == report.squarefree_degree;
  return report;
}

}  // namespace eulerian
