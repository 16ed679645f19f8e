#include "eulerian/signed_perm.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

namespace eulerian {

std::string_view to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::A: return "A";
    case GroupKind::B: return "B";
    case GroupKind::D: return "D";
  }
  return "?";
}

std::string_view to_string(Parity parity) noexcept {
  switch (parity) {
    case Parity::All: return "all";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
  }
  return "?";
}

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
  const int n = size();
  if (n == 0) throw Error(Errc::InvalidArgument, "empty window");
  std::vector<bool> seen(n + 1, false);
  for (int x : w_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) {
      throw Error(Errc::InvalidArgument, "window " + to_string() + " is not a signed permutation");
    }
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::vector<int> w;
  size_t pos = 0;
  while (true) {
    const size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    if (!tok.empty() && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (tok.empty() || ec != std::errc() || ptr != e) {
      throw Error(Errc::InvalidArgument, "malformed window entry '" + std::string(tok) + "'");
    }
    w.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return SignedPerm(std::move(w));
}

int SignedPerm::negs() const noexcept { return stat::negs(w_); }

int SignedPerm::pos_max() const noexcept {
  for (int i = 0; i < size(); ++i)
    if (std::abs(w_[i]) == size()) return i + 1;
  return 0;
}

bool SignedPerm::is_unsigned() const noexcept {
  return std::all_of(w_.begin(), w_.end(), [](int x) { return x > 0; });
}

std::string SignedPerm::to_string() const {
  std::string out;
  for (size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w_[i]);
  }
  return out;
}

namespace stat {

int des_A(std::span<const int> w) noexcept {
  int d = 0;
  for (size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

int inv_A(std::span<const int> w) noexcept {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

int neg_pairs(std::span<const int> w) noexcept {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j) c += -w[i] > w[j];
  return c;
}

int negs(std::span<const int> w) noexcept {
  return static_cast<int>(std::count_if(w.begin(), w.end(), [](int x) { return x < 0; }));
}

int des_B(std::span<const int> w) noexcept { return des_A(w) + (!w.empty() && w[0] < 0); }

int inv_B(std::span<const int> w) noexcept { return inv_A(w) + neg_pairs(w) + negs(w); }

int des_D(std::span<const int> w) noexcept {
  return des_A(w) + (w.size() >= 2 && w[0] + w[1] < 0);
}

int inv_D(std::span<const int> w) noexcept { return inv_A(w) + neg_pairs(w); }

int lpk(std::span<const int> u) noexcept {
  int c = 0;
  for (size_t i = 0; i + 1 < u.size(); ++i) {
    const int prev = i == 0 ? 0 : u[i - 1];
    c += prev < u[i] && u[i] > u[i + 1];
  }
  return c;
}

int length(GroupKind kind, std::span<const int> w) noexcept {
  switch (kind) {
    case GroupKind::A: return inv_A(w);
    case GroupKind::B: return inv_B(w);
    case GroupKind::D: return inv_D(w);
  }
  return 0;
}

int descents(GroupKind kind, std::span<const int> w) noexcept {
  switch (kind) {
    case GroupKind::A: return des_A(w);
    case GroupKind::B: return des_B(w);
    case GroupKind::D: return des_D(w);
  }
  return 0;
}

int ides(GroupKind kind, std::span<const int> w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    const int a = std::abs(w[i]);
    inv[a - 1] = w[i] > 0 ? i + 1 : -(i + 1);
  }
  return descents(kind, inv);
}

}  // namespace stat

StatBundle stats_A(const SignedPerm& p) {
  if (!p.is_unsigned()) throw Error(Errc::NotTypeA, "window " + p.to_string() + " has a negative entry");
  const int n = p.size();
  const int d = stat::des_A(p.window());
  return StatBundle{d, n - 1 - d, stat::inv_A(p.window()), std::nullopt, stat::lpk(p.window())};
}

StatBundle stats_B(const SignedPerm& p) {
  const int d = stat::des_B(p.window());
  return StatBundle{d, p.size() - d, stat::inv_B(p.window()), p.negs(), std::nullopt};
}

StatBundle stats_D(const SignedPerm& p) {
  if (p.size() < 2) throw Error(Errc::TooSmallForD, "type D needs n >= 2");
  const int d = stat::des_D(p.window());
  std::vector<int> abs_w(p.window().begin(), p.window().end());
  for (int& x : abs_w) x = std::abs(x);
  return StatBundle{d, p.size() - d, stat::inv_D(p.window()), p.negs(), stat::lpk(abs_w)};
}

void check_group(GroupKind kind, int n) {
  if (n < 1 || n > 20) throw Error(Errc::InvalidArgument, "group rank must lie in [1, 20]");
  if (kind == GroupKind::D && n < 2) throw Error(Errc::TooSmallForD, "type D needs n >= 2");
}

std::uint64_t group_order(GroupKind kind, int n) {
  check_group(kind, n);
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  switch (kind) {
    case GroupKind::A: return f;
    case GroupKind::B: return f << n;
    case GroupKind::D: return f << (n - 1);
  }
  return 0;
}

std::vector<SignedPerm> iterate_group(GroupKind kind, Parity parity, int n) {
  std::vector<SignedPerm> out;
  for_each_element(kind, parity, n, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

SignedPerm group_inverse(const SignedPerm& p) {
  const int n = p.size();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    const int w = p.window()[i];
    inv[std::abs(w) - 1] = w > 0 ? i + 1 : -(i + 1);
  }
  return SignedPerm(std::move(inv));
}

SignedPerm rotate_about_max(const SignedPerm& p) {
  if (!p.is_unsigned()) throw Error(Errc::NotTypeA, "rotation acts on plain permutations");
  const int n = p.size();
  const int pos = p.pos_max();
  if (pos == 1 || pos == n) {
    throw Error(Errc::NotApplicable, "letter " + std::to_string(n) + " sits in a terminal position");
  }
  const int prefix = pos - 1;
  if (n % 2 == 1 && prefix % 2 == 0) {
    throw Error(Errc::NotApplicable, "odd n needs the largest letter after an odd-length prefix");
  }
  auto w = p.window();
  std::vector<int> out;
  out.reserve(n);
  out.insert(out.end(), w.begin() + pos, w.end());
  out.push_back(n);
  out.insert(out.end(), w.begin(), w.begin() + prefix);
  return SignedPerm(std::move(out));
}

SignedPerm flip_last_sign(const SignedPerm& p) {
  std::vector<int> w(p.window().begin(), p.window().end());
  w.back() = -w.back();
  return SignedPerm(std::move(w));
}

SignedPerm flip_first_sign(const SignedPerm& p) {
  std::vector<int> w(p.window().begin(), p.window().end());
  w.front() = -w.front();
  return SignedPerm(std::move(w));
}

SignedPerm complement(const SignedPerm& p) {
  if (!p.is_unsigned()) throw Error(Errc::NotTypeA, "complement acts on plain permutations");
  std::vector<int> w(p.window().begin(), p.window().end());
  for (int& x : w) x = p.size() + 1 - x;
  return SignedPerm(std::move(w));
}

SignedPerm negate_all(const SignedPerm& p) {
  std::vector<int> w(p.window().begin(), p.window().end());
  for (int& x : w) x = -x;
  return SignedPerm(std::move(w));
}

std::vector<SignedPerm> signings(const SignedPerm& u) {
  if (!u.is_unsigned()) throw Error(Errc::NotTypeA, "signings start from a plain permutation");
  const int n = u.size();
  std::vector<SignedPerm> out;
  out.reserve(size_t{1} << n);
  std::vector<int> w(n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (int i = 0; i < n; ++i) w[i] = (mask >> (n - 1 - i)) & 1u ? -u.window()[i] : u.window()[i];
    out.emplace_back(w);
  }
  return out;
}

int invpair(std::span<const int> w, std::span<const int> K, std::span<const int> L) noexcept {
  int c = 0;
  for (int k : K)
    for (int l : L) {
      const int i = std::min(k, l);
      const int j = std::max(k, l);
      if (i != j && w[i - 1] > w[j - 1]) ++c;
    }
  return c;
}

}  // namespace eulerian
