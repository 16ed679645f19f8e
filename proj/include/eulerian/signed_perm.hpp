#pragma once

// Signed permutations in window notation, the descent/inversion statistics
// of types A, B and D, group iteration and the bijections used by the
// parity-splitting arguments.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulerian/error.hpp"

namespace eulerian {

enum class GroupKind { A, B, D };
enum class Parity { All, Even, Odd };
enum class Sign { Plus, Minus };

std::string_view to_string(GroupKind kind) noexcept;
std::string_view to_string(Parity parity) noexcept;

/// Window (w_1, ..., w_n) of a signed permutation. Plain permutations are the
/// all-positive windows.
class SignedPerm {
 public:
  /// Throws InvalidArgument unless {|w_i|} = {1..n}.
  explicit SignedPerm(std::vector<int> window);
  static SignedPerm identity(int n);
  /// Comma-separated window, e.g. "-2,1,3".
  static SignedPerm parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  std::span<const int> window() const noexcept { return w_; }
  /// 1-based entry w_i.
  int at(int i) const { return w_.at(i - 1); }
  int negs() const noexcept;
  /// 1-based position of the entry with absolute value n.
  int pos_max() const noexcept;
  bool is_unsigned() const noexcept;
  std::string to_string() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend auto operator<=>(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<int> w_;
};

struct StatBundle {
  int des = 0;
  int asc = 0;
  int inv = 0;
  std::optional<int> negs;
  std::optional<int> lpk;

  friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

// Raw statistics on a window. They do not validate; SignedPerm does.
namespace stat {
int des_A(std::span<const int> w) noexcept;
int inv_A(std::span<const int> w) noexcept;
/// #{i < j : -w_i > w_j}
int neg_pairs(std::span<const int> w) noexcept;
int negs(std::span<const int> w) noexcept;
/// des with w_0 = 0 prepended.
int des_B(std::span<const int> w) noexcept;
int inv_B(std::span<const int> w) noexcept;
/// des plus [w_1 + w_2 < 0]; needs n >= 2.
int des_D(std::span<const int> w) noexcept;
int inv_D(std::span<const int> w) noexcept;
/// Left peaks with u_0 = 0: i in [1, n-1] with u_{i-1} < u_i > u_{i+1}.
int lpk(std::span<const int> u) noexcept;
/// des of the group inverse, in the statistic of the given type.
int ides(GroupKind kind, std::span<const int> w);
/// Parity-defining length for the type: inv_A, inv_B or inv_D.
int length(GroupKind kind, std::span<const int> w) noexcept;
/// Descent statistic for the type; des_A, des_B or des_D.
int descents(GroupKind kind, std::span<const int> w) noexcept;
}  // namespace stat

StatBundle stats_A(const SignedPerm& p);
StatBundle stats_B(const SignedPerm& p);
/// lpk is taken on the absolute values of the window.
StatBundle stats_D(const SignedPerm& p);

/// Throws InvalidArgument for n < 1, or TooSmallForD for type D with n < 2.
void check_group(GroupKind kind, int n);

/// Number of elements in the group (all parities).
std::uint64_t group_order(GroupKind kind, int n);

/// Visit every element of the requested subset. Order: permutations of
/// |w| lexicographically; for each, sign masks in increasing order with bit
/// (n-1-i) negating position i. Type D visits even sign masks only.
/// fn receives a span valid only for the duration of the call.
template <class Fn>
void for_each_element(GroupKind kind, Parity parity, int n, Fn&& fn);

/// Same enumeration restricted to windows with |w_1| = first. The partitions
/// over first = 1..n are disjoint and cover the group.
template <class Fn>
void for_each_in_partition(GroupKind kind, Parity parity, int n, int first, Fn&& fn);

std::vector<SignedPerm> iterate_group(GroupKind kind, Parity parity, int n);

/// Inverse in B_n: v(|w_i|) = sign(w_i) * i.
SignedPerm group_inverse(const SignedPerm& p);
/// (A, n, B) -> (B, n, A) on a plain permutation. Needs n strictly inside,
/// and for odd n an odd-length prefix A; else NotApplicable.
SignedPerm rotate_about_max(const SignedPerm& p);
SignedPerm flip_last_sign(const SignedPerm& p);
SignedPerm flip_first_sign(const SignedPerm& p);
/// x -> n+1-x; plain permutations only (NotTypeA otherwise).
SignedPerm complement(const SignedPerm& p);
SignedPerm negate_all(const SignedPerm& p);
/// All 2^n sign assignments of a plain permutation, in sign-mask order.
std::vector<SignedPerm> signings(const SignedPerm& u);

/// Inversions between two index sets K and L (1-based positions):
/// #{(k, l) in K x L : positions ordered and values out of order}.
int invpair(std::span<const int> w, std::span<const int> K, std::span<const int> L) noexcept;

// -- template definitions -----------------------------------------------------

namespace detail {

inline bool parity_ok(Parity parity, int length) noexcept {
  switch (parity) {
    case Parity::All: return true;
    case Parity::Even: return length % 2 == 0;
    case Parity::Odd: return length % 2 != 0;
  }
  return false;
}

template <class Fn>
void visit_signs(GroupKind kind, Parity parity, std::span<const int> perm, std::vector<int>& scratch,
                 Fn& fn) {
  const int n = static_cast<int>(perm.size());
  if (kind == GroupKind::A) {
    if (parity_ok(parity, stat::inv_A(perm))) fn(perm);
    return;
  }
  const std::uint32_t masks = 1u << n;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    if (kind == GroupKind::D && __builtin_popcount(mask) % 2 != 0) continue;
    for (int i = 0; i < n; ++i) scratch[i] = (mask >> (n - 1 - i)) & 1u ? -perm[i] : perm[i];
    const std::span<const int> w(scratch.data(), n);
    if (parity_ok(parity, stat::length(kind, w))) fn(w);
  }
}

}  // namespace detail

template <class Fn>
void for_each_in_partition(GroupKind kind, Parity parity, int n, int first, Fn&& fn) {
  check_group(kind, n);
  if (first < 1 || first > n) throw Error(Errc::InvalidArgument, "partition index out of range");
  std::vector<int> perm(n);
  perm[0] = first;
  for (int v = 1, k = 1; v <= n; ++v)
    if (v != first) perm[k++] = v;
  std::vector<int> scratch(n);
  do {
    detail::visit_signs(kind, parity, perm, scratch, fn);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

template <class Fn>
void for_each_element(GroupKind kind, Parity parity, int n, Fn&& fn) {
  check_group(kind, n);
  for (int first = 1; first <= n; ++first) for_each_in_partition(kind, parity, n, first, fn);
}

}  // namespace eulerian
