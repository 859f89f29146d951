#ifndef PFAFF_WEIGHTS_HPP
#define PFAFF_WEIGHTS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pfaff/partitions.hpp"

namespace pfaff {

/// A dominant integral weight of GL_n: a weakly decreasing integer sequence
/// of ambient length n.
class DominantWeight {
 public:
  DominantWeight() = default;
  /// Throws std::invalid_argument if entries increase anywhere.
  explicit DominantWeight(std::vector<int> entries);
  DominantWeight(std::initializer_list<int> entries) : DominantWeight(std::vector<int>(entries)) {}
  explicit DominantWeight(const Partition& p) : DominantWeight(std::vector<int>(p.parts().begin(), p.parts().end())) {}

  static bool is_dominant(std::span<const int> entries) noexcept;

  int length() const noexcept { return static_cast<int>(entries_.size()); }
  /// 0-based entry access.
  int operator[](int i) const { return entries_.at(i); }
  std::span<const int> entries() const noexcept { return entries_; }
  int size() const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const DominantWeight&, const DominantWeight&) = default;

 private:
  std::vector<int> entries_;
};

bool dominates(const DominantWeight& a, const DominantWeight& b);

/// lambda* = (-lambda_n, ..., -lambda_1); S_lambda V = S_{lambda*} V^*.
DominantWeight dual(const DominantWeight& lambda);

/// True when entries come in equal adjacent pairs (e_1 = e_2, e_3 = e_4, ...).
/// An odd trailing entry is ignored.
bool is_paired(std::span<const int> entries) noexcept;

/// Nonzero outcome of Bott's algorithm on a Grassmannian.
struct BottCohomology {
  int degree = 0;
  DominantWeight weight;

  friend bool operator==(const BottCohomology&, const BottCohomology&) = default;
};

/// std::nullopt is the Zero outcome (gamma + rho has a repeated entry).
using BottResult = std::optional<BottCohomology>;

/// Bott's algorithm with rho = (n-1, ..., 1, 0): if gamma + rho has a
/// repeated entry the result is Zero; otherwise the degree is the number of
/// inversions of gamma + rho and the weight is sort_desc(gamma + rho) - rho.
BottResult bott(std::span<const int> gamma);

/// Every dominant weight of length 2m with equal adjacent pairs and all
/// |entries| <= bound, sorted ascending.
std::vector<DominantWeight> enumerate_paired(int m, int bound);

/// Membership in the character set B(s, n) that indexes the simple D_{m-s}.
bool in_B(const DominantWeight& lambda, int s);

/// Every weight of B(s, n) with all |entries| <= bound, sorted ascending.
/// Throws std::invalid_argument unless 0 <= s <= n/2 and bound > 0.
std::vector<DominantWeight> enumerate_B(int s, int n, int bound);

struct PushforwardReport {
  int m = 0;
  int p = 0;
  int bound = 0;
  std::int64_t checked = 0;
  std::int64_t zero = 0;
  std::int64_t nonzero = 0;
  bool pass = false;
  std::string failure;  // empty on success
};

/// Runs bott((lambda*, 0)) in length 2m+1 over the bounded window of
/// B(m-p, 2m) and checks the odd-case pushforward: every nonzero outcome sits
/// in degree 2m-2p, dual(weight) lies in B(m-p, 2m+1), the map is injective,
/// and it covers every weight of B(m-p, 2m+1) with entries bounded by
/// bound - 1 (the window whose preimages stay inside the source window).
///
/// Requires 0 <= p <= m and bound >= 2m.
PushforwardReport verify_pushforward(int m, int p, int bound);

}  // namespace pfaff

#endif  // PFAFF_WEIGHTS_HPP
