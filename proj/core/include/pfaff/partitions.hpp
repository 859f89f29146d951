#ifndef PFAFF_PARTITIONS_HPP
#define PFAFF_PARTITIONS_HPP

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pfaff/poly.hpp"

namespace pfaff {

/// A weakly decreasing sequence of nonnegative integers with an explicit
/// ambient length.
///
/// Trailing zeros count towards length() but not towards the identity of the
/// partition: (2,1,0) == (2,1). Callers that need a fixed ambient length
/// (membership in P(m)) check length() explicitly.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument if parts are negative or increasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Pads with zeros (or trims trailing zeros) to the given ambient length.
  /// Throws if a nonzero part would be dropped.
  Partition with_length(int length) const;

  /// (b^a) padded to `length` parts, i.e. the rectangle a x b.
  static Partition rectangle(int a, int b, int length);
  static Partition zero(int length) { return Partition(std::vector<int>(length, 0)); }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Sum of parts.
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// The i-th part, 0-based; zero beyond the ambient length.
  int operator[](int i) const noexcept;
  std::span<const int> parts() const noexcept { return parts_; }

  /// Parts with trailing zeros removed.
  std::vector<int> profile() const;

  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.profile() == b.profile(); }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.profile() <=> b.profile();
  }

 private:
  std::vector<int> parts_;
};

/// Calls `visit` on every partition with at most c parts, each at most d,
/// exactly once. Partitions are reported with ambient length c, in
/// lexicographically descending order starting from the full rectangle.
void for_each_in_box(int c, int d, const std::function<void(const Partition&)>& visit);

/// Materialized form of for_each_in_box. Its size is the binomial C(c+d, d).
std::vector<Partition> enumerate_box(int c, int d);

/// Componentwise a_i >= b_i. Throws std::invalid_argument on length mismatch.
bool dominates(const Partition& a, const Partition& b);

/// (z1, z1, z2, z2, ...): doubles the column lengths of the Young diagram.
Partition double_columns(const Partition& z);

/// Transpose of the Young diagram. The result has ambient length z[0].
Partition conjugate(const Partition& z);

/// Gaussian binomial [a choose b]_q. Requires a >= b >= 0.
///
/// Computed with integer-only Pascal recurrences and a per-thread memo; the
/// result has degree b(a-b) and nonnegative coefficients.
BiLaurentPoly gaussian_binomial(int a, int b);

/// Independent route: the sum of q^|x| over partitions x with at most a-b
/// parts, each at most b.
BiLaurentPoly gaussian_binomial_oracle(int a, int b);

/// Ordinary binomial coefficient, exact or throws std::overflow_error.
std::int64_t binomial(int a, int b);

}  // namespace pfaff

#endif  // PFAFF_PARTITIONS_HPP
