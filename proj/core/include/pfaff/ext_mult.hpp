#ifndef PFAFF_EXT_MULT_HPP
#define PFAFF_EXT_MULT_HPP

#include <compare>
#include <set>

#include "pfaff/partitions.hpp"
#include "pfaff/poly.hpp"

namespace pfaff {

/// Index (x, p) of a subquotient J_{x,p} in the filtration of S/I_z.
/// Invariant: x has length m and x_1 = ... = x_{p+1}.
struct ZPair {
  Partition x;
  int p;

  /// Throws std::invalid_argument if the leading p+1 parts are not equal.
  ZPair(Partition x_, int p_);

  friend bool operator==(const ZPair&, const ZPair&) = default;
  friend std::strong_ordering operator<=>(const ZPair& a, const ZPair& b) {
    if (auto c = a.p <=> b.p; c != 0) return c;
    return a.x <=> b.x;
  }
};

using ZSet = std::set<ZPair>;

/// Multiplicity series of det(W^*)^{n+b-2a} in Ext^*(S/I_{a x b}, S), n = 2m,
/// summed directly over beta in the (m-a) x (a-1) box:
///   q^{C(2m,2) - C(2a-2,2) - 4(a-1) - 4|beta|}.
/// Requires 1 <= a <= m and b >= 2a-1.
BiLaurentPoly ext_series_enum(int m, int a, int b);

/// The same series in closed form:
///   q^{a(2a-3) - m(4a-2m-3) + 1} * [m-1 choose a-1]_{q^4}.
BiLaurentPoly ext_series_closed(int m, int a, int b);

/// Z(a x (e+1)): pairs with p = a-1 and x_1 = ... = x_a <= e.
/// Requires 1 <= a <= m, e >= 0.
ZSet zset_rectangle(int m, int a, int e);

/// Z(((e+1)^a, 1^{m-a})): the sentinel (0, m-1) together with the pairs
/// p = a-1, x_1 = ... = x_a <= e, x >= (1^m).
ZSet zset_thickened(int m, int a, int e);

}  // namespace pfaff

#endif  // PFAFF_EXT_MULT_HPP
