#include "pfaff/ext_mult.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace pfaff {

ZPair::ZPair(Partition x_, int p_) : x(std::move(x_)), p(p_) {
  if (p < 0 || p >= x.length()) throw std::invalid_argument("ZPair index p out of range");
  for (int i = 1; i <= p; ++i) {
    if (x[i] != x[0]) throw std::invalid_argument("ZPair requires x_1 = ... = x_{p+1}");
  }
}

namespace {

void require_ext_args(int m, int a, int b) {
  if (m < 1 || a < 1 || a > m) throw std::invalid_argument("ext series requires 1 <= a <= m");
  if (b < 2 * a - 1) throw std::invalid_argument("ext series requires b >= 2a-1");
}

int choose2(int n) { return n * (n - 1) / 2; }

// Partitions of length m with x_1 = ... = x_a = c for some c <= e, the
// remaining m - a parts bounded by c.
template <class Visit>
void for_each_flat_top(int m, int a, int e, Visit&& visit) {
  for (int c = 0; c <= e; ++c) {
    for_each_in_box(m - a, c, [&](const Partition& tail) {
      std::vector<int> parts(a, c);
      parts.insert(parts.end(), tail.parts().begin(), tail.parts().end());
      visit(Partition(std::move(parts)));
    });
  }
}

}  // namespace

BiLaurentPoly ext_series_enum(int m, int a, int b) {
  require_ext_args(m, a, b);
  const int top = choose2(2 * m) - choose2(2 * a - 2) - 4 * (a - 1);
  BiLaurentPoly sum;
  for_each_in_box(m - a, a - 1, [&](const Partition& beta) { sum.add_term(1, top - 4 * beta.size()); });
  return sum;
}

BiLaurentPoly ext_series_closed(int m, int a, int b) {
  require_ext_args(m, a, b);
  const int lead = a * (2 * a - 3) - m * (4 * a - 2 * m - 3) + 1;
  return shift(substitute_power(gaussian_binomial(m - 1, a - 1), 4), lead);
}

ZSet zset_rectangle(int m, int a, int e) {
  if (m < 1 || a < 1 || a > m || e < 0) throw std::invalid_argument("zset_rectangle: invalid arguments");
  ZSet out;
  for_each_flat_top(m, a, e, [&](Partition x) { out.emplace(std::move(x), a - 1); });
  return out;
}

ZSet zset_thickened(int m, int a, int e) {
  if (m < 1 || a < 1 || a > m || e < 0) throw std::invalid_argument("zset_thickened: invalid arguments");
  ZSet out;
  out.emplace(Partition::zero(m), m - 1);
  for_each_flat_top(m, a, e, [&](Partition x) {
    if (x[m - 1] >= 1) out.emplace(std::move(x), a - 1);
  });
  return out;
}

}  // namespace pfaff
