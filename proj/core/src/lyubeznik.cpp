#include "pfaff/lyubeznik.hpp"

#include <stdexcept>
#include <string>

#include "pfaff/kgroup.hpp"
#include "pfaff/origin.hpp"
#include "pfaff/partitions.hpp"

namespace pfaff {

namespace {

void require_rank(int n, int k) {
  if (!valid_rank(n, k)) {
    throw std::invalid_argument("invalid (n,k)=(" + std::to_string(n) + "," + std::to_string(k) +
                                "): need n >= 2 and 0 <= k <= floor(n/2)-1");
  }
}

BiLaurentPoly binom4(int a, int b) { return substitute_power(gaussian_binomial(a, b), 4); }

}  // namespace

bool valid_rank(int n, int k) noexcept { return n >= 2 && k >= 0 && k <= n / 2 - 1; }

int pfaffian_dim(int n, int k) { return k * (2 * n - 2 * k - 1); }

int ambient_dim(int n) { return n * (n - 1) / 2; }

BiLaurentPoly L_closed(int n, int k) {
  require_rank(n, k);
  const int m = n / 2;
  const int d = ambient_dim(n);

  if (n % 2 == 0 && k == m - 1) return BiLaurentPoly::monomial(1, d - 1, d - 1);

  BiLaurentPoly sum;
  for (int s = 0; s <= k; ++s) {
    if (n % 2 == 0) {
      const BiLaurentPoly outer = shift(binom4(m - 1, s), s * (2 * s + 3));
      const BiLaurentPoly inner =
          shift(rename_q_to_w(binom4(m - s - 2, k - s)), 0, k * (2 * k + 3) - 4 * s * (k - m + 1));
      sum += outer * inner;
    } else {
      const BiLaurentPoly outer = shift(binom4(m, s), s * (2 * s + 1));
      const BiLaurentPoly inner =
          shift(rename_q_to_w(binom4(m - s - 1, k - s)), 0, k * (2 * k + 3) - 2 * s * (2 * k - 2 * m + 1));
      sum += outer * inner;
    }
  }
  return sum;
}

BiLaurentPoly L_composed(int n, int k) {
  require_rank(n, k);
  const int m = n / 2;
  const int d = ambient_dim(n);

  BiLaurentPoly sum;
  if (n % 2 == 0) {
    const KClass swapped = reverse_class(localcoh_class_even_Q(m, k), d);
    for (int p = 0; p <= m - 1; ++p) {
      if (swapped[p].is_zero()) continue;
      sum += rename_q_to_w(swapped[p]) * h0_Q(m, p);
    }
    if (!swapped[m].is_zero()) throw std::logic_error("local cohomology class has a Q_m summand");
  } else {
    const KClass swapped = localcoh_class_odd_D_reversed(m, k);
    for (int p = 0; p <= m; ++p) {
      if (swapped[p].is_zero()) continue;
      sum += rename_q_to_w(swapped[p]) * h0_D_odd(m, p);
    }
  }
  return sum;
}

}  // namespace pfaff
