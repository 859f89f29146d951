#include "pfaff/origin.hpp"

#include <stdexcept>
#include <string>

#include "pfaff/partitions.hpp"

namespace pfaff {

namespace {

void require_range(const char* op, int m, int idx, int hi) {
  if (m < 1 || idx < 0 || idx > hi) {
    throw std::invalid_argument(std::string(op) + ": index " + std::to_string(idx) + " out of range for m=" +
                                std::to_string(m));
  }
}

BiLaurentPoly binom4(int shift_by, int a, int b) {
  return shift(substitute_power(gaussian_binomial(a, b), 4), shift_by);
}

}  // namespace

BiLaurentPoly h0_pf_pole(int m, int k) {
  require_range("h0_pf_pole", m, k, m - 1);
  return binom4(m * (2 * m - 1) - k * (2 * k + 3) - 4 * (m - k - 1) * k, m - 1, m - k - 1);
}

BiLaurentPoly h0_Q(int m, int p) {
  require_range("h0_Q", m, p, m - 1);
  return binom4(p * (2 * p + 3), m - 1, p);
}

BiLaurentPoly h0_D_even(int m, int s) {
  require_range("h0_D_even", m, s, m);
  return binom4(s * (2 * s - 1), m, s);
}

BiLaurentPoly h0_D_odd(int m, int p) {
  require_range("h0_D_odd", m, p, m);
  return binom4(p * (2 * p + 1), m, p);
}

}  // namespace pfaff
