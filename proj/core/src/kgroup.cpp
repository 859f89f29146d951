#include "pfaff/kgroup.hpp"

#include <stdexcept>
#include <string>

#include "pfaff/partitions.hpp"

namespace pfaff {

namespace {

std::string range_msg(const char* op, int m, int k) {
  return std::string(op) + ": (m,k)=(" + std::to_string(m) + "," + std::to_string(k) + ") out of range";
}

// q^shift * [a choose b]_{q^4}
BiLaurentPoly binom4(int shift_by, int a, int b) {
  return shift(substitute_power(gaussian_binomial(a, b), 4), shift_by);
}

}  // namespace

KClass::KClass(Basis basis, int n, std::vector<BiLaurentPoly> coeffs)
    : basis_(basis), n_(n), coeffs_(std::move(coeffs)) {
  if (n_ < 2) throw std::invalid_argument("KClass requires n >= 2");
  if (basis_ == Basis::Q && n_ % 2 != 0) throw std::invalid_argument("Q basis requires n even");
  if (static_cast<int>(coeffs_.size()) != n_ / 2 + 1) {
    throw std::invalid_argument("KClass needs exactly m+1 coefficients");
  }
  for (const auto& c : coeffs_) {
    if (c.involves_w()) throw std::invalid_argument("KClass coefficients must be q-only");
  }
}

KClass KClass::zero(Basis basis, int n) {
  return KClass(basis, n, std::vector<BiLaurentPoly>(n / 2 + 1));
}

KClass& KClass::operator+=(const KClass& other) {
  if (basis_ != other.basis_ || n_ != other.n_) {
    throw std::invalid_argument("cannot add classes with different basis or n");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

KClass q_to_d(const KClass& c) {
  if (c.basis() != Basis::Q) throw std::invalid_argument("q_to_d expects a Q-basis class");
  std::vector<BiLaurentPoly> out(c.coeffs().size());
  BiLaurentPoly running;
  for (int s = static_cast<int>(out.size()) - 1; s >= 0; --s) {
    running += c[s];
    out[s] = running;
  }
  return KClass(Basis::D, c.n(), std::move(out));
}

KClass d_to_q(const KClass& c) {
  if (c.basis() != Basis::D) throw std::invalid_argument("d_to_q expects a D-basis class");
  if (!c.even()) throw std::invalid_argument("d_to_q requires n even");
  const int top = c.m();
  std::vector<BiLaurentPoly> out(top + 1);
  for (int p = 0; p <= top; ++p) out[p] = p < top ? c[p] - c[p + 1] : c[p];
  return KClass(Basis::Q, c.n(), std::move(out));
}

KClass reverse_class(const KClass& c, int d) {
  std::vector<BiLaurentPoly> out;
  out.reserve(c.coeffs().size());
  for (const auto& p : c.coeffs()) out.push_back(reverse(p, d));
  return KClass(c.basis(), c.n(), std::move(out));
}

KClass localcoh_class_even_Q(int m, int k) {
  if (m < 1 || k < 0 || k > m - 1) throw std::invalid_argument(range_msg("localcoh_class_even_Q", m, k));
  std::vector<BiLaurentPoly> coeffs(m + 1);
  if (k == m - 1) {
    // The hypersurface case: H^1 = Q_{m-1}, nothing else.
    coeffs[m - 1] = BiLaurentPoly::q_power(1);
  } else {
    const int c = m - k;
    for (int p = 0; p <= k; ++p) coeffs[p] = binom4(2 * c * c - c + 4 * (k - p), m - p - 2, k - p);
  }
  return KClass(Basis::Q, 2 * m, std::move(coeffs));
}

KClass localcoh_class_even_D(int m, int k) {
  if (m < 2 || k < 0 || k > m - 2) throw std::invalid_argument(range_msg("localcoh_class_even_D", m, k));
  const int c = m - k;
  std::vector<BiLaurentPoly> coeffs(m + 1);
  for (int s = 0; s <= k; ++s) coeffs[s] = binom4(2 * c * c - c, m - s - 1, k - s);
  return KClass(Basis::D, 2 * m, std::move(coeffs));
}

KClass localcoh_class_even_Q_reversed(int m, int k) {
  if (m < 2 || k < 0 || k > m - 2) {
    throw std::invalid_argument(range_msg("localcoh_class_even_Q_reversed", m, k));
  }
  std::vector<BiLaurentPoly> coeffs(m + 1);
  for (int p = 0; p <= k; ++p) coeffs[p] = binom4(k * (2 * k + 3) - 4 * p * (k - m + 1), m - p - 2, k - p);
  return KClass(Basis::Q, 2 * m, std::move(coeffs));
}

KClass localcoh_class_odd_D_reversed(int m, int k) {
  if (m < 1 || k < 0 || k > m - 1) {
    throw std::invalid_argument(range_msg("localcoh_class_odd_D_reversed", m, k));
  }
  std::vector<BiLaurentPoly> coeffs(m + 1);
  for (int p = 0; p <= k; ++p) coeffs[p] = binom4(k * (2 * k + 3) - 2 * p * (2 * k - 2 * m + 1), m - p - 1, k - p);
  return KClass(Basis::D, 2 * m + 1, std::move(coeffs));
}

}  // namespace pfaff
