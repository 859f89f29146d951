#ifndef PFAFF_KGROUP_HPP
#define PFAFF_KGROUP_HPP

#include <vector>

#include "pfaff/poly.hpp"

namespace pfaff {

/// Basis of the Grothendieck group of GL-equivariant D-modules on n x n
/// skew-symmetric matrices: the indecomposables Q_0..Q_m (n even only) or the
/// simples D_0..D_m.
enum class Basis { Q, D };

/// A class sum_p [B_p] * c_p(q) with q-only polynomial coefficients.
class KClass {
 public:
  /// Throws std::invalid_argument unless coeffs.size() == n/2 + 1, every
  /// coefficient is q-only, and the Q basis is used only for even n.
  KClass(Basis basis, int n, std::vector<BiLaurentPoly> coeffs);

  /// The zero class.
  static KClass zero(Basis basis, int n);

  Basis basis() const noexcept { return basis_; }
  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ / 2; }
  bool even() const noexcept { return n_ % 2 == 0; }
  const std::vector<BiLaurentPoly>& coeffs() const noexcept { return coeffs_; }
  const BiLaurentPoly& operator[](int index) const { return coeffs_.at(index); }

  /// Throws std::invalid_argument if the basis or n differ.
  KClass& operator+=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }

  friend bool operator==(const KClass&, const KClass&) = default;

 private:
  Basis basis_;
  int n_;
  std::vector<BiLaurentPoly> coeffs_;
};

/// Rewrites a Q-basis class in the D basis using [Q_p] = [D_0] + ... + [D_p].
KClass q_to_d(const KClass& c);
/// Inverse of q_to_d: [D_s] = [Q_s] - [Q_{s-1}].
KClass d_to_q(const KClass& c);

/// Applies reverse(., d) to every coefficient.
KClass reverse_class(const KClass& c, int d);

/// sum_j [H^j_{O_k}(S)] q^j in the Q basis for n = 2m, 0 <= k <= m-1.
KClass localcoh_class_even_Q(int m, int k);

/// The same class in the D basis, for n = 2m and 0 <= k <= m-2.
KClass localcoh_class_even_D(int m, int k);

/// sum_j [H^{d-j}_{O_k}(S)] q^j, d = C(2m,2), in the Q basis, from its closed
/// form; n = 2m, 0 <= k <= m-2.
KClass localcoh_class_even_Q_reversed(int m, int k);

/// sum_j [H^{d-j}_{O_k}(S)] q^j, d = C(2m+1,2), in the D basis;
/// n = 2m+1, 0 <= k <= m-1.
KClass localcoh_class_odd_D_reversed(int m, int k);

}  // namespace pfaff

#endif  // PFAFF_KGROUP_HPP
