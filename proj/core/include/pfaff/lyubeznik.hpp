#ifndef PFAFF_LYUBEZNIK_HPP
#define PFAFF_LYUBEZNIK_HPP

#include "pfaff/poly.hpp"

namespace pfaff {

/// Validity of (n, k): n >= 2 and 0 <= k <= floor(n/2) - 1.
bool valid_rank(int n, int k) noexcept;

/// dim of the Pfaffian variety of rank <= 2k matrices: k(2n-2k-1).
int pfaffian_dim(int n, int k);

/// C(n,2), the dimension of the ambient space.
int ambient_dim(int n);

/// Generating function L_k(q,w) = sum lambda_{i,j} q^i w^j of the Lyubeznik
/// numbers of the Pfaffian ring R^k, from its closed form. q tracks the outer
/// index i (cohomology at the origin) and w tracks j = C(n,2) - (inner index).
/// Throws std::invalid_argument unless valid_rank(n, k).
BiLaurentPoly L_closed(int n, int k);

/// The same generating function, composed from the Grothendieck-group class
/// of H^*_{O_k}(S) (reindexed by j = C(n,2) - inner degree) and the
/// origin-supported cohomology of each indecomposable or simple summand.
BiLaurentPoly L_composed(int n, int k);

}  // namespace pfaff

#endif  // PFAFF_LYUBEZNIK_HPP
