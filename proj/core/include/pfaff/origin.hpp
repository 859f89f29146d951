#ifndef PFAFF_ORIGIN_HPP
#define PFAFF_ORIGIN_HPP

#include "pfaff/poly.hpp"

// Local cohomology supported at the origin. Every such module is a direct
// sum of copies of E, so each result is the q-polynomial whose coefficient of
// q^j counts the copies of E in H^j_{0}(-).

namespace pfaff {

/// H^*_{0}(<Pf^{-2k}>) for n = 2m, 0 <= k <= m-1.
BiLaurentPoly h0_pf_pole(int m, int k);

/// H^*_{0}(Q_p) for n = 2m, 0 <= p <= m-1.
BiLaurentPoly h0_Q(int m, int p);

/// H^*_{0}(D_s) for n = 2m, 0 <= s <= m.
BiLaurentPoly h0_D_even(int m, int s);

/// H^*_{0}(D_p) for n = 2m+1, 0 <= p <= m.
BiLaurentPoly h0_D_odd(int m, int p);

}  // namespace pfaff

#endif  // PFAFF_ORIGIN_HPP
