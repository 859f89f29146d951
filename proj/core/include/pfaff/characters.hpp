#ifndef PFAFF_CHARACTERS_HPP
#define PFAFF_CHARACTERS_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "pfaff/partitions.hpp"
#include "pfaff/weights.hpp"

namespace pfaff {

// Character sets of multiplicity-free GL(W)-modules on the space of n x n
// skew-symmetric matrices, m = floor(n/2). Every test weight mu is the
// highest weight of S_mu W; sets stated for W^* are compared through dual().

/// The invariant ideal I_z generated by S_{z^(2)} W, z in P(m).
struct IdealI {
  Partition z;
};

/// N_{k,e} = I_{(m-k) x e} (x) Pf^{-e-2k}; n even, 0 <= k <= m-1, e >= 1.
struct ModuleN {
  int k;
  int e;
};

/// The D-submodule of S_Pf generated by Pf^{-2k}; n even, 0 <= k <= m-1.
struct PfPole {
  int k;
};

/// The simple equivariant D-module D_s, 0 <= s <= m.
struct SimpleD {
  int s;
};

class CharSpec {
 public:
  using Kind = std::variant<IdealI, ModuleN, PfPole, SimpleD>;

  /// Throws std::invalid_argument when parameters fall outside their ranges
  /// or the object does not exist for the parity of n.
  CharSpec(int n, Kind kind);

  int n() const noexcept { return n_; }
  int m() const noexcept { return n_ / 2; }
  bool even() const noexcept { return n_ % 2 == 0; }
  const Kind& kind() const noexcept { return kind_; }

 private:
  int n_;
  Kind kind_;
};

/// Whether S_mu W occurs in the module described by `spec`. Unpaired or
/// otherwise malformed weights return false. Throws std::invalid_argument
/// when mu.length() != spec.n().
bool contains(const CharSpec& spec, const DominantWeight& mu);

struct LimitReport {
  int m = 0;
  int k = 0;
  int bound = 0;
  int e_max = 0;
  std::int64_t checked = 0;
  std::int64_t members = 0;
  bool pass = false;
  std::string failure;
};

/// Bounded check that <Pf^{-2k}> is the union of the N_{k,e}: for every
/// paired dominant mu of length 2m with |entries| <= bound, membership in
/// PfPole(k) matches membership in some ModuleN(k,e), 1 <= e <= 2*bound+4m.
/// Also checks N_{k,e} within N_{k,e+1} and N_{k,e} within N_{k+1,e}.
LimitReport verify_limitpfaff(int m, int k, int bound);

}  // namespace pfaff

#endif  // PFAFF_CHARACTERS_HPP
