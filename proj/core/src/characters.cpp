#include "pfaff/characters.hpp"

#include <stdexcept>
#include <vector>

namespace pfaff {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// The m-tuple x with S_mu W = S_{x^(2)} W, or nothing if mu is not of that
// shape. For odd n the last entry of mu must vanish.
std::optional<std::vector<int>> halve(const DominantWeight& mu) {
  const int n = mu.length();
  const int m = n / 2;
  if (!is_paired(mu.entries())) return std::nullopt;
  if (n % 2 == 1 && mu[n - 1] != 0) return std::nullopt;
  std::vector<int> x(m);
  for (int i = 0; i < m; ++i) x[i] = mu[2 * i];
  return x;
}

}  // namespace

CharSpec::CharSpec(int n, Kind kind) : n_(n), kind_(std::move(kind)) {
  require(n_ >= 2, "character context requires n >= 2");
  const int m = n_ / 2;
  const bool even = n_ % 2 == 0;
  std::visit(overloaded{
                 [&](const IdealI& c) {
                   require(c.z.length() == m, "IdealI partition must lie in P(m)");
                 },
                 [&](const ModuleN& c) {
                   require(even, "ModuleN requires n even");
                   require(c.k >= 0 && c.k <= m - 1, "ModuleN requires 0 <= k <= m-1");
                   require(c.e >= 1, "ModuleN requires e >= 1");
                 },
                 [&](const PfPole& c) {
                   require(even, "PfPole requires n even");
                   require(c.k >= 0 && c.k <= m - 1, "PfPole requires 0 <= k <= m-1");
                 },
                 [&](const SimpleD& c) { require(c.s >= 0 && c.s <= m, "SimpleD requires 0 <= s <= m"); },
             },
             kind_);
}

bool contains(const CharSpec& spec, const DominantWeight& mu) {
  if (mu.length() != spec.n()) throw std::invalid_argument("weight length does not match n");
  const int m = spec.m();

  return std::visit(
      overloaded{
          [&](const IdealI& c) {
            auto x = halve(mu);
            if (!x || (m > 0 && x->back() < 0)) return false;
            for (int i = 0; i < m; ++i) {
              if ((*x)[i] < c.z[i]) return false;
            }
            return true;
          },
          [&](const ModuleN& c) {
            auto nu = halve(mu);
            if (!nu) return false;
            for (int i = 0; i < m; ++i) {
              const int floor = i < m - c.k ? -2 * c.k : -c.e - 2 * c.k;
              if ((*nu)[i] < floor) return false;
            }
            return true;
          },
          [&](const PfPole& c) {
            const DominantWeight lambda = dual(mu);
            return is_paired(lambda.entries()) && lambda[2 * c.k] <= 2 * c.k;
          },
          [&](const SimpleD& c) { return in_B(dual(mu), m - c.s); },
      },
      spec.kind());
}

LimitReport verify_limitpfaff(int m, int k, int bound) {
  if (m < 1 || k < 0 || k > m - 1) throw std::invalid_argument("verify_limitpfaff requires 0 <= k <= m-1");
  if (bound <= 0) throw std::invalid_argument("bound must be positive");

  const int n = 2 * m;
  const int e_max = 2 * bound + 4 * m;
  LimitReport report{m, k, bound, e_max, 0, 0, true, {}};
  auto fail = [&](const std::string& why) {
    report.pass = false;
    report.failure = why;
    return report;
  };

  const CharSpec pole(n, PfPole{k});
  for (const DominantWeight& mu : enumerate_paired(m, bound)) {
    ++report.checked;
    const bool in_pole = contains(pole, mu);
    if (in_pole) ++report.members;

    bool in_some_n = false;
    for (int e = 1; e <= e_max; ++e) {
      const bool in_n = contains(CharSpec(n, ModuleN{k, e}), mu);
      in_some_n = in_some_n || in_n;
      if (!in_n) continue;
      if (e < e_max && !contains(CharSpec(n, ModuleN{k, e + 1}), mu)) {
        return fail("mu=" + mu.to_string() + " lies in N(" + std::to_string(k) + "," + std::to_string(e) +
                    ") but not N(k,e+1)");
      }
      if (k + 1 <= m - 1 && !contains(CharSpec(n, ModuleN{k + 1, e}), mu)) {
        return fail("mu=" + mu.to_string() + " lies in N(" + std::to_string(k) + "," + std::to_string(e) +
                    ") but not N(k+1,e)");
      }
    }
    if (in_pole != in_some_n) {
      return fail("mu=" + mu.to_string() + (in_pole ? " lies in <Pf^-2k> but in no N(k,e)"
                                                     : " lies in some N(k,e) but not in <Pf^-2k>"));
    }
  }
  return report;
}

}  // namespace pfaff
