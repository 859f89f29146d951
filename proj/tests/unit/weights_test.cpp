#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "pfaff/weights.hpp"

using pfaff::DominantWeight;

namespace pfaff {
void PrintTo(const DominantWeight& w, std::ostream* os) { *os << w.to_string(); }
}  // namespace pfaff

namespace {

// Every dominant weight of length n with entries in [-bound, bound].
std::vector<DominantWeight> all_dominant(int n, int bound) {
  std::vector<DominantWeight> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = cap; v >= -bound; --v) {
      cur.push_back(v);
      rec(v);
      cur.pop_back();
    }
  };
  rec(bound);
  return out;
}

// Independent reading of the B(s, n) conditions.
bool in_B_oracle(const DominantWeight& l, int s) {
  const int n = l.length();
  auto L = [&](int i) { return l[i - 1]; };
  if (n % 2 == 0) {
    for (int i = 1; i < n; i += 2) {
      if (L(i) != L(i + 1)) return false;
    }
    if (s > 0 && L(2 * s) < 2 * s - 1) return false;
    if (2 * s < n && L(2 * s + 1) > 2 * s) return false;
    return true;
  }
  if (L(2 * s + 1) != 2 * s) return false;
  for (int i = 1; i < 2 * s; i += 2) {
    if (L(i) != L(i + 1)) return false;
  }
  for (int i = 2 * s + 2; i < n; i += 2) {
    if (L(i) != L(i + 1)) return false;
  }
  return true;
}

// Bott's algorithm by explicit simple reflections: repeatedly swap an
// adjacent ascent of gamma + rho, counting swaps.
pfaff::BottResult bott_by_reflections(std::vector<int> gamma) {
  const int n = static_cast<int>(gamma.size());
  for (int i = 0; i < n; ++i) gamma[i] += n - 1 - i;
  int steps = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (gamma[i] == gamma[i + 1]) return std::nullopt;
      if (gamma[i] < gamma[i + 1]) {
        std::swap(gamma[i], gamma[i + 1]);
        ++steps;
        moved = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) gamma[i] -= n - 1 - i;
  return pfaff::BottCohomology{steps, DominantWeight(gamma)};
}

}  // namespace

TEST(DominantWeight, Validation) {
  EXPECT_THROW(DominantWeight({0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(DominantWeight({3, 3, -2}));
}

TEST(Dual, Examples) {
  EXPECT_EQ(pfaff::dual(DominantWeight({2, 2, 2})), DominantWeight({-2, -2, -2}));
  EXPECT_EQ(pfaff::dual(DominantWeight({3, 1})), DominantWeight({-1, -3}));
  for (const auto& l : all_dominant(3, 3)) EXPECT_EQ(pfaff::dual(pfaff::dual(l)), l);
}

TEST(Bott, Examples) {
  const std::vector<int> zero(4, 0);
  EXPECT_EQ(pfaff::bott(zero), (pfaff::BottCohomology{0, DominantWeight({0, 0, 0, 0})}));
  EXPECT_FALSE(pfaff::bott(std::vector<int>{-1, -1, 0}).has_value());
  EXPECT_EQ(pfaff::bott(std::vector<int>{-3, -3, 0}), (pfaff::BottCohomology{2, DominantWeight({-2, -2, -2})}));
}

TEST(Bott, AgreesWithReflectionWalk) {
  std::vector<int> g(4);
  for (g[0] = -4; g[0] <= 4; ++g[0])
    for (g[1] = -4; g[1] <= 4; ++g[1])
      for (g[2] = -4; g[2] <= 4; ++g[2])
        for (g[3] = -4; g[3] <= 4; ++g[3]) ASSERT_EQ(pfaff::bott(g), bott_by_reflections(g));
}

TEST(EnumerateB, Examples) {
  EXPECT_EQ(pfaff::enumerate_B(1, 2, 3),
            (std::vector<DominantWeight>{DominantWeight({1, 1}), DominantWeight({2, 2}), DominantWeight({3, 3})}));
  for (const auto& l : pfaff::enumerate_B(0, 4, 3)) {
    EXPECT_LE(l[0], 0);
    EXPECT_TRUE(pfaff::is_paired(l.entries()));
  }
  const auto b13 = pfaff::enumerate_B(1, 3, 3);
  EXPECT_NE(std::find(b13.begin(), b13.end(), DominantWeight({2, 2, 2})), b13.end());
  EXPECT_THROW(pfaff::enumerate_B(3, 4, 3), std::invalid_argument);
}

TEST(EnumerateB, MatchesBruteForceFilter) {
  for (int n = 1; n <= 6; ++n) {
    const int bound = n <= 4 ? 5 : 3;
    const auto everything = all_dominant(n, bound);
    for (int s = 0; s <= n / 2; ++s) {
      std::vector<DominantWeight> expected;
      for (const auto& l : everything) {
        if (in_B_oracle(l, s)) expected.push_back(l);
        ASSERT_EQ(pfaff::in_B(l, s), in_B_oracle(l, s)) << l.to_string() << " s=" << s;
      }
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(pfaff::enumerate_B(s, n, bound), expected) << "n=" << n << " s=" << s;
    }
  }
}

TEST(EnumerateB, EvenSetsPartitionPairedWeights) {
  for (int m = 1; m <= 3; ++m) {
    for (const auto& l : pfaff::enumerate_paired(m, 5)) {
      int hits = 0;
      for (int s = 0; s <= m; ++s) hits += pfaff::in_B(l, s) ? 1 : 0;
      ASSERT_EQ(hits, 1) << l.to_string();
    }
  }
}

TEST(Pushforward, SmallCases) {
  const auto r10 = pfaff::verify_pushforward(1, 0, 6);
  EXPECT_TRUE(r10.pass) << r10.failure;
  // (t,t) with t in 1..6 lies in B(1,2); t = 1, 2 die and t >= 3 survive.
  EXPECT_EQ(r10.checked, 6);
  EXPECT_EQ(r10.zero, 2);
  EXPECT_EQ(r10.nonzero, 4);
  for (int t = 3; t <= 6; ++t) {
    const auto r = pfaff::bott(std::vector<int>{-t, -t, 0});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->degree, 2);
    EXPECT_EQ(pfaff::dual(r->weight), DominantWeight({t - 1, t - 1, 2}));
  }

  const auto r11 = pfaff::verify_pushforward(1, 1, 6);
  EXPECT_TRUE(r11.pass) << r11.failure;
  EXPECT_EQ(r11.zero, 0);
  EXPECT_EQ(pfaff::bott(std::vector<int>{0, 0, 0})->degree, 0);
}

TEST(Pushforward, AllCasesUpToFour) {
  for (int m = 1; m <= 4; ++m) {
    for (int p = 0; p <= m; ++p) {
      const auto r = pfaff::verify_pushforward(m, p, 2 * m + 6);
      EXPECT_TRUE(r.pass) << "m=" << m << " p=" << p << ": " << r.failure;
      EXPECT_GT(r.nonzero, 0);
    }
  }
  EXPECT_THROW(pfaff::verify_pushforward(2, 3, 10), std::invalid_argument);
  EXPECT_THROW(pfaff::verify_pushforward(2, 1, 3), std::invalid_argument);
}
