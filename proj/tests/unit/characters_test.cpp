#include <gtest/gtest.h>

#include <vector>

#include "pfaff/characters.hpp"

using pfaff::CharSpec;
using pfaff::DominantWeight;

namespace {

DominantWeight doubled(const std::vector<int>& x) {
  std::vector<int> out;
  for (int v : x) {
    out.push_back(v);
    out.push_back(v);
  }
  return DominantWeight(out);
}

}  // namespace

TEST(CharSpec, RejectsBadParameters) {
  EXPECT_THROW(CharSpec(1, pfaff::SimpleD{0}), std::invalid_argument);
  EXPECT_THROW(CharSpec(5, pfaff::ModuleN{0, 1}), std::invalid_argument);
  EXPECT_THROW(CharSpec(5, pfaff::PfPole{0}), std::invalid_argument);
  EXPECT_THROW(CharSpec(6, pfaff::ModuleN{3, 1}), std::invalid_argument);
  EXPECT_THROW(CharSpec(6, pfaff::ModuleN{1, 0}), std::invalid_argument);
  EXPECT_THROW(CharSpec(6, pfaff::SimpleD{4}), std::invalid_argument);
  EXPECT_THROW(CharSpec(6, pfaff::IdealI{pfaff::Partition({1, 0})}), std::invalid_argument);
  EXPECT_THROW(pfaff::contains(CharSpec(4, pfaff::PfPole{0}), DominantWeight({0, 0})), std::invalid_argument);
}

TEST(Contains, IdealGenerator) {
  for (int m = 1; m <= 4; ++m) {
    std::vector<int> z(m, 0);
    z[0] = 1;
    const CharSpec ideal(2 * m, pfaff::IdealI{pfaff::Partition(z)});
    EXPECT_TRUE(pfaff::contains(ideal, doubled(z)));
    EXPECT_FALSE(pfaff::contains(ideal, doubled(std::vector<int>(m, 0))));
  }
  // Odd n: the trailing entry must vanish.
  const CharSpec odd(5, pfaff::IdealI{pfaff::Partition({1, 0})});
  EXPECT_TRUE(pfaff::contains(odd, DominantWeight({1, 1, 0, 0, 0})));
  EXPECT_FALSE(pfaff::contains(odd, DominantWeight({1, 1, 1, 1, 1})));
}

TEST(Contains, ModuleBoundary) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= m - 1; ++k) {
      for (int e = 1; e <= 3; ++e) {
        std::vector<int> nu(m, -2 * k);
        for (int i = m - k; i < m; ++i) nu[i] = -e - 2 * k;
        const CharSpec module(2 * m, pfaff::ModuleN{k, e});
        EXPECT_TRUE(pfaff::contains(module, doubled(nu)));
        nu.back() -= 1;
        EXPECT_FALSE(pfaff::contains(module, doubled(nu)));
      }
    }
  }
}

TEST(Contains, PoleZeroIsThePolynomialRing) {
  for (int m = 1; m <= 3; ++m) {
    const CharSpec s(2 * m, pfaff::PfPole{0});
    for (const auto& mu : pfaff::enumerate_paired(m, 4)) {
      EXPECT_EQ(pfaff::contains(s, mu), mu[2 * m - 1] >= 0) << mu.to_string();
    }
  }
}

TEST(Contains, UnpairedWeightsAreNeverInEvenModules) {
  const DominantWeight mu({3, 2, 0, 0});
  EXPECT_FALSE(pfaff::contains(CharSpec(4, pfaff::PfPole{1}), mu));
  EXPECT_FALSE(pfaff::contains(CharSpec(4, pfaff::ModuleN{1, 5}), mu));
  EXPECT_FALSE(pfaff::contains(CharSpec(4, pfaff::SimpleD{2}), mu));
}

TEST(LimitPfaff, Examples) {
  const auto a = pfaff::verify_limitpfaff(2, 0, 4);
  EXPECT_TRUE(a.pass) << a.failure;
  const auto b = pfaff::verify_limitpfaff(2, 1, 6);
  EXPECT_TRUE(b.pass) << b.failure;
  EXPECT_GT(b.members, 0);
  const auto c = pfaff::verify_limitpfaff(3, 1, 6);
  EXPECT_TRUE(c.pass) << c.failure;
  EXPECT_THROW(pfaff::verify_limitpfaff(2, 2, 4), std::invalid_argument);
}

TEST(LimitPfaff, MonotonicityForSmallE) {
  const int m = 3;
  const int k = 1;
  for (const auto& mu : pfaff::enumerate_paired(m, 6)) {
    for (int e = 1; e <= 3; ++e) {
      if (!pfaff::contains(CharSpec(2 * m, pfaff::ModuleN{k, e}), mu)) continue;
      EXPECT_TRUE(pfaff::contains(CharSpec(2 * m, pfaff::ModuleN{k, e + 1}), mu));
      EXPECT_TRUE(pfaff::contains(CharSpec(2 * m, pfaff::ModuleN{k + 1, e}), mu));
      EXPECT_TRUE(pfaff::contains(CharSpec(2 * m, pfaff::PfPole{k}), mu));
    }
  }
}

TEST(LimitPfaff, AllCasesUpToThree) {
  for (int m = 1; m <= 3; ++m) {
    for (int k = 0; k <= m - 1; ++k) {
      const auto r = pfaff::verify_limitpfaff(m, k, 6);
      EXPECT_TRUE(r.pass) << "m=" << m << " k=" << k << ": " << r.failure;
    }
  }
}
