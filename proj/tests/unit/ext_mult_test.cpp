#include <gtest/gtest.h>

#include "pfaff/ext_mult.hpp"

using pfaff::BiLaurentPoly;
using pfaff::Partition;
using pfaff::ZPair;

namespace {

BiLaurentPoly q(int e) { return BiLaurentPoly::q_power(e); }

}  // namespace

TEST(ExtSeries, Examples) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(pfaff::ext_series_enum(m, 1, 1), q(m * (2 * m - 1)));
    EXPECT_EQ(pfaff::ext_series_closed(m, 1, 1), q(m * (2 * m - 1)));
  }
  EXPECT_EQ(pfaff::ext_series_enum(2, 2, 3), q(1));
  EXPECT_EQ(pfaff::ext_series_closed(2, 2, 3), q(1));
  EXPECT_EQ(pfaff::ext_series_enum(3, 2, 3), q(6) + q(10));
  EXPECT_EQ(pfaff::ext_series_closed(3, 2, 3), q(6) + q(10));
  EXPECT_EQ(pfaff::ext_series_closed(4, 2, 3), pfaff::ext_series_closed(4, 2, 9));
  EXPECT_THROW(pfaff::ext_series_enum(3, 2, 2), std::invalid_argument);
  EXPECT_THROW(pfaff::ext_series_closed(3, 4, 9), std::invalid_argument);
}

TEST(ExtSeries, EnumerationMatchesClosedForm) {
  for (int m = 1; m <= 7; ++m) {
    for (int a = 1; a <= m; ++a) {
      for (int b : {2 * a - 1, 2 * a, 2 * a + 3}) {
        ASSERT_EQ(pfaff::ext_series_enum(m, a, b), pfaff::ext_series_closed(m, a, b)) << m << "," << a << "," << b;
      }
    }
  }
}

TEST(ZPair, Validation) {
  EXPECT_THROW(ZPair(Partition({2, 1}), 1), std::invalid_argument);
  EXPECT_NO_THROW(ZPair(Partition({2, 2}), 1));
}

TEST(ZSets, Examples) {
  const pfaff::ZSet expected{ZPair(Partition({0, 0}), 1), ZPair(Partition({1, 1}), 0)};
  EXPECT_EQ(pfaff::zset_thickened(2, 1, 1), expected);
  for (const ZPair& z : pfaff::zset_rectangle(3, 2, 0)) EXPECT_TRUE(z.x.empty());
}

TEST(ZSets, Structure) {
  for (int m = 1; m <= 5; ++m) {
    const ZPair sentinel(Partition::zero(m), m - 1);
    for (int a = 1; a <= m; ++a) {
      for (int e = 0; e <= 4; ++e) {
        const pfaff::ZSet thick = pfaff::zset_thickened(m, a, e);
        ASSERT_TRUE(thick.contains(sentinel));
        for (const ZPair& z : thick) {
          if (z == sentinel) continue;
          ASSERT_GE(z.x[m - 1], 1);
        }
      }
    }
  }
}

TEST(ZSets, DisjointnessAndInclusion) {
  for (int m = 2; m <= 5; ++m) {
    const ZPair sentinel(Partition::zero(m), m - 1);
    for (int k = 1; k <= m - 1; ++k) {
      for (int e = 0; e <= 4; ++e) {
        const pfaff::ZSet rect = pfaff::zset_rectangle(m, m - k, e);
        const pfaff::ZSet thick_next = pfaff::zset_thickened(m, m - k + 1, e);
        for (const ZPair& z : rect) ASSERT_FALSE(thick_next.contains(z));
        const pfaff::ZSet rect_next = pfaff::zset_rectangle(m, m - k, e + 1);
        for (const ZPair& z : pfaff::zset_thickened(m, m - k, e)) {
          if (z == sentinel) continue;
          ASSERT_TRUE(rect_next.contains(z));
        }
      }
    }
  }
}
