#include <gtest/gtest.h>

#include "pfaff/origin.hpp"
#include "pfaff/partitions.hpp"

using pfaff::BiLaurentPoly;

namespace {

BiLaurentPoly q(int e) { return BiLaurentPoly::q_power(e); }

}  // namespace

TEST(Origin, PolePowers) {
  for (int m = 1; m <= 6; ++m) {
    EXPECT_EQ(pfaff::h0_pf_pole(m, 0), q(m * (2 * m - 1)));
    for (int k = 0; k <= m - 1; ++k) EXPECT_EQ(pfaff::coeff(pfaff::h0_pf_pole(m, k), 0), 0);
  }
  EXPECT_EQ(pfaff::h0_pf_pole(2, 1), q(1));
  EXPECT_THROW(pfaff::h0_pf_pole(2, 2), std::invalid_argument);
}

TEST(Origin, Indecomposables) {
  for (int m = 1; m <= 5; ++m) EXPECT_EQ(pfaff::h0_Q(m, 0), BiLaurentPoly(1));
  EXPECT_EQ(pfaff::h0_Q(3, 1), q(5) + q(9));
  EXPECT_EQ(pfaff::h0_Q(2, 1), q(5));
  EXPECT_THROW(pfaff::h0_Q(3, 3), std::invalid_argument);
}

TEST(Origin, Simples) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(pfaff::h0_D_even(m, 0), BiLaurentPoly(1));
    EXPECT_EQ(pfaff::h0_D_even(m, m), q(m * (2 * m - 1)));
    EXPECT_EQ(pfaff::h0_D_odd(m, 0), BiLaurentPoly(1));
    EXPECT_EQ(pfaff::h0_D_odd(m, m), q(m * (2 * m + 1)));
  }
  EXPECT_EQ(pfaff::h0_D_even(2, 1), q(1) + q(5));
  EXPECT_EQ(pfaff::h0_D_odd(2, 1), q(3) + q(7));
  EXPECT_THROW(pfaff::h0_D_odd(2, 3), std::invalid_argument);
}

TEST(Origin, Splices) {
  for (int m = 1; m <= 10; ++m) {
    for (int p = 0; p <= m - 1; ++p) ASSERT_EQ(q(1) * pfaff::h0_Q(m, p), pfaff::h0_pf_pole(m, m - p - 1));
    for (int s = 1; s <= m - 1; ++s) {
      ASSERT_EQ(pfaff::h0_D_even(m, s),
                pfaff::h0_pf_pole(m, m - s) + pfaff::shift(pfaff::h0_pf_pole(m, m - s - 1), -1))
          << m << "," << s;
    }
  }
}

TEST(Origin, NonnegativeWithinAmbientDegree) {
  for (int m = 1; m <= 10; ++m) {
    const int d = static_cast<int>(pfaff::binomial(2 * m, 2));
    const int d_odd = static_cast<int>(pfaff::binomial(2 * m + 1, 2));
    for (int k = 0; k <= m - 1; ++k) {
      const BiLaurentPoly f = pfaff::h0_pf_pole(m, k);
      ASSERT_TRUE(pfaff::has_nonnegative_coefficients(f));
      ASSERT_GE(pfaff::min_q_degree(f), 0);
      ASSERT_LE(pfaff::max_q_degree(f), d);
      if (k >= 1) {
        ASSERT_EQ(pfaff::coeff(f, d), 0);
      }
    }
    for (int p = 0; p <= m; ++p) {
      const BiLaurentPoly f = pfaff::h0_D_odd(m, p);
      ASSERT_TRUE(pfaff::has_nonnegative_coefficients(f));
      ASSERT_LE(pfaff::max_q_degree(f), d_odd);
    }
  }
}
