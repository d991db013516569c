#include <gtest/gtest.h>

#include "dfkit/admissibility.hpp"

using namespace dfkit;

TEST(DsAdmissible, Examples) {
  const auto a = ds_admissible({7, 3, 1});
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, 6u);
  EXPECT_EQ(a.rhs, 6u);
  const auto b = ds_admissible({170, 42, 10});
  EXPECT_FALSE(b.pass);
  EXPECT_EQ(b.lhs, 1690u);
  EXPECT_EQ(b.rhs, 1722u);
  EXPECT_TRUE(ds_admissible({5, 5, 5}).pass);
  EXPECT_FALSE(ds_admissible({5, 6, 6}).pass);
}

TEST(Proportional, Examples) {
  const auto a = proportional_pair_admissible({85, 21, 5}, 2);
  EXPECT_FALSE(a.pass);
  EXPECT_EQ(a.residual, 64);
  EXPECT_EQ(a.expanded, 64);
  EXPECT_EQ(a.scaled.params, (DSParams{170, 42, 10}));
  EXPECT_FALSE(a.scaled.pass);
  EXPECT_TRUE(proportional_pair_admissible({85, 21, 5}, 1).pass);
  EXPECT_TRUE(proportional_pair_admissible({5, 5, 5}, 3).pass);
  EXPECT_THROW(proportional_pair_admissible({170, 42, 10}, 2), Error);
}

TEST(DdsIdentity, Examples) {
  const auto a = dds_counting_identity({85, 2, 42, 42, 10});
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.lhs, 1722u);
  EXPECT_EQ(a.within, 42u);
  EXPECT_EQ(a.outside, 1680u);
  EXPECT_TRUE(dds_counting_identity({7, 2, 6, 6, 2}).pass);
  const auto c = dds_counting_identity({7, 2, 6, 6, 3});
  EXPECT_FALSE(c.pass);
  EXPECT_EQ(c.outside, 36u);
}

TEST(Result3, Examples) {
  const auto a = refute_result3(4, 4, 3, 2);
  EXPECT_FALSE(a.valid);
  EXPECT_EQ(a.claimed, (DSParams{170, 42, 10}));
  EXPECT_EQ(a.singer, (DSParams{85, 21, 5}));
  EXPECT_EQ(a.mu, 2u);
  const auto b = refute_result3(4, 4, 3, 1);
  EXPECT_TRUE(b.valid);
  EXPECT_EQ(b.claimed, (DSParams{85, 21, 5}));
  const auto c = refute_result3(3, 3, 2, 2);
  EXPECT_FALSE(c.valid);
  EXPECT_EQ(c.mu, 2u);
  EXPECT_EQ(c.residual, 9);
}

TEST(Result3, Hypotheses) {
  EXPECT_THROW(refute_result3(6, 3, 1, 1), Error);
  EXPECT_THROW(refute_result3(4, 2, 3, 1), Error);
  EXPECT_THROW(refute_result3(4, 4, 2, 1), Error);
  EXPECT_THROW(refute_result3(4, 3, 3, 1), Error);
  EXPECT_THROW(refute_result3(4, 4, 3, 4), Error);
}

// The empty set is the one exception: (v,0,0) and all its multiples pass.
TEST(Sweep, EmptyTriplesScaleAdmissibly) {
  for (u64 v = 1; v <= 200; ++v) {
    EXPECT_TRUE(ds_admissible({v, 0, 0}).pass);
    EXPECT_TRUE(ds_admissible({3 * v, 0, 0}).pass);
  }
}

// Every admissible triple with v <= 200, v > k >= 1, scaled by 2..5, is inadmissible.
TEST(Sweep, ProportionalityHasNoExceptions) {
  int checked = 0;
  for (u64 v = 1; v <= 200; ++v)
    for (u64 k = 1; k < v; ++k)
      for (u64 l = 0; l <= k; ++l) {
        if (!ds_admissible({v, k, l}).pass) continue;
        for (u64 mu = 2; mu <= 5; ++mu) {
          ++checked;
          EXPECT_FALSE(ds_admissible({v * mu, k * mu, l * mu}).pass);
          EXPECT_FALSE(proportional_pair_admissible({v, k, l}, mu).pass);
        }
      }
  EXPECT_GT(checked, 0);
}

// valid exactly on the (e, h) = (q - 1, 1) diagonal for q^m <= 4096.
TEST(Sweep, Result3Diagonal) {
  int diagonal = 0;
  for (u64 q = 2; q <= 16; ++q) {
    if (!as_prime_power(q)) continue;
    for (u64 m = 3; checked_pow(q, static_cast<unsigned>(m)) <= 4096; ++m)
      for (u64 e = 1; e <= q - 1; ++e) {
        if ((q - 1) % e != 0 || gcd(m, e) != 1) continue;
        for (u64 h = 1; h <= e; ++h) {
          const auto r = refute_result3(q, m, e, h);
          const bool diag = e == q - 1 && h == 1;
          EXPECT_EQ(r.valid, diag) << q << " " << m << " " << e << " " << h;
          diagonal += diag;
        }
      }
  }
  EXPECT_GT(diagonal, 0);
}
