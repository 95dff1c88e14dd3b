#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "satmat/constructions.hpp"
#include "satmat/saturation.hpp"
#include "test_support.hpp"

using namespace satmat;

namespace {
const Matrix01 kI2 = identity_pattern(2, 2);
}

TEST(Avoids, Examples) {
  EXPECT_TRUE(avoids(Matrix01(Shape{3, 3}), kI2));
  EXPECT_FALSE(avoids(kI2, kI2));
  EXPECT_TRUE(avoids(shell(Shape{3, 3}).indicator(Shape{3, 3}), kI2));
  EXPECT_THROW(avoids(Matrix01(Shape{3, 3, 3}), kI2), std::invalid_argument);
}

TEST(Saturating, TwoByTwoL) {
  const Matrix01 m = Matrix01::from_ones(Shape{2, 2}, {{1, 2}, {2, 1}, {2, 2}});
  EXPECT_TRUE(is_saturating(m, kI2).verdict);
}

TEST(Saturating, VacuousWhenPatternTooLarge) {
  const Matrix01 big = Matrix01::ones(Shape{3, 3});
  const SaturationReport r = is_saturating(Matrix01::ones(Shape{2, 2}), big);
  EXPECT_TRUE(r.verdict);
  EXPECT_FALSE(r.failure_kind);
  // Any 0-entry is a dead flip because no copy can ever fit.
  const SaturationReport dead = is_saturating(Matrix01(Shape{2, 2}), big);
  EXPECT_FALSE(dead.verdict);
  EXPECT_EQ(dead.dead_flip, (Coord{1, 1}));
}

TEST(Saturating, AllZeroHostReportsLastCell) {
  const SaturationReport r = is_saturating(Matrix01(Shape{3, 3}), kI2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.failure_kind, FailureKind::dead_flip);
  // Row-major first offender: (1,1) pairs with nothing, so it is reported.
  EXPECT_EQ(r.dead_flip, (Coord{1, 1}));
  // Every single flip is dead, including (3,3).
  EXPECT_FALSE(anchored_contains(Matrix01::from_ones(Shape{3, 3}, {{3, 3}}), kI2, {3, 3}));
}

TEST(Saturating, ReportsExistingCopy) {
  const Matrix01 m = Matrix01::from_ones(Shape{3, 3}, {{1, 1}, {2, 2}});
  const SaturationReport r = is_saturating(m, kI2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.failure_kind, FailureKind::contains_pattern);
  ASSERT_TRUE(r.existing_copy);
  EXPECT_TRUE(is_valid_embedding(m, kI2, *r.existing_copy));
}

TEST(Semisaturating, Examples) {
  EXPECT_TRUE(is_semisaturating(Matrix01(Shape{3, 4}), unit_pattern(2)).verdict);

  const Matrix01 offset = offset_block(kI2, 4);
  EXPECT_TRUE(is_saturating(offset, kI2).verdict);
  EXPECT_TRUE(is_semisaturating(offset, kI2).verdict);

  const Matrix01 corners = Matrix01::from_ones(Shape{5, 5}, {{1, 1}, {1, 5}, {5, 1}, {5, 5}});
  EXPECT_TRUE(is_semisaturating(corners, kI2).verdict);
  EXPECT_TRUE(oracle::semisaturating(corners, kI2));
}

TEST(Semisaturating, DeadFlipIsFirstOffender) {
  const Matrix01 m = Matrix01::from_ones(Shape{3, 3}, {{1, 1}, {3, 3}});
  const SaturationReport r = is_semisaturating(m, kI2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.dead_flip, (Coord{1, 3}));
}

TEST(ZeroPattern, Conventions) {
  const Matrix01 zero(Shape{2, 2});
  EXPECT_TRUE(is_saturating(Matrix01(Shape{3, 3}), zero).verdict);
  const SaturationReport r = is_saturating(Matrix01::from_ones(Shape{3, 3}, {{2, 2}}), zero);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.failure_kind, FailureKind::contains_pattern);
  EXPECT_TRUE(is_semisaturating(Matrix01(Shape{3, 3}), zero).verdict);
  EXPECT_TRUE(is_semisaturating(Matrix01::ones(Shape{3, 3}), zero).verdict);
}

TEST(SaturationProperty, AgreesWithOracleAndImplications) {
  std::mt19937_64 rng(41);
  int saturating_seen = 0;
  for (int round = 0; round < 800; ++round) {
    const std::size_t d = 2 + round % 2;
    const Shape hs = testing_support::random_shape(d, 4, 12, rng);
    const Shape ps = testing_support::random_shape(d, 2, 6, rng);
    const Matrix01 p = testing_support::random_nonzero(ps, rng, 0.5);
    // Mix random hosts with maximal avoiding ones.
    const Matrix01 m = round % 3 == 0 ? greedy_saturate(p, hs, random_order(hs, rng())).matrix
                                      : testing_support::random_matrix(hs, rng, 0.6);
    const SaturationReport sat = is_saturating(m, p);
    const SaturationReport semi = is_semisaturating(m, p);
    ASSERT_EQ(sat.verdict, oracle::saturating(m, p));
    ASSERT_EQ(semi.verdict, oracle::semisaturating(m, p));
    EXPECT_EQ(sat.verdict, !sat.failure_kind.has_value());
    if (sat.verdict) {
      ++saturating_seen;
      EXPECT_TRUE(semi.verdict);
      // Maximal: no flip keeps the matrix free of p.
      for (std::size_t lin = 0; lin < m.cell_count(); ++lin) {
        if (m.get(lin)) continue;
        Matrix01 f = m;
        f.set(lin, true);
        EXPECT_FALSE(avoids(f, p));
      }
    }
  }
  EXPECT_GT(saturating_seen, 100);
}
