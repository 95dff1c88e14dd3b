#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "satmat/classification.hpp"
#include "satmat/constructions.hpp"
#include "test_support.hpp"

using namespace satmat;
using testing_support::grid;

namespace {

// Direct cell scans, independent of the cross-section helpers.
int count_where(const Matrix01& p, const std::function<bool(const Coord&)>& keep) {
  int n = 0;
  for_each_coord(p.shape(), [&](const Coord& c) { n += p.get(c) && keep(c); });
  return n;
}

bool naive_ii(const Matrix01& p) {
  for (const Coord& o : p.one_entries()) {
    bool ok = true;
    for (std::size_t i = 0; i < p.dims(); ++i)
      ok = ok && count_where(p, [&](const Coord& c) { return c[i] == o[i]; }) == 1;
    if (ok) return true;
  }
  return false;
}

bool naive_i(const Matrix01& p) {
  const std::size_t d = p.dims();
  // Each dimension is free (0), pinned low (1) or pinned high (2).
  std::vector<int> mode(d, 0);
  while (true) {
    std::size_t pinned = 0;
    for (int m : mode) pinned += m != 0;
    if (pinned >= 1 && pinned <= d - 1) {
      auto in_face = [&](const Coord& c) {
        for (std::size_t i = 0; i < d; ++i)
          if ((mode[i] == 1 && c[i] != 1) || (mode[i] == 2 && c[i] != p.shape().extent(i))) return false;
        return true;
      };
      bool found = false;
      for (const Coord& o : p.one_entries()) {
        if (!in_face(o)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < d; ++j)
          if (mode[j] == 0) ok = ok && count_where(p, [&](const Coord& c) { return c[j] == o[j]; }) == 1;
        found = found || ok;
      }
      if (!found) return false;
    }
    std::size_t i = 0;
    while (i < d && mode[i] == 2) mode[i++] = 0;
    if (i == d) return true;
    ++mode[i];
  }
}

}  // namespace

TEST(LoneInHyperplane, Examples) {
  EXPECT_TRUE(lone_in_hyperplane(identity_pattern(2, 2), {1, 1}, 0));
  const Matrix01 full = Matrix01::ones(Shape{2, 2});
  for (const Coord& o : full.one_entries())
    for (std::size_t i = 0; i < 2; ++i) EXPECT_FALSE(lone_in_hyperplane(full, o, i));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(lone_in_hyperplane(unit_pattern(3), {1, 1, 1}, i));
  EXPECT_THROW(lone_in_hyperplane(identity_pattern(2, 2), {1, 2}, 0), std::invalid_argument);
}

TEST(PropertyII, Examples) {
  for (std::size_t d = 1; d <= 3; ++d)
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(property_ii(identity_pattern(d, k)), Coord(std::vector<int>(d, 1)));
  EXPECT_FALSE(property_ii(grid({"11", "01"})));
  EXPECT_TRUE(property_ii(unit_pattern(2)));
  EXPECT_THROW(property_ii(Matrix01(Shape{2, 2})), std::invalid_argument);
}

TEST(PropertyI, Examples) {
  EXPECT_FALSE(property_i(identity_pattern(2, 2)));
  // (1,2) is alone in row 1 and in column 2.
  const Matrix01 anti = grid({"01", "10"});
  EXPECT_FALSE(property_i(anti));
  EXPECT_EQ(property_ii(anti), (Coord{1, 2}));
  EXPECT_TRUE(classify_ssat(anti).bounded);

  const auto f = property_i(grid({"10", "00"}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->fixed, (std::map<std::size_t, int>{{0, 2}}));
  // One-dimensional patterns have no proper faces.
  EXPECT_FALSE(property_i(Matrix01::from_bits(Shape{3}, "101")));
}

TEST(Faces, CountsAndOrder) {
  const auto f2 = faces(Shape{2, 3});
  ASSERT_EQ(f2.size(), 4u);
  EXPECT_EQ(f2[0].fixed, (std::map<std::size_t, int>{{0, 1}}));
  EXPECT_EQ(f2[1].fixed, (std::map<std::size_t, int>{{0, 2}}));
  EXPECT_EQ(f2[2].fixed, (std::map<std::size_t, int>{{1, 1}}));
  EXPECT_EQ(f2[3].fixed, (std::map<std::size_t, int>{{1, 3}}));
  // 6 facets and 12 edges of a box.
  EXPECT_EQ(faces(Shape{2, 2, 2}).size(), 18u);
  // Extent-1 dimensions give coinciding specs; both are kept.
  const auto thin = faces(Shape{1, 3});
  ASSERT_EQ(thin.size(), 4u);
  EXPECT_TRUE(faces(Shape{4}).empty());
  for (const auto& f : faces(Shape{2, 3, 4})) EXPECT_TRUE(f.is_face(Shape{2, 3, 4}));
}

TEST(LoneEntryCondition, Examples) {
  EXPECT_TRUE(lone_entry_condition(unit_pattern(3), 1));
  EXPECT_EQ(lone_entry_condition(identity_pattern(2, 2), 1), (Coord{1, 1}));
  EXPECT_FALSE(lone_entry_condition(Matrix01::ones(Shape{2, 2}), 1));
  EXPECT_THROW(lone_entry_condition(unit_pattern(2), 2), std::invalid_argument);
  EXPECT_THROW(lone_entry_condition(unit_pattern(2), 0), std::invalid_argument);

  // In 3D a line through o can be lone while a plane through it is not.
  const Matrix01 p = Matrix01::from_ones(Shape{2, 2, 2}, {{1, 1, 1}, {1, 2, 2}});
  EXPECT_EQ(lone_entry_condition(p, 1), (Coord{1, 1, 1}));
  EXPECT_FALSE(lone_entry_condition(p, 2));
}

TEST(ClassifySsat, Examples) {
  for (int k = 1; k <= 4; ++k) {
    const SsatVerdict v = classify_ssat(identity_pattern(2, k));
    EXPECT_TRUE(v.bounded);
    EXPECT_TRUE(v.property_i_holds && v.property_ii_holds);
    EXPECT_FALSE(v.failing_face);
  }
  EXPECT_TRUE(classify_ssat(unit_pattern(3)).bounded);
  // The edge x1 = 1, x2 = k of a 3D identity holds no 1-entry.
  for (int k = 2; k <= 3; ++k) {
    const SsatVerdict v = classify_ssat(identity_pattern(3, k));
    EXPECT_FALSE(v.bounded);
    EXPECT_TRUE(v.property_ii_holds);
    ASSERT_TRUE(v.failing_face);
    EXPECT_EQ(v.failing_face->fixed, (std::map<std::size_t, int>{{0, 1}, {1, k}}));
  }
  const SsatVerdict full = classify_ssat(Matrix01::ones(Shape{2, 2}));
  EXPECT_FALSE(full.bounded);
  EXPECT_FALSE(full.property_ii_holds);

  const SsatVerdict corner = classify_ssat(grid({"10", "00"}));
  EXPECT_FALSE(corner.bounded);
  EXPECT_TRUE(corner.property_ii_holds);
  EXPECT_FALSE(corner.property_i_holds);
  EXPECT_THROW(classify_ssat(Matrix01(Shape{2, 2})), std::invalid_argument);
}

TEST(ClassificationProperty, AgreesWithDirectScan) {
  for (const Shape& s : testing_support::all_shapes(2, 3))
    for (const Matrix01& p : testing_support::all_matrices(s)) {
      if (p.is_zero()) continue;
      const SsatVerdict v = classify_ssat(p);
      ASSERT_EQ(v.property_ii_holds, naive_ii(p)) << p.bits();
      ASSERT_EQ(v.property_i_holds, naive_i(p)) << p.bits();
    }
  for (const Shape& s : testing_support::all_shapes(3, 2))
    for (const Matrix01& p : testing_support::all_matrices(s)) {
      if (p.is_zero()) continue;
      const SsatVerdict v = classify_ssat(p);
      ASSERT_EQ(v.property_ii_holds, naive_ii(p)) << p.bits();
      ASSERT_EQ(v.property_i_holds, naive_i(p)) << p.bits();
    }
}

TEST(ClassificationProperty, IIMatchesLoneEntryAtCodimensionOne) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 500; ++round) {
    const std::size_t d = 2 + round % 3;
    const Matrix01 p = testing_support::random_nonzero(testing_support::random_shape(d, 3, 30, rng), rng, 0.3);
    EXPECT_EQ(property_ii(p).has_value(), lone_entry_condition(p, d - 1).has_value()) << p.bits();
    if (auto o = property_ii(p)) {
      EXPECT_EQ(*o, *lone_entry_condition(p, d - 1));
    }
  }
}

TEST(ClassificationProperty, MirrorSymmetric) {
  std::mt19937_64 rng(19);
  for (int round = 0; round < 300; ++round) {
    const std::size_t d = 2 + round % 2;
    const Matrix01 p = testing_support::random_nonzero(testing_support::random_shape(d, 3, 18, rng), rng, 0.4);
    const std::size_t axis = rng() % d;
    Matrix01 q(p.shape());
    p.for_each_one([&](std::size_t lin) {
      Coord c = p.shape().coord(lin);
      c[axis] = p.shape().extent(axis) + 1 - c[axis];
      q.set(c, true);
    });
    EXPECT_EQ(classify_ssat(p).bounded, classify_ssat(q).bounded) << p.bits();
  }
}
