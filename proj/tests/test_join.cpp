#include <gtest/gtest.h>

#include "simplex/join.hpp"
#include "simplex/nerve.hpp"

using namespace simplex;

namespace {

SSetPtr group_nerve(const FinGroup& g, int trunc) {
  return share(nerve(group_as_groupoid(g), trunc).x);
}

unsigned range_mask(int lo, int hi) {
  unsigned m = 0;
  for (int v = lo; v <= hi; ++v) m |= 1u << v;
  return m;
}

}  // namespace

TEST(Join, EdgeJoinPointIsTriangle) {
  auto a = shape_sset(Shape::simplex(1), 3).x;
  auto b = shape_sset(Shape::simplex(0), 3).x;
  auto j = share(join(a, b));
  auto d2 = share(shape_sset(Shape::simplex(2), 3).x);
  EXPECT_TRUE(validate(*j).empty());
  EXPECT_EQ(find_iso(j, d2).status, SearchStatus::found);
  EXPECT_EQ(join_shape(Shape::simplex(1), Shape::simplex(0)), Shape::simplex(2));
}

TEST(Join, AssociativeOnSimplices) {
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) {
        auto l = join_shape(join_shape(Shape::simplex(a), Shape::simplex(b)), Shape::simplex(c));
        auto r = join_shape(Shape::simplex(a), join_shape(Shape::simplex(b), Shape::simplex(c)));
        EXPECT_EQ(l, r);
        EXPECT_EQ(l, Shape::simplex(a + b + c + 2));
        auto x = share(join(join(shape_sset(Shape::simplex(a), 4).x, shape_sset(Shape::simplex(b), 4).x),
                            shape_sset(Shape::simplex(c), 4).x));
        auto y = share(shape_sset(Shape::simplex(a + b + c + 2), 4).x);
        EXPECT_EQ(find_iso(x, y).status, SearchStatus::found);
      }
}

TEST(Join, HornJoinIdentities) {
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; k + l <= 4; ++l)
      for (int i = 0; i <= l; ++i) {
        // Δ^{k-1} ⋆ Λ^l_i is the horn missing every face except the high ones but k+i
        unsigned J = range_mask(k, k + l) & ~(1u << (k + i));
        EXPECT_EQ(join_shape(Shape::simplex(k - 1), Shape::horn(l, i)), Shape::horn_set(k + l, J));
      }
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; k + l <= 4; ++l)
      EXPECT_EQ(join_shape(Shape::boundary(k - 1), Shape::simplex(l)),
                Shape::horn_set(k + l, range_mask(0, k - 1)));
}

TEST(Cotensor, EmptyJoinIsIdentity) {
  auto n = group_nerve(cyclic(2), 3);
  auto c = cotensor_join(*n, Shape::empty(), 3);
  EXPECT_EQ(c.x.size, n->size);
  EXPECT_TRUE(validate(c.x).empty());
}

TEST(Cotensor, DecOfNerveShiftsLevels) {
  auto n = group_nerve(cyclic(2), 4);
  auto c = dec(*n, 1, 3);
  EXPECT_TRUE(validate(c.x).empty());
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(c.x.size[k], 1u << (k + 1));
  auto c2 = dec(*n, 2, 2);
  EXPECT_EQ(c2.x.size[0], 4u);
  EXPECT_TRUE(validate(c2.x).empty());
}

TEST(Cotensor, DecOfPoint) {
  auto c = dec(terminal(4), 2, 2);
  EXPECT_EQ(c.x.size, (std::vector<Id>{1, 1, 1}));
}

TEST(StarLemma, GroupNerveAndCech) {
  auto n = group_nerve(cyclic(2), 4);
  auto cech = cech_nerve({0, 0, 1, 1, 1}, 2, 4);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; k + l <= 4; ++l)
      for (int i = 0; i <= l; ++i) {
        EXPECT_EQ(check_star_lemma(to_terminal(n), k, l, i), "") << k << l << i;
        EXPECT_EQ(check_star_lemma(cech.aug, k, l, i), "") << k << l << i;
      }
}

TEST(Expansion, SingleHorn) {
  auto c = find_expansion(Shape::horn(2, 1), Shape::simplex(2));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->size(), 1u);
  EXPECT_EQ(replay_expansion(Shape::horn(2, 1), *c), Shape::simplex(2));
}

TEST(Expansion, SimplicesAreCollapsible) {
  for (int k = 0; k <= 4; ++k) {
    auto c = is_collapsible(Shape::simplex(k));
    ASSERT_TRUE(c);
    EXPECT_EQ(replay_expansion(Shape::generated(k, {1u}), *c), Shape::simplex(k));
  }
}

TEST(Expansion, GeneralizedHorns) {
  for (int n = 1; n <= 4; ++n) {
    unsigned full = (1u << (n + 1)) - 1;
    for (unsigned J = 1; J < full; ++J) {
      Shape h = Shape::horn_set(n, J);
      auto c = find_expansion(h, Shape::simplex(n));
      ASSERT_TRUE(c) << n << " " << J;
      EXPECT_EQ(replay_expansion(h, *c), Shape::simplex(n));
      auto v = is_collapsible(h);
      ASSERT_TRUE(v);
    }
  }
}

TEST(Expansion, BoundaryIsNotExpandable) {
  EXPECT_FALSE(find_expansion(Shape::boundary(2), Shape::simplex(2)));
  EXPECT_FALSE(is_collapsible(Shape::boundary(2)));
}
