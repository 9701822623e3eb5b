#include <gtest/gtest.h>

#include "simplex/nerve.hpp"
#include "simplex/shape.hpp"
#include "simplex/sset.hpp"

using namespace simplex;

namespace {

// Brute-force count of compatible boundary tuples of level k.
std::size_t count_tuples(const SSet& x, int k) {
  std::size_t n = x.size[k - 1], count = 0;
  std::vector<Id> t(k + 1, 0);
  std::size_t total = 1;
  for (int j = 0; j <= k; ++j) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int j = 0; j <= k; ++j) {
      t[j] = static_cast<Id>(c % n);
      c /= n;
    }
    bool ok = true;
    for (int j = 1; j <= k && ok; ++j)
      for (int i = 0; i < j && ok; ++i)
        if (k >= 2) ok = x.d[k - 1][i][t[j]] == x.d[k - 1][j - 1][t[i]];
    count += ok;
  }
  return count;
}

}  // namespace

TEST(Validate, StandardSimplexIsValid) {
  auto d2 = shape_sset(Shape::simplex(2), 4).x;
  EXPECT_TRUE(validate(d2).empty());
  EXPECT_EQ(d2.size[0], 3u);
  EXPECT_EQ(d2.size[1], 6u);
  EXPECT_EQ(d2.size[2], 10u);
}

TEST(Validate, SwappedFacesAreReported) {
  auto d2 = shape_sset(Shape::simplex(2), 2);
  SSet x = d2.x;
  // the nondegenerate 2-simplex is (0,1,2)
  Id top = 0;
  for (Id e = 0; e < x.size[2]; ++e)
    if (d2.seqs[2][e] == std::vector<int>{0, 1, 2}) top = e;
  std::swap(x.d[2][0][top], x.d[2][1][top]);
  EXPECT_FALSE(validate(x).empty());
}

TEST(Validate, NerveOfZ3) {
  auto n = nerve(group_as_groupoid(cyclic(3)), 4);
  EXPECT_TRUE(validate(n.x).empty());
  EXPECT_EQ(n.x.size, (std::vector<Id>{1, 3, 9, 27, 81}));
}

TEST(Coskeleton, Point) {
  auto c = coskeleton(terminal(0), 0, 3);
  EXPECT_EQ(c.size, (std::vector<Id>{1, 1, 1, 1}));
  EXPECT_TRUE(validate(c).empty());
}

TEST(Coskeleton, TwoPointsMatchesBruteForce) {
  auto c = coskeleton(constant(2, 0), 0, 2);
  EXPECT_EQ(c.size[1], 4u);
  EXPECT_EQ(c.size[2], 8u);
  EXPECT_EQ(c.size[2], count_tuples(c, 2));
  EXPECT_TRUE(validate(c).empty());
}

TEST(Coskeleton, NerveOneTruncationIsLarger) {
  auto n = nerve(group_as_groupoid(cyclic(2)), 3);
  auto c = coskeleton(n.x, 1, 3);
  EXPECT_EQ(c.size[2], count_tuples(n.x, 2));
  EXPECT_GT(c.size[2], 4u);
  EXPECT_TRUE(validate(c).empty());
}

TEST(Coskeleton, IdempotentAboveN) {
  auto n = nerve(group_as_groupoid(cyclic(3)), 3);
  auto c = coskeleton(n.x, 1, 3);
  auto cc = coskeleton(c, 1, 3);
  EXPECT_TRUE(same_tables(c, cc));
}

TEST(Coskeleton, NerveIsTwoCoskeletal) {
  auto n = nerve(group_as_groupoid(dihedral(3)), 4);
  EXPECT_TRUE(validate(n.x).empty());
  auto c = coskeleton(n.x, 2, 4);
  EXPECT_EQ(c.size, n.x.size);
  EXPECT_TRUE(level_is_coskeletal(n.x, 3));
  EXPECT_TRUE(level_is_coskeletal(n.x, 4));
  EXPECT_FALSE(level_is_coskeletal(n.x, 2));
}

TEST(Limits, ProductWithPoint) {
  auto n = nerve(group_as_groupoid(cyclic(3)), 3);
  auto p = product(terminal(3), n.x);
  EXPECT_EQ(p.obj.size, n.x.size);
  EXPECT_TRUE(validate(p.obj).empty());
  EXPECT_EQ(p.pr2, [&] {
    std::vector<Table> id;
    for (int k = 0; k <= 3; ++k) {
      Table t(n.x.size[k]);
      for (Id e = 0; e < t.size(); ++e) t[e] = e;
      id.push_back(t);
    }
    return id;
  }());
}

TEST(Limits, DiagonalPullbackOfNerve) {
  auto n = share(nerve(group_as_groupoid(cyclic(2)), 4).x);
  auto id = identity(n);
  auto p = pullback(id, id);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(p.obj.size[k], 1u << k);
  EXPECT_TRUE(validate(p.obj).empty());
}

TEST(Limits, PullbackOverPointIsProduct) {
  auto a = share(nerve(group_as_groupoid(cyclic(2)), 3).x);
  auto b = cech_nerve({0, 0, 0}, 1, 3).nerve;
  auto p = pullback(to_terminal(a), to_terminal(b));
  auto q = product(*a, *b);
  EXPECT_TRUE(same_tables(p.obj, q.obj));
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(p.obj.size[k], a->size[k] * b->size[k]);
}

TEST(Pi0, Examples) {
  auto codisc = nerve(pair_groupoid(3), 2);
  EXPECT_EQ(pi0(codisc.x).classes, 1u);
  EXPECT_EQ(pi0(constant(2, 2)).classes, 2u);
  auto g = disjoint_union(pair_groupoid(2), pair_groupoid(1));
  auto q = pi0(nerve(g, 2).x);
  EXPECT_EQ(q.classes, 2u);
  EXPECT_EQ(q.cls, (Table{0, 0, 1}));
}

TEST(Pi0, CechNerveRecoversTarget) {
  auto c = cech_nerve({0, 1, 1, 2, 2, 2}, 3, 3);
  auto q = pi0(*c.nerve);
  EXPECT_EQ(q.classes, 3u);
  for (Id v = 0; v < c.nerve->size[0]; ++v)
    for (Id w = 0; w < c.nerve->size[0]; ++w)
      EXPECT_EQ(q.cls[v] == q.cls[w], c.aug.f[0][v] == c.aug.f[0][w]);
  EXPECT_TRUE(validate(*c.nerve).empty());
  EXPECT_TRUE(validate_map(c.aug).empty());
}

TEST(Helpers, ApplyMonotoneMatchesSequences) {
  auto d = shape_sset(Shape::simplex(3), 4);
  // theta^* of the top simplex is the sequence theta itself
  Id top = 0;
  for (Id e = 0; e < d.x.size[3]; ++e)
    if (d.seqs[3][e] == std::vector<int>{0, 1, 2, 3}) top = e;
  std::vector<std::vector<int>> thetas = {{0, 0, 2}, {1, 1, 3, 3, 3}, {2}, {0, 1, 2, 3}, {0, 3, 3}};
  for (const auto& th : thetas) {
    int m = static_cast<int>(th.size()) - 1;
    Id r = apply_monotone(d.x, 3, top, th);
    EXPECT_EQ(d.seqs[m][r], th);
  }
}
