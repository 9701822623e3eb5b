#include <gtest/gtest.h>

#include "simplex/nerve.hpp"
#include "simplex/strictify.hpp"

using namespace simplex;

namespace {

SSetPtr group_nerve(const FinGroup& g, int trunc) {
  return share(nerve(group_as_groupoid(g), trunc).x);
}

// K(Z/2, 2) by hand: one vertex, one edge, Z/2 triangles, 3-simplices are
// 4-tuples summing to zero, coskeletal above.
SSetPtr k_z2_2(int trunc) {
  SSet x = SSet::with_sizes({1, 1, 2, 8});
  for (int i = 0; i <= 2; ++i) x.d[2][i] = {0, 0};
  for (int i = 0; i <= 1; ++i) x.s[1][i] = {0};
  x.s[0][0] = {0};
  // level 3 ids: bits z0 z1 z2, z3 = z0 ^ z1 ^ z2
  for (Id e = 0; e < 8; ++e) {
    Id z[4] = {e & 1, (e >> 1) & 1, (e >> 2) & 1, 0};
    z[3] = z[0] ^ z[1] ^ z[2];
    for (int i = 0; i <= 3; ++i) x.d[3][i][e] = z[i];
  }
  for (Id a = 0; a < 2; ++a)
    for (int i = 0; i <= 2; ++i) {
      Id z[3] = {0, 0, 0};
      z[i] = a;
      if (i + 1 <= 2) z[i + 1] = a;
      x.s[2][i][a] = z[0] | (z[1] << 1) | (z[2] << 2);
    }
  auto ext = csk_extend(x, nullptr, nullptr, trunc);
  return share(std::move(ext.x));
}

}  // namespace

TEST(Strictify, HandBuiltEilenbergMacLaneIsValid) {
  auto k = k_z2_2(5);
  EXPECT_TRUE(validate(*k).empty());
  EXPECT_TRUE(classify_object(k, 2).passed());
  EXPECT_EQ(classify_object(k, 1).outcome, Outcome::fail);
}

TEST(Strictify, GroupNerveIsFixed) {
  auto x = group_nerve(cyclic(3), 4);
  auto s = strictify(to_terminal(x), 1, 4);
  EXPECT_TRUE(canonical_is_iso(s));
  EXPECT_TRUE(validate(*s.tau.src).empty());
  EXPECT_TRUE(validate_map(s.canonical).empty());
  EXPECT_TRUE(validate_map(s.tau).empty());
}

TEST(Strictify, CollapsesHigherGroup) {
  auto x = k_z2_2(4);
  auto f = to_terminal(x);
  auto s = strictify(f, 1, 4);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(s.tau.src->size[k], 1u) << "level " << k;
  EXPECT_FALSE(canonical_is_iso(s));
  EXPECT_TRUE(validate_map(s.canonical).empty());
  EXPECT_TRUE(classify(s.tau, 1, Kind::stack).passed());
}

TEST(Strictify, QuotientBijectiveExactlyForNStacks) {
  struct Case {
    SMap f;
    int n;
  };
  auto k = k_z2_2(5);
  auto c = cech_nerve({0, 0, 1, 2, 2}, 3, 5);
  std::vector<Case> cases = {
      {to_terminal(k), 1}, {to_terminal(k), 2}, {to_terminal(k), 3},
      {to_terminal(group_nerve(cyclic(2), 5)), 0}, {to_terminal(group_nerve(cyclic(2), 5)), 1},
      {c.aug, 0}, {c.aug, 1}, {to_terminal(c.nerve), 0}, {to_terminal(c.nerve), 1},
  };
  for (const auto& cs : cases) {
    auto s = strictify(cs.f, cs.n, cs.n + 2);
    bool is_n_stack = classify(cs.f, cs.n, Kind::stack).outcome != Outcome::fail;
    EXPECT_EQ(canonical_is_iso(s), is_n_stack) << "n = " << cs.n;
    EXPECT_NE(classify(s.tau, cs.n, Kind::stack).outcome, Outcome::fail);
    for (int i = 0; i <= cs.n + 1; ++i) EXPECT_EQ(check_inverse_laws(s, i), "") << "i = " << i;
  }
}

TEST(Strictify, MissingFaceIsWellDefined) {
  auto x = k_z2_2(4);
  auto s = strictify(to_terminal(x), 1, 3);
  for (int i = 0; i <= 2; ++i) {
    auto mf = missing_face(s, i);
    EXPECT_EQ(mf.lifts_checked, x->size[2]);
    EXPECT_EQ(mf.value.size(), mf.horn.size());
  }
}

TEST(Strictify, Idempotent) {
  auto x = k_z2_2(5);
  auto s = strictify(to_terminal(x), 2, 5);
  auto again = strictify(s.tau, 2, 5);
  EXPECT_TRUE(canonical_is_iso(again));
}

TEST(Strictify, RejectsNonKanInput) {
  auto b = share(shape_sset(Shape::boundary(2), 3).x);
  EXPECT_THROW(strictify(to_terminal(b), 1, 3), InputError);
}

TEST(Strictify, HypercoverAgreesWithCoskeleton) {
  auto c = cech_nerve({0, 0, 1, 2, 2, 2}, 3, 5);
  for (int n = 0; n <= 2; ++n) {
    auto r = strictify_hypercover_check(c.aug, n, 4);
    EXPECT_TRUE(r.ok()) << r.detail;
  }
  auto pg = share(nerve(pair_groupoid(3), 5).x);
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(strictify_hypercover_check(to_terminal(pg), n, 4).ok());
}
