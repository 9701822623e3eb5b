#include <gtest/gtest.h>

#include "simplex/em.hpp"

using namespace simplex;

namespace {

GroupCocycle carry_z3() {
  auto c = GroupCocycle::zero(cyclic(3), cyclic(3), 3);
  Radix r{{3, 3, 3}};
  for (Id code = 0; code < r.size(); ++code) {
    auto g = r.decode(code);
    c.values[code] = g[0] * (g[1] + g[2] >= 3 ? 1 : 0) % 3;
  }
  return c;
}

GroupCocycle product_2cocycle() {
  auto c = GroupCocycle::zero(cyclic(2), cyclic(2), 2);
  c.values[3] = 1;
  return c;
}

// b(1,1) = 1 on Z/3, a cochain that is not a cocycle
GroupCocycle shifted_cochain() {
  auto b = GroupCocycle::zero(cyclic(3), cyclic(3), 2);
  b.values[1 + 3 * 1] = 1;
  return b;
}

GroupCocycle plus(GroupCocycle a, const GroupCocycle& b) {
  for (std::size_t j = 0; j < a.values.size(); ++j) a.values[j] = a.A.mul[a.values[j]][b.values[j]];
  return a;
}

// value of the span's cocycle on the whole simplex
Id top_value(const CocycleSpan& s, int k, Id u) {
  return s.K->value(k, s.phi.f[k][u], (1u << (k + 1)) - 1);
}

}  // namespace

TEST(EilenbergMacLane, SizesMatchBruteForce) {
  for (auto [A, n, D] : {std::tuple{cyclic(2), 1, 4}, {cyclic(2), 2, 5}, {cyclic(3), 1, 4},
                         {cyclic(3), 2, 4}, {direct_product(cyclic(2), cyclic(2)), 2, 4}}) {
    auto K = em_space(A, n, D);
    EXPECT_TRUE(validate(*K.group.x).empty());
    for (int k = 0; k <= D; ++k)
      EXPECT_EQ(K.group.x->size[k], count_cocycles_brute(A, n, k)) << "n=" << n << " k=" << k;
  }
  auto K = em_space(cyclic(2), 2, 4);
  EXPECT_EQ(K.group.x->size, (std::vector<Id>{1, 1, 2, 8, 64}));
}

TEST(EilenbergMacLane, NotAbelianIsRejected) {
  auto s3 = permutation_group({{1, 0, 2}, {1, 2, 0}}, "S3");
  EXPECT_THROW(em_space(s3, 1, 2), InputError);
}

TEST(EilenbergMacLane, CoskeletalAboveDegree) {
  auto K = em_space(cyclic(2), 1, 4);
  ASSERT_TRUE(K.group.x->cosk.has_value());
  EXPECT_EQ(*K.group.x->cosk, 2);
  EXPECT_TRUE(classify_object(K.group.x, 1).passed());
}

TEST(EilenbergMacLane, WbarIsNextSpace) {
  for (auto [A, n, D] : {std::tuple{cyclic(2), 1, 4}, {cyclic(3), 1, 3}, {cyclic(2), 0, 3}}) {
    auto iso = wbar_em_iso(A, n, D);
    for (int k = 0; k <= D; ++k) EXPECT_EQ(iso.wbar.x->size[k], iso.target.group.x->size[k]);
    EXPECT_TRUE(validate_map(iso.map).empty());
  }
}

TEST(GroupCocycles, Fixtures) {
  EXPECT_EQ(check_group_cocycle(triple_product_z2()), "");
  EXPECT_EQ(check_group_cocycle(carry_cocycle_z4()), "");
  EXPECT_EQ(check_group_cocycle(carry_z3()), "");
  auto bad = GroupCocycle::zero(cyclic(2), cyclic(2), 3);
  bad.values[0] = 1;
  EXPECT_NE(check_group_cocycle(bad), "");
  auto notclosed = GroupCocycle::zero(cyclic(3), cyclic(3), 2);
  notclosed.values[1 + 3 * 1] = 1;
  EXPECT_NE(check_group_cocycle(notclosed), "");
}

TEST(GroupCocycles, Cohomology) {
  auto z = GroupCocycle::zero(cyclic(2), cyclic(2), 3);
  EXPECT_FALSE(cohomologous(z, triple_product_z2()).has_value());
  EXPECT_FALSE(cohomologous(GroupCocycle::zero(cyclic(4), cyclic(2), 3), carry_cocycle_z4()).has_value());
  auto t = carry_z3();
  auto db = coboundary(shifted_cochain());
  EXPECT_EQ(check_group_cocycle(db), "");
  EXPECT_NE(db.values, GroupCocycle::zero(cyclic(3), cyclic(3), 3).values);
  auto found = cohomologous(t, plus(t, db));
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(coboundary(*found).values, db.values);
}

TEST(CocycleSpans, SpanFromGroupCocycle) {
  auto t = triple_product_z2();
  auto s = group_cocycle_as_span(t, 4);
  EXPECT_TRUE(validate_map(s.phi).empty());
  EXPECT_TRUE(classify(s.f, kInfinity, Kind::hypercover).passed());
  // on a 3-simplex of W̄G the cocycle value is c of its three edges
  const SSet& W = *s.f.src;
  Radix r{{2, 2, 2}};
  for (Id w = 0; w < W.size[3]; ++w) {
    std::vector<Id> g{restrict_to(W, 3, w, 0b0011), restrict_to(W, 3, w, 0b0110),
                      restrict_to(W, 3, w, 0b1100)};
    EXPECT_EQ(top_value(s, 3, w), t(g));
  }
  auto bad = GroupCocycle::zero(cyclic(2), cyclic(2), 3);
  bad.values[1] = 1;
  EXPECT_THROW(group_cocycle_as_span(bad, 3), InputError);
}

TEST(CocycleSpans, DoubledEdgeCoverIsHypercover) {
  auto W = wbar_of(cyclic(2), 3);
  auto g = doubled_edge_cover(cyclic(2), W.x);
  EXPECT_EQ(g.src->size[0], 1u);
  EXPECT_EQ(g.src->size[1], 4u);
  EXPECT_TRUE(validate_map(g).empty());
  EXPECT_TRUE(classify(g, kInfinity, Kind::hypercover).passed());
  EXPECT_EQ(classify(g, 1, Kind::hypercover).outcome, Outcome::fail);
}

TEST(CocycleSpans, Equivalence) {
  auto z = group_cocycle_as_span(GroupCocycle::zero(cyclic(2), cyclic(2), 3), 3);
  auto t = group_cocycle_as_span(triple_product_z2(), 3);
  EXPECT_EQ(equivalence_of_cocycles(z, t).outcome, Outcome::fail);
  EXPECT_EQ(equivalence_of_cocycles(t, t).outcome, Outcome::pass);
  auto r = refine_span(t, doubled_edge_cover(cyclic(2), t.f.src));
  auto eq = equivalence_of_cocycles(t, r);
  EXPECT_EQ(eq.outcome, Outcome::pass) << eq.reason;
  EXPECT_TRUE(validate_map(eq.v0).empty());
  EXPECT_TRUE(validate_map(eq.v1).empty());
  // with identity covers, distinct cocycles are never equivalent, even
  // cohomologous ones
  auto c = carry_z3();
  auto cb = plus(c, coboundary(shifted_cochain()));
  auto s0 = group_cocycle_as_span(c, 3), s1 = group_cocycle_as_span(cb, 3);
  EXPECT_EQ(equivalence_of_cocycles(s0, s1).outcome, Outcome::fail);
  EXPECT_EQ(equivalence_of_cocycles(s0, s0).outcome, Outcome::pass);
}

TEST(CocycleSpans, StrictifiedCocycle) {
  auto s = group_cocycle_as_span(product_2cocycle(), 4);
  auto sc = strictify_cocycle(s);
  EXPECT_TRUE(sc.certified);
  EXPECT_TRUE(canonical_is_iso(sc.st));
  auto r = refine_span(s, doubled_edge_cover(cyclic(2), s.f.src));
  auto rc = strictify_cocycle(r);
  EXPECT_TRUE(rc.certified);
  EXPECT_TRUE(validate_map(rc.span.phi).empty());
  EXPECT_TRUE(classify(rc.span.f, 2, Kind::hypercover).outcome != Outcome::fail);
  // the refinement induces a hypercover between the strictifications
  auto g = doubled_edge_cover(cyclic(2), s.f.src);
  auto m = strictification_map(rc.st, sc.st, g);
  EXPECT_TRUE(validate_map(m).empty());
  EXPECT_TRUE(classify(m, kInfinity, Kind::hypercover).outcome != Outcome::fail);
}

TEST(Bundles, UniversalEilenbergMacLaneBundle) {
  auto p = universal_em_bundle(cyclic(2), 2, 4);
  EXPECT_EQ(check_presentation(p), "");
  EXPECT_TRUE(validate_map(p.projection).empty());
  EXPECT_TRUE(classify(p.projection, 1, Kind::stack).outcome != Outcome::fail);
}

TEST(Bundles, TwistedByInversion) {
  std::vector<Table> inv{{0, 1, 2}, {0, 2, 1}};
  auto tu = twisted_universal_bundle(cyclic(2), cyclic(3), inv, 2, 3);
  EXPECT_EQ(check_presentation(tu.bundle), "");
  EXPECT_TRUE(validate(*tu.total.x).empty());
  EXPECT_TRUE(validate(*tu.base.x).empty());
  EXPECT_TRUE(validate_map(tu.bundle.projection).empty());
  for (int k = 0; k <= 3; ++k)
    EXPECT_EQ(tu.total.x->size[k], tu.base.x->size[k] * tu.fibre.group.x->size[k]);
  std::vector<Table> notaut{{0, 1, 2}, {1, 2, 0}};
  EXPECT_THROW(twisted_universal_bundle(cyclic(2), cyclic(3), notaut, 2, 3), InputError);
}

TEST(Bundles, TrivialActionGivesProduct) {
  std::vector<Table> triv{{0, 1, 2}, {0, 1, 2}};
  auto tu = twisted_universal_bundle(cyclic(2), cyclic(3), triv, 1, 2);
  auto W = wbar_of(cyclic(2), 2);
  auto E = universal_em_bundle(cyclic(3), 1, 2);
  auto prod = share(product(*W.x, *E.total).obj);
  EXPECT_EQ(find_iso(tu.total.x, prod).status, SearchStatus::found);
}

TEST(Descent, TrivialAndTripleProduct) {
  for (bool nontrivial : {false, true}) {
    auto c = nontrivial ? triple_product_z2() : GroupCocycle::zero(cyclic(2), cyclic(2), 3);
    auto s = group_cocycle_as_span(c, 4);
    auto d = descend(s);
    const SSet& X = *d.x.tau.src;
    EXPECT_EQ(X.size, (std::vector<Id>{1, 2, 8, 64, 1024}));
    EXPECT_TRUE(d.groupoid.passed());
    EXPECT_TRUE(validate(X).empty());
    auto td = extract_two_group_data(d);
    EXPECT_TRUE(td.torsor);
    EXPECT_TRUE(td.pentagon);
    for (Id b = 0; b < td.zeta.size(); ++b) {
      Id u = td.base.f[3][b];
      EXPECT_EQ(td.zeta[b], top_value(s, 3, u)) << "b=" << b;
    }
    if (!nontrivial)
      for (Id z : td.zeta) EXPECT_EQ(z, 0u);
  }
}

TEST(Descent, OutputsAreNotIsomorphic) {
  auto d0 = descend(group_cocycle_as_span(GroupCocycle::zero(cyclic(2), cyclic(2), 3), 4));
  auto d1 = descend(group_cocycle_as_span(triple_product_z2(), 4));
  auto r = find_iso(d0.x.tau.src, d1.x.tau.src, &d0.x.tau.f, &d1.x.tau.f);
  EXPECT_EQ(r.status, SearchStatus::none);
  auto same = find_iso(d1.x.tau.src, d1.x.tau.src, &d1.x.tau.f, &d1.x.tau.f);
  EXPECT_EQ(same.status, SearchStatus::found);
}

TEST(Descent, ZetaIsMinusCocycle) {
  for (const auto& c : {carry_z3(), carry_cocycle_z4()}) {
    auto s = group_cocycle_as_span(c, 4);
    auto td = extract_two_group_data(descend(s));
    for (Id b = 0; b < td.zeta.size(); ++b)
      EXPECT_EQ(td.zeta[b], c.A.inv[top_value(s, 3, td.base.f[3][b])]);
  }
}

TEST(Descent, RejectsWrongDegree) {
  auto s = group_cocycle_as_span(product_2cocycle(), 4);
  EXPECT_THROW(descend(s), InputError);
  auto t = group_cocycle_as_span(triple_product_z2(), 3);
  EXPECT_THROW(descend(t), InputError);
}
