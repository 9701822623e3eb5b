#include <gtest/gtest.h>

#include <random>

#include "simplex/kan.hpp"
#include "simplex/nerve.hpp"

using namespace simplex;

namespace {

SSetPtr group_nerve(const FinGroup& g, int trunc) {
  return share(nerve(group_as_groupoid(g), trunc).x);
}

// Brute force: count tuples of simplices on the nondegenerate faces of the
// horn that satisfy every face relation.
std::size_t brute_horn_count(const SSet& x, int k, int i) {
  Shape s = Shape::horn(k, i);
  std::size_t count = 0;
  std::vector<Id> h(s.faces.size(), 0);
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == s.faces.size()) {
      ++count;
      return;
    }
    unsigned F = s.faces[j];
    int m = std::popcount(F) - 1;
    for (Id c = 0; c < x.size[m]; ++c) {
      bool ok = true;
      auto vs = vertices_of(F);
      for (int r = 0; r <= m && ok && m > 0; ++r) {
        unsigned G = F & ~(1u << vs[r]);
        std::size_t gj = std::find(s.faces.begin(), s.faces.end(), G) - s.faces.begin();
        ok = x.d[m][r][c] == h[gj];
      }
      if (!ok) continue;
      h[j] = c;
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST(Hom, SimplexIsYoneda) {
  auto n = group_nerve(cyclic(2), 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(hom(Shape::simplex(k), *n).maps.size(), n->size[k]);
}

TEST(Hom, BoundaryOfEdgeIsPairsOfVertices) {
  auto c = cech_nerve({0, 0, 1, 1, 1}, 2, 2);
  EXPECT_EQ(hom(Shape::boundary(1), *c.nerve).maps.size(), 25u);
}

TEST(Hom, HornInNerveOfZ3) {
  auto n = group_nerve(cyclic(3), 3);
  EXPECT_EQ(hom(Shape::horn(2, 1), *n).maps.size(), 9u);
  EXPECT_EQ(hom(Shape::horn(3, 0), *n).maps.size(), 27u);
}

TEST(Hom, GeneralSourceAgreesWithShapes) {
  auto n = group_nerve(cyclic(2), 2);
  auto s = share(shape_sset(Shape::horn(2, 0), 2).x);
  EXPECT_EQ(hom_sset(s, n).size(), hom(Shape::horn(2, 0), *n).maps.size());
}

TEST(HornObject, NerveOfZ2LowLevel) {
  auto n = group_nerve(cyclic(2), 3);
  EXPECT_EQ(horn_object(to_terminal(n), 1, 0).size(), 1u);
  EXPECT_EQ(horn_object(to_terminal(n), 1, 1).size(), 1u);
  EXPECT_EQ(horn_object(to_terminal(n), 2, 1).size(), 4u);
}

TEST(HornObject, CechMatchesBruteForce) {
  auto c = cech_nerve({0, 0, 0}, 1, 3);
  auto r = horn_object(to_terminal(c.nerve), 2, 1);
  EXPECT_EQ(r.size(), 27u);
  EXPECT_EQ(r.size(), brute_horn_count(*c.nerve, 2, 1));
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= k; ++i)
      EXPECT_EQ(horn_object(to_terminal(c.nerve), k, i).size(), brute_horn_count(*c.nerve, k, i));
}

TEST(MatchObject, IdentityIsBijective) {
  auto n = group_nerve(dihedral(3), 3);
  auto id = identity(n);
  for (int k = 0; k <= 3; ++k) {
    auto r = match_object(id, k);
    EXPECT_EQ(r.size(), n->size[k]);
    std::vector<char> hit(r.size(), 0);
    for (Id c : r.compare) hit[c] = 1;
    EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), static_cast<long>(r.size()));
  }
}

TEST(Classify, NerveIsOneGroupoid) {
  auto n = group_nerve(cyclic(2), 3);
  EXPECT_EQ(classify_object(n, 1).outcome, Outcome::pass);
  auto v0 = classify_object(n, 0);
  EXPECT_EQ(v0.outcome, Outcome::fail);
  EXPECT_EQ(v0.witness.k, 1);
}

TEST(Classify, CoskeletonOfTwoPointsIsNotZeroHypercover) {
  auto c = share(coskeleton(constant(2, 0), 0, 2));
  auto v = classify(to_terminal(c), 0, Kind::hypercover);
  EXPECT_EQ(v.outcome, Outcome::fail);
  EXPECT_EQ(v.witness.k, 0);
  // the same object over the point is a 1-hypercover via level 1 ...
  auto w = classify(to_terminal(c), 1, Kind::hypercover);
  EXPECT_EQ(w.outcome, Outcome::pass);
}

TEST(Classify, CechNerveIsHypercover) {
  auto c = cech_nerve({0, 0, 0}, 1, 4);
  EXPECT_EQ(classify(c.aug, kInfinity, Kind::hypercover).outcome, Outcome::pass);
  EXPECT_EQ(classify(c.aug, 1, Kind::hypercover).outcome, Outcome::pass);
  EXPECT_EQ(classify(c.aug, 0, Kind::hypercover).outcome, Outcome::fail);
}

TEST(Classify, InconclusiveWithoutCoskeletalFlag) {
  SSet x = nerve(group_as_groupoid(cyclic(2)), 3).x;
  x.cosk.reset();
  EXPECT_EQ(classify_object(share(x), 1).outcome, Outcome::inconclusive);
}

TEST(Classify, GroupNervesSatisfyHornConditions) {
  for (const auto& g : small_groups()) {
    if (g.order > 6) continue;
    auto n = group_nerve(g, 4);
    EXPECT_EQ(classify_object(n, 1).outcome, Outcome::pass) << g.name;
  }
}

TEST(MuLambda, FactorizationOnFixtures) {
  auto c = cech_nerve({0, 1, 1, 2}, 3, 3);
  auto n = group_nerve(cyclic(3), 3);
  for (int k = 1; k <= 3; ++k)
    for (int i = 0; i <= k; ++i) {
      EXPECT_EQ(check_mu_lambda(c.aug, k, i), "");
      EXPECT_EQ(check_mu_lambda(to_terminal(n), k, i), "");
    }
}

TEST(Stability, CompositeOfCechHypercovers) {
  // {0..5} -> {0,1,2} -> {0}
  auto top = cech_nerve({0, 0, 1, 1, 2, 2}, 3, 3);
  auto low = cech_nerve({0, 0, 0}, 1, 3);
  // lift the first map to Čech nerves: a tuple of points maps to the tuple of images
  // is not needed; compose the augmentation of the outer cover with a constant map
  SMap to_const = top.aug;
  SMap c2{top.aug.dst, share(constant(1, 3)), {}};
  for (int k = 0; k <= 3; ++k) c2.f.emplace_back(3, 0);
  auto r = compose_check(to_const, c2, kInfinity, Kind::stack);
  EXPECT_EQ(r.first.outcome, Outcome::pass);
  (void)low;
}

TEST(Stability, PullbackOfHypercover) {
  auto c = cech_nerve({0, 0, 1, 2, 2}, 3, 3);
  // map from a nerve to the constant object on {0,1,2}: all vertices to 2
  auto n = group_nerve(cyclic(2), 3);
  SMap g{n, c.aug.dst, {}};
  for (int k = 0; k <= 3; ++k) g.f.emplace_back(n->size[k], 2);
  auto r = pullback_check(c.aug, g, 1, Kind::hypercover);
  EXPECT_EQ(r.conclusion.outcome, Outcome::pass);
}

TEST(Stability, HypercoverIsStack) {
  auto c = cech_nerve({0, 1, 1, 2}, 3, 3);
  EXPECT_NO_THROW(hypercover_stack_check(c.aug, 1));
  EXPECT_EQ(classify(c.aug, 1, Kind::stack).outcome, Outcome::pass);
}

TEST(Grothendieck, RoundTrip) {
  for (const auto& g : small_groups()) {
    auto G = group_as_groupoid(g);
    auto x = nerve(G, 2).x;
    EXPECT_EQ(extract_groupoid(x), G) << g.name;
  }
  std::mt19937 rng(3);
  for (int t = 0; t < 5; ++t) {
    auto G = random_groupoid(rng);
    EXPECT_EQ(G.check(), "");
    EXPECT_EQ(extract_groupoid(nerve(G, 2).x), G);
  }
}

TEST(Grothendieck, ExtractionRejectsNonGroupoid) {
  auto c = share(coskeleton(nerve(group_as_groupoid(cyclic(2)), 1).x, 1, 2));
  EXPECT_THROW(extract_groupoid(*c), InputError);
}

TEST(MapSearch, HypercoverOfDiscreteIsCech) {
  // pull a Čech hypercover back along a map of discrete objects; the result
  // is again determined by its vertices
  auto c = cech_nerve({0, 1, 1, 2, 2}, 3, 3);
  auto disc = share(constant(4, 3));
  SMap g{disc, c.aug.dst, {}};
  for (int k = 0; k <= 3; ++k) g.f.push_back({0, 1, 2, 2});
  auto p = pullback(c.aug, g);
  auto P = share(p.obj);
  auto direct = cech_nerve(p.pr2[0], 4, 3);
  auto r = find_iso(P, direct.nerve, &p.pr2, &direct.aug.f);
  EXPECT_EQ(r.status, SearchStatus::found);
}

TEST(MapSearch, NonIsomorphicNerves) {
  auto a = group_nerve(cyclic(4), 3);
  auto b = group_nerve(direct_product(cyclic(2), cyclic(2)), 3);
  EXPECT_EQ(find_iso(a, b).status, SearchStatus::none);
  EXPECT_EQ(find_iso(a, a).status, SearchStatus::found);
}
