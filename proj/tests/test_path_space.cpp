#include <gtest/gtest.h>

#include "simplex/nerve.hpp"
#include "simplex/path_space.hpp"

using namespace simplex;

namespace {

SSetPtr group_nerve(const FinGroup& g, int trunc) {
  return share(nerve(group_as_groupoid(g), trunc).x);
}

}  // namespace

TEST(PathSpace, NerveOfZ2) {
  auto n = group_nerve(cyclic(2), 4);
  auto p = path_space(to_terminal(n), 1, 2);
  EXPECT_EQ(p.carrier->size[0], 2u);
  EXPECT_EQ(p.carrier->size[1], 2u);
  for (Id e = 0; e < 2; ++e) EXPECT_EQ(p.carrier->d[1][0][e], p.carrier->d[1][1][e]);
  EXPECT_TRUE(validate(*p.carrier).empty());
}

TEST(PathSpace, IdentityGivesConstant) {
  auto c = cech_nerve({0, 0, 1, 1}, 2, 4);
  auto id = identity(c.nerve);
  for (int k = 0; k <= 2; ++k) {
    auto p = path_space(id, k, 2);
    EXPECT_EQ(p.carrier->size[0], c.nerve->size[k]);
    EXPECT_EQ(p.carrier->size[1], c.nerve->size[k]);
    EXPECT_EQ(p.carrier->size[2], c.nerve->size[k]);
    auto a = augment_to_matching(p);
    // π on vertices is the bijection X_k -> M_k(id)
    std::vector<char> hit(a.augmented.minus_one, 0);
    for (Id v : a.pi.f[0]) hit[v] = 1;
    EXPECT_EQ(a.augmented.minus_one, c.nerve->size[k]);
    EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), static_cast<long>(c.nerve->size[k]));
  }
}

TEST(PathSpace, StacksGiveLowerGroupoids) {
  auto n = group_nerve(dihedral(3), 4);
  auto p = path_space(to_terminal(n), 1, 2);
  EXPECT_EQ(classify_object(p.carrier, 0).outcome, Outcome::pass);
  auto q = path_space(to_terminal(n), 0, 3);
  EXPECT_EQ(classify_object(q.carrier, 1).outcome, Outcome::pass);
  auto c = cech_nerve({0, 0, 1, 1, 1}, 2, 4);
  auto r = path_space(c.aug, 1, 3);
  EXPECT_EQ(classify_object(r.carrier, 0).outcome, Outcome::pass);
}

TEST(PathSpace, AugmentationOfHypercover) {
  auto c = cech_nerve({0, 0, 1, 1, 1}, 2, 4);
  auto p = path_space(c.aug, 1, 3);
  auto a = augment_to_matching(p);
  EXPECT_EQ(classify(a.pi, 0, Kind::hypercover).outcome, Outcome::pass);
  // a 0-hypercover is an isomorphism on components
  auto q = pi0(*p.carrier);
  EXPECT_EQ(q.classes, a.augmented.minus_one);
}

TEST(PathSpace, SubsetModelMatchesJoinModel) {
  auto n = group_nerve(cyclic(3), 4);
  auto c = cech_nerve({0, 0, 1, 1, 1}, 2, 4);
  for (int k = 1; k <= 3; ++k)
    for (int l = 0; k + l <= 4; ++l) {
      EXPECT_EQ(check_path_space_models(to_terminal(n), k, l), "") << k << " " << l;
      EXPECT_EQ(check_path_space_models(c.aug, k, l), "") << k << " " << l;
    }
}
