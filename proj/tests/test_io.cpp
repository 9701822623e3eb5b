#include <gtest/gtest.h>

#include "simplex/io.hpp"

using namespace simplex;

TEST(Io, ObjectRoundTrip) {
  auto x = nerve(group_as_groupoid(dihedral(3)), 3).x;
  SSet y = sset_from_json(Json::parse(to_json(x).dump()));
  EXPECT_TRUE(same_tables(x, y));
  EXPECT_EQ(x.cosk, y.cosk);
}

TEST(Io, RejectsBrokenIdentities) {
  Json j = to_json(nerve(group_as_groupoid(cyclic(3)), 2).x);
  auto& t = j["faces"]["2,0"];
  std::swap(t[1], t[2]);
  EXPECT_THROW(sset_from_json(j), InputError);
  Json k = to_json(terminal(2));
  k["faces"]["1,0"][0] = 5;
  EXPECT_THROW(sset_from_json(k), InputError);
}

TEST(Io, MapRoundTrip) {
  auto x = share(nerve(group_as_groupoid(cyclic(4)), 2).x);
  SMap f = to_terminal(x);
  SMap g = map_from_json(Json::parse(to_json(f).dump()));
  EXPECT_EQ(f.f, g.f);
  EXPECT_TRUE(same_tables(*f.dst, *g.dst));
  SMap h = map_or_terminal(to_json(*x));
  EXPECT_EQ(h.f, f.f);
}

TEST(Io, GroupsAndGroupoids) {
  for (const auto& g : small_groups()) {
    FinGroup h = group_from_json(to_json(g));
    EXPECT_EQ(h.mul, g.mul);
    EXPECT_EQ(h.inv, g.inv);
  }
  Json bad = to_json(cyclic(3));
  bad["abelian"] = false;
  EXPECT_THROW(group_from_json(bad), InputError);
  Json rows = to_json(cyclic(3));
  rows["mul"][0][0] = 7;
  EXPECT_THROW(group_from_json(rows), InputError);

  Groupoid p = disjoint_union(pair_groupoid(2), group_as_groupoid(cyclic(2)));
  EXPECT_EQ(groupoid_from_json(to_json(p)), p);
}

TEST(Io, Cocycles) {
  auto c = triple_product_z2();
  auto d = cocycle_from_json(to_json(c));
  EXPECT_EQ(d.values, c.values);
  EXPECT_EQ(to_json(c)["values"].size(), 1u);
  Json j = to_json(c);
  j["values"]["(1,1)"] = 1;
  EXPECT_THROW(cocycle_from_json(j), InputError);
}
