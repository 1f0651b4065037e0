#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "toposcalc/gset.hpp"
#include "toposcalc/sheaf.hpp"

using namespace toposcalc;

TEST(Automorphisms, Examples) {
  EXPECT_EQ(automorphisms(fixtures::structure("pure3")).order(), 6);
  EXPECT_EQ(automorphisms(fixtures::structure("c3")).order(), 3);
  EXPECT_EQ(automorphisms(fixtures::structure("lin3")).order(), 1);
}

TEST(Stabilizer, Examples) {
  PermGroup s3 = automorphisms(fixtures::structure("pure3"));
  EXPECT_EQ(stabilizer(s3, {}).order(), 6);
  PermGroup fix0 = stabilizer(s3, {0});
  EXPECT_EQ(fix0.order(), 2);
  for (const auto& p : fix0.elements()) EXPECT_EQ(p[0], 0);
  EXPECT_EQ(stabilizer(automorphisms(fixtures::structure("c3")), {0}).order(), 1);
}

TEST(Orbits, Examples) {
  PermGroup s3 = automorphisms(fixtures::structure("pure3"));
  EXPECT_EQ(orbits_on_tuples(s3, 0).size(), 1u);
  auto pairs = orbits_on_tuples(s3, 2);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].size() + pairs[1].size(), 9u);
  PermGroup trivial = automorphisms(fixtures::structure("lin3"));
  EXPECT_EQ(orbits_on_tuples(trivial, 1).size(), 3u);
}

TEST(SubgroupClasses, Examples) {
  EXPECT_EQ(subgroup_conjugacy_classes(*fixtures::group("trivial")).size(), 1u);
  EXPECT_EQ(subgroup_conjugacy_classes(*fixtures::group("z2")).size(), 2u);
  auto s3 = subgroup_conjugacy_classes(*fixtures::group("s3"));
  ASSERT_EQ(s3.size(), 4u);
  std::multiset<std::size_t> class_sizes;
  for (const auto& c : s3) class_sizes.insert(c.size());
  EXPECT_EQ(class_sizes, (std::multiset<std::size_t>{1, 1, 1, 3}));
  EXPECT_EQ(subgroup_conjugacy_classes(*fixtures::group("z2xz2")).size(), 5u);
}

TEST(SubgroupClasses, BoundIsEnforced) {
  try {
    subgroup_conjugacy_classes(*fixtures::group("s3"), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupTooLarge);
  }
}

TEST(TransitiveGSets, Sizes) {
  EXPECT_EQ(transitive_gsets(fixtures::group("trivial")).size(), 1u);
  auto z2 = transitive_gsets(fixtures::group("z2"));
  std::multiset<int> z2_sizes;
  for (const auto& x : z2) z2_sizes.insert(x.size());
  EXPECT_EQ(z2_sizes, (std::multiset<int>{1, 2}));
  std::multiset<int> s3_sizes;
  for (const auto& x : transitive_gsets(fixtures::group("s3"))) s3_sizes.insert(x.size());
  EXPECT_EQ(s3_sizes, (std::multiset<int>{1, 2, 3, 6}));
}

TEST(AsPresheaf, Examples) {
  auto z2 = fixtures::group("z2");
  GSet point = coset_gset(z2, generated_subgroup(*z2, {0, 1}));
  auto [pc, pp] = gset_as_presheaf(point);
  EXPECT_EQ(pp.size(0), 1);

  auto [rc, rp] = gset_as_presheaf(fixtures::gset("z2_regular"));
  EXPECT_TRUE(are_isomorphic(rp, yoneda(rc, 0)));

  auto [tc, tp] = gset_as_presheaf(fixtures::gset("z2_two_points"));
  EXPECT_TRUE(are_isomorphic(tp, constant_presheaf(tc, {"0", "1"})));
}

TEST(AsPresheaf, TransitiveAreAtoms) {
  for (const char* name : {"z2", "z3", "s3"}) {
    for (const auto& x : transitive_gsets(fixtures::group(name))) {
      auto [c, p] = gset_as_presheaf(x);
      EXPECT_TRUE(is_atom({c, atomic_topology(*c)}, p)) << name << " size " << x.size();
    }
  }
}
