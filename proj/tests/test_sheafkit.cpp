#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "toposcalc/sheaf.hpp"

using namespace toposcalc;

namespace {

std::shared_ptr<const Presheaf> share(Presheaf p) {
  return std::make_shared<const Presheaf>(std::move(p));
}

Site with(CategoryPtr c, Topology t) { return {std::move(c), std::move(t)}; }

}  // namespace

TEST(Yoneda, Terminal) {
  auto c = fixtures::category("terminal");
  Presheaf y = yoneda(c, 0);
  EXPECT_EQ(y.size(0), 1);
}

TEST(Yoneda, ArrowTarget) {
  auto c = fixtures::category("arrow");
  Presheaf y = yoneda(c, c->object_index("1"));
  EXPECT_EQ(y.elements(c->object_index("1")), (std::vector<std::string>{"i1"}));
  EXPECT_EQ(y.elements(c->object_index("0")), (std::vector<std::string>{"u"}));
}

TEST(Yoneda, Z2IsRegular) {
  auto c = fixtures::category("z2");
  Site s = fixtures::site("z2_atomic");
  Presheaf y = yoneda(c, 0);
  EXPECT_EQ(y.size(0), 2);
  EXPECT_TRUE(are_isomorphic(y, fixtures::presheaf(s, "z2_regular")));
}

TEST(Constant, Sizes) {
  auto c = fixtures::category("arrow");
  EXPECT_EQ(constant_presheaf(c, {}).size(0), 0);
  EXPECT_EQ(constant_presheaf(c, {"*"}).size(1), 1);
  Presheaf two = constant_presheaf(c, {"0", "1"});
  int u = c->morphism_index("u");
  EXPECT_EQ(two.act(u, 0), 0);
  EXPECT_EQ(two.act(u, 1), 1);
}

TEST(IsSheaf, TrivialTopologyAcceptsAll) {
  Site s = fixtures::site("arrow_trivial");
  EXPECT_TRUE(is_sheaf(s, fixtures::presheaf(fixtures::site("arrow_atomic"), "arrow_pq")).ok);
}

TEST(IsSheaf, Z2SetsAreSheaves) {
  Site s = fixtures::site("z2_atomic");
  EXPECT_TRUE(is_sheaf(s, fixtures::presheaf(s, "z2_regular")).ok);
  EXPECT_TRUE(is_sheaf(s, fixtures::presheaf(s, "z2_two_points")).ok);
}

TEST(IsSheaf, ConstantTwoOnArrow) {
  Site s = fixtures::site("arrow_atomic");
  EXPECT_TRUE(is_sheaf(s, constant_presheaf(s.category, {"0", "1"})).ok);
}

TEST(IsSheaf, ConstantTwoFailsWithEmptyCover) {
  Site s = fixtures::site("discrete2_b_empty");
  auto r = is_sheaf(s, constant_presheaf(s.category, {"0", "1"}));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(s.cat().object_id(r.failure->object), "b");
  EXPECT_TRUE(r.failure->cover.none());
  EXPECT_EQ(r.failure->amalgamations, 2);
}

TEST(Sheafify, SheafIsFixed) {
  Site s = fixtures::site("z2_atomic");
  auto a = sheafify(s, fixtures::presheaf(s, "z2_regular"));
  EXPECT_TRUE(is_isomorphism(a.unit));
}

TEST(Sheafify, ArrowPQCollapses) {
  Site s = fixtures::site("arrow_atomic");
  auto a = sheafify(s, fixtures::presheaf(s, "arrow_pq"));
  EXPECT_EQ(a.sheaf->size(0), 1);
  EXPECT_EQ(a.sheaf->size(1), 1);
  EXPECT_TRUE(is_sheaf(s, *a.sheaf).ok);
}

TEST(Sheafify, DegenerateGivesTerminal) {
  auto c = fixtures::category("v");
  Site s = with(c, degenerate_topology(*c));
  auto a = sheafify(s, yoneda(c, c->object_index("y")));
  for (int o = 0; o < c->num_objects(); ++o) EXPECT_EQ(a.sheaf->size(o), 1);
}

TEST(Closure, WholeAndEmpty) {
  Site s = fixtures::site("arrow_atomic");
  Presheaf f = fixtures::presheaf(s, "arrow_pq");
  EXPECT_EQ(closure(s, f, full_subpresheaf(f)), full_subpresheaf(f));
  EXPECT_EQ(closure(s, f, empty_subpresheaf(f)), empty_subpresheaf(f));
}

TEST(Closure, SourcePartOfRepresentable) {
  Site s = fixtures::site("arrow_atomic");
  Presheaf y = yoneda(s.category, s.cat().object_index("1"));
  Subpresheaf part = empty_subpresheaf(y);
  part.members[s.cat().object_index("0")][0] = true;
  EXPECT_EQ(closure(s, y, part), full_subpresheaf(y));
}

TEST(Subsheaves, Counts) {
  Site t = fixtures::site("terminal_atomic");
  EXPECT_EQ(subsheaves(t, constant_presheaf(t.category, {"*"})).size(), 2u);
  Site s = fixtures::site("z2_atomic");
  EXPECT_EQ(subsheaves(s, fixtures::presheaf(s, "z2_regular")).size(), 2u);
  EXPECT_EQ(subsheaves(s, fixtures::presheaf(s, "z2_two_points")).size(), 4u);
}

TEST(Atom, Examples) {
  Site s = fixtures::site("z2_atomic");
  EXPECT_TRUE(is_atom(s, fixtures::presheaf(s, "z2_regular")));
  EXPECT_FALSE(is_atom(s, fixtures::presheaf(s, "z2_two_points")));
  EXPECT_FALSE(is_atom(s, constant_presheaf(s.category, {})));
}

TEST(Epi, Examples) {
  Site s = fixtures::site("arrow_atomic");
  auto c = s.category;
  auto y0 = share(yoneda(c, c->object_index("0")));
  auto y1 = share(yoneda(c, c->object_index("1")));
  auto to_y1 = natural_transformations(y0, y1);
  ASSERT_EQ(to_y1.size(), 1u);
  EXPECT_TRUE(is_epi(s, to_y1[0]));
  auto ident = natural_transformations(y1, y1);
  ASSERT_EQ(ident.size(), 1u);
  EXPECT_TRUE(is_epi(s, ident[0]));
  auto zero = share(constant_presheaf(c, {}));
  auto from_zero = natural_transformations(zero, y1);
  ASSERT_EQ(from_zero.size(), 1u);
  EXPECT_FALSE(is_epi(s, from_zero[0]));
}

TEST(Components, Examples) {
  Site s = fixtures::site("z2_atomic");
  EXPECT_EQ(connected_components_sheaf(s, fixtures::presheaf(s, "z2_regular")).size(), 1u);
  EXPECT_EQ(connected_components_sheaf(s, fixtures::presheaf(s, "z2_two_points")).size(), 2u);
  EXPECT_TRUE(connected_components_sheaf(s, constant_presheaf(s.category, {})).empty());
}

TEST(Indecomposable, Examples) {
  Site s = fixtures::site("z2_atomic");
  Presheaf reg = fixtures::presheaf(s, "z2_regular");
  EXPECT_TRUE(is_indecomposable(s, reg));
  EXPECT_FALSE(is_indecomposable(s, coproduct(reg, "l", reg, "r")));
  Site d = fixtures::site("diamond_atomic");
  for (int c = 0; c < d.cat().num_objects(); ++c) {
    EXPECT_TRUE(is_indecomposable(d, *sheafify(d, yoneda(d.category, c)).sheaf));
  }
}

TEST(Decomposition, AtomCounts) {
  EXPECT_EQ(terminal_decomposition(fixtures::site("diamond_atomic")).atoms.size(), 1u);
  EXPECT_EQ(terminal_decomposition(fixtures::site("discrete2_atomic")).atoms.size(), 2u);
  EXPECT_EQ(terminal_decomposition(fixtures::site("v_plus_terminal_atomic")).atoms.size(), 1u);
}

TEST(GeneratedSubsheaf, Examples) {
  Site t = fixtures::site("terminal_atomic");
  Presheaf one = constant_presheaf(t.category, {"*"});
  EXPECT_EQ(generated_subsheaf(t, one, 0, 0), full_subpresheaf(one));
  Site s = fixtures::site("z2_atomic");
  Presheaf reg = fixtures::presheaf(s, "z2_regular");
  EXPECT_EQ(generated_subsheaf(s, reg, 0, 0), full_subpresheaf(reg));
  Presheaf two = fixtures::presheaf(s, "z2_two_points");
  EXPECT_EQ(generated_subsheaf(s, two, 0, 0).count(), 1);
}

TEST(Canonical, SingleAtom) {
  Site t = fixtures::site("terminal_atomic");
  auto canon = restricted_canonical_topology(t, {share(constant_presheaf(t.category, {"*"}))});
  EXPECT_EQ(canon.category->num_objects(), 1);
  EXPECT_EQ(canon.topology, trivial_topology(*canon.category));
}

TEST(Canonical, Z2Atoms) {
  Site s = fixtures::site("z2_atomic");
  auto reg = share(fixtures::presheaf(s, "z2_regular"));
  auto pt = share(constant_presheaf(s.category, {"*"}));
  auto canon = restricted_canonical_topology(s, {reg, pt});
  const Category& c = *canon.category;
  EXPECT_EQ(c.num_objects(), 2);
  EXPECT_EQ(c.hom(0, 1).size(), 1u);
  EXPECT_TRUE(c.hom(1, 0).empty());
  for (bool epi : canon.arrow_is_epi) EXPECT_TRUE(epi);
  EXPECT_EQ(canon.topology, nonempty_sieve_family(c));
}

TEST(Canonical, NoAtoms) {
  Site s = fixtures::site("z2_atomic");
  auto canon = restricted_canonical_topology(s, {});
  EXPECT_EQ(canon.category->num_objects(), 0);
  EXPECT_TRUE(canon.topology.covers.empty());
}
