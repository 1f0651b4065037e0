#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "toposcalc/site.hpp"

using namespace toposcalc;
using Ids = std::set<std::string>;

namespace {

std::set<Ids> sieve_ids(const Category& cat, const std::vector<ArrowSet>& sieves) {
  std::set<Ids> out;
  for (const auto& s : sieves) out.insert(fixtures::ids(cat, s));
  return out;
}

std::set<Ids> cover_ids(const Category& cat, const Topology& t, const std::string& object) {
  const auto& covers = t.covers[cat.object_index(object)];
  return sieve_ids(cat, {covers.begin(), covers.end()});
}

ArrowSet sieve_of(const Category& cat, const std::string& object, const Ids& gens) {
  std::vector<int> idx;
  for (const auto& g : gens) idx.push_back(cat.morphism_index(g));
  return generated_sieve(cat, cat.object_index(object), idx);
}

}  // namespace

TEST(Sieves, Terminal) {
  auto c = fixtures::category("terminal");
  EXPECT_EQ(sieve_ids(*c, enumerate_sieves(*c, 0)), (std::set<Ids>{{}, {"1"}}));
}

TEST(Sieves, Z2) {
  auto c = fixtures::category("z2");
  EXPECT_EQ(sieve_ids(*c, enumerate_sieves(*c, 0)), (std::set<Ids>{{}, {"e", "g"}}));
}

TEST(Sieves, VAtY) {
  auto c = fixtures::category("v");
  EXPECT_EQ(sieve_ids(*c, enumerate_sieves(*c, c->object_index("y"))),
            (std::set<Ids>{{}, {"f"}, {"g"}, {"f", "g"}, {"f", "g", "iy"}}));
}

TEST(Pullback, AlongIdentity) {
  auto c = fixtures::category("v");
  int y = c->object_index("y");
  ArrowSet s = sieve_of(*c, "y", {"f"});
  EXPECT_EQ(pullback_sieve(*c, {y, s}, c->identity(y)), s);
}

TEST(Pullback, DisjointArrowGivesEmpty) {
  auto c = fixtures::category("v");
  ArrowSet s = sieve_of(*c, "y", {"f"});
  EXPECT_TRUE(pullback_sieve(*c, {c->object_index("y"), s}, c->morphism_index("g")).none());
}

TEST(Pullback, MaximalStaysMaximal) {
  auto c = fixtures::category("diamond");
  for (int h = 0; h < c->num_morphisms(); ++h) {
    int b = c->cod(h);
    EXPECT_EQ(pullback_sieve(*c, {b, maximal_sieve(*c, b)}, h), maximal_sieve(*c, c->dom(h)));
  }
}

TEST(IsTopology, TrivialAndDegenerate) {
  for (const char* name : {"v", "arrow", "z2", "diamond"}) {
    auto c = fixtures::category(name);
    EXPECT_TRUE(is_topology(*c, trivial_topology(*c)).ok) << name;
    EXPECT_TRUE(is_topology(*c, degenerate_topology(*c)).ok) << name;
  }
}

TEST(IsTopology, VWithSingleLegFailsStability) {
  auto c = fixtures::category("v");
  Topology t = trivial_topology(*c);
  t.covers[c->object_index("y")].insert(sieve_of(*c, "y", {"f"}));
  auto r = is_topology(*c, t);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.axiom, "stability");
  ASSERT_TRUE(r.sieve);
  EXPECT_EQ(fixtures::ids(*c, *r.sieve), (Ids{"f"}));
  EXPECT_EQ(c->morphism_id(r.arrow), "g");
}

TEST(Saturate, NoGeneratorsIsTrivial) {
  auto c = fixtures::category("chain3");
  EXPECT_EQ(saturate(*c, {}), trivial_topology(*c));
}

TEST(Saturate, VNonEmptySievesGiveEverything) {
  auto c = fixtures::category("v");
  EXPECT_EQ(saturate(*c, all_covers(nonempty_sieve_family(*c))), degenerate_topology(*c));
}

TEST(Saturate, Z2Maximal) {
  auto c = fixtures::category("z2");
  Topology t = saturate(*c, {{0, maximal_sieve(*c, 0)}});
  EXPECT_EQ(cover_ids(*c, t, "*"), (std::set<Ids>{{"e", "g"}}));
}

TEST(Atomic, Arrow) {
  auto c = fixtures::category("arrow");
  Topology t = atomic_topology(*c);
  EXPECT_EQ(cover_ids(*c, t, "1"), (std::set<Ids>{{"u"}, {"u", "i1"}}));
  EXPECT_EQ(cover_ids(*c, t, "0"), (std::set<Ids>{{"i0"}}));
}

TEST(Atomic, VIsDegenerate) {
  auto c = fixtures::category("v");
  EXPECT_EQ(atomic_topology(*c), degenerate_topology(*c));
  EXPECT_TRUE(is_trivial_topos(*c, atomic_topology(*c)));
}

TEST(Atomic, Terminal) {
  auto c = fixtures::category("terminal");
  EXPECT_EQ(atomic_topology(*c), trivial_topology(*c));
}

TEST(Reduce, OreKeepsEverything) {
  auto c = fixtures::category("diamond");
  auto d = reduce_to_dense(*c);
  EXPECT_EQ(d.retained.size(), 4u);
  EXPECT_EQ(d.topology, atomic_topology(*c));
}

TEST(Reduce, VVanishes) {
  EXPECT_TRUE(reduce_to_dense(*fixtures::category("v")).retained.empty());
}

TEST(Reduce, VPlusTerminalKeepsTerminal) {
  auto c = fixtures::category("v_plus_terminal");
  auto d = reduce_to_dense(*c);
  ASSERT_EQ(d.retained.size(), 1u);
  EXPECT_EQ(c->object_id(d.retained[0]), "t*");
}

TEST(Induced, WholeCategoryGivesSameTopology) {
  auto c = fixtures::category("diamond");
  Topology j = atomic_topology(*c);
  EXPECT_EQ(induced_topology(*c, j, *c), j);
}

TEST(Induced, ArrowOnSource) {
  auto c = fixtures::category("arrow");
  Category sub = full_subcategory(*c, std::vector<std::string>{"0"});
  Topology t = induced_topology(*c, atomic_topology(*c), sub);
  EXPECT_EQ(cover_ids(sub, t, "0"), (std::set<Ids>{{"i0"}}));
}

TEST(Induced, OneComponentOfZ2PlusZ2) {
  auto c = fixtures::category("z2_plus_z2");
  Category sub = full_subcategory(*c, std::vector<std::string>{"l*"});
  EXPECT_EQ(induced_topology(*c, atomic_topology(*c), sub), atomic_topology(sub));
}

TEST(Ideals, ConnectedHasTwo) {
  auto c = fixtures::category("v");
  EXPECT_EQ(enumerate_ideals(*c).size(), 2u);
}

TEST(Ideals, Discrete2HasFour) {
  EXPECT_EQ(enumerate_ideals(*fixtures::category("discrete2")).size(), 4u);
}

TEST(Ideals, TerminalPlusArrow) {
  auto c = std::make_shared<const Category>(
      coproduct(*fixtures::category("terminal"), "A", *fixtures::category("arrow"), "B"));
  auto ideals = enumerate_ideals(*c);
  EXPECT_EQ(fixtures::object_sets(*c, ideals),
            (std::set<Ids>{{}, {"A*"}, {"B0", "B1"}, {"A*", "B0", "B1"}}));
}

TEST(SieveConnected, MaximalAndEmpty) {
  auto c = fixtures::category("v");
  int y = c->object_index("y");
  EXPECT_TRUE(sieve_is_connected(*c, {y, maximal_sieve(*c, y)}));
  EXPECT_FALSE(sieve_is_connected(*c, {y, ArrowSet(c->num_morphisms())}));
  EXPECT_FALSE(sieve_is_connected(*c, {y, sieve_of(*c, "y", {"f", "g"})}));
}

TEST(SieveConnected, OreNonEmptySieves) {
  auto c = fixtures::category("diamond");
  for (int b = 0; b < c->num_objects(); ++b) {
    for (const auto& s : enumerate_sieves(*c, b)) {
      if (s.none()) continue;
      EXPECT_TRUE(sieve_is_connected(*c, {b, s}));
    }
  }
}
