#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "toposcalc/category.hpp"

using namespace toposcalc;

namespace {

RawCategory raw(const std::string& name) {
  return parse_raw_category(read_json_file(fixtures::path("categories/" + name + ".json")));
}

bool has_law(const ValidationResult& v, const std::string& law) {
  return std::any_of(v.violations.begin(), v.violations.end(),
                     [&](const Violation& x) { return x.law == law; });
}

}  // namespace

TEST(Validate, TerminalIsValid) {
  auto v = validate_category(raw("terminal"));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.category->num_objects(), 1);
  EXPECT_EQ(v.category->num_morphisms(), 1);
}

TEST(Validate, Z2IsValid) {
  auto v = validate_category(raw("z2"));
  ASSERT_TRUE(v.ok());
  const Category& c = *v.category;
  int g = c.morphism_index("g");
  EXPECT_EQ(c.compose(g, g), c.morphism_index("e"));
}

TEST(Validate, MistypedCompositeIsTotalityViolation) {
  RawCategory r = raw("v");
  // f : x -> y and g : z -> y are not composable.
  r.composition.push_back({"g", "f", "g"});
  auto v = validate_category(r);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_law(v, "totality"));
}

TEST(Validate, NonAssociativeTable) {
  RawCategory r;
  r.objects = {"*"};
  r.morphisms = {{"e", "*", "*"}, {"a", "*", "*"}, {"b", "*", "*"}};
  r.identities = {{"*", "e"}};
  r.composition = {{"a", "a", "b"}, {"a", "b", "a"}, {"b", "a", "b"}, {"b", "b", "a"}};
  auto v = validate_category(r);
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_law(v, "associativity"));
  EXPECT_THROW(Category::build(r), ValidationError);
}

TEST(Components, Discrete2) {
  auto c = fixtures::category("discrete2");
  EXPECT_EQ(fixtures::object_sets(*c, connected_components(*c)),
            (std::set<std::set<std::string>>{{"a"}, {"b"}}));
}

TEST(Components, VIsConnected) {
  auto c = fixtures::category("v");
  EXPECT_EQ(fixtures::object_sets(*c, connected_components(*c)),
            (std::set<std::set<std::string>>{{"x", "y", "z"}}));
}

TEST(Components, VPlusTerminal) {
  auto c = fixtures::category("v_plus_terminal");
  EXPECT_EQ(connected_components(*c).size(), 2u);
}

TEST(Ore, GroupZ2Holds) { EXPECT_TRUE(is_right_ore(*fixtures::category("z2")).holds); }

TEST(Ore, DiamondHolds) { EXPECT_TRUE(is_right_ore(*fixtures::category("diamond")).holds); }

TEST(Ore, VFailsWithCospanWitness) {
  auto c = fixtures::category("v");
  auto r = is_right_ore(*c);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(c->object_id(r.witness->target), "y");
  EXPECT_EQ(c->morphism_id(r.witness->left), "f");
  EXPECT_EQ(c->morphism_id(r.witness->right), "g");
}

TEST(FullSubcategory, AllObjectsIsIdentity) {
  auto c = fixtures::category("diamond");
  std::vector<int> all(c->num_objects());
  for (int i = 0; i < c->num_objects(); ++i) all[i] = i;
  EXPECT_EQ(full_subcategory(*c, all), *c);
}

TEST(FullSubcategory, VOnEndsIsDiscrete) {
  auto c = fixtures::category("v");
  Category sub = full_subcategory(*c, std::vector<std::string>{"x", "z"});
  EXPECT_EQ(sub.num_objects(), 2);
  EXPECT_EQ(sub.num_morphisms(), 2);
  EXPECT_EQ(connected_components(sub).size(), 2u);
}

TEST(FullSubcategory, DiamondEndsIsArrow) {
  auto c = fixtures::category("diamond");
  Category sub = full_subcategory(*c, std::vector<std::string>{"0", "1"});
  EXPECT_EQ(sub.num_objects(), 2);
  EXPECT_EQ(sub.num_morphisms(), 3);
  EXPECT_EQ(sub.hom(sub.object_index("0"), sub.object_index("1")).size(), 1u);
  EXPECT_TRUE(sub.hom(sub.object_index("1"), sub.object_index("0")).empty());
}
