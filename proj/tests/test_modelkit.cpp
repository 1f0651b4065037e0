#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "toposcalc/formula.hpp"
#include "toposcalc/isomorphism.hpp"

using namespace toposcalc;

namespace {

const Formula kHasSuccessor = Formula::exists({"y"}, Formula::rel("R", {"a", "y"}));

}  // namespace

TEST(Eval, TrueAlways) {
  EXPECT_TRUE(eval(fixtures::structure("p3"), Formula::top(), {}));
}

TEST(Eval, CycleHasSuccessors) {
  Structure c3 = fixtures::structure("c3");
  for (int a = 0; a < c3.size(); ++a) EXPECT_TRUE(eval(c3, kHasSuccessor, {{"a", a}}));
}

TEST(Eval, PathEndHasNoSuccessor) {
  Structure p3 = fixtures::structure("p3");
  EXPECT_FALSE(eval(p3, kHasSuccessor, {{"a", p3.element_index("2")}}));
}

TEST(Eval, Errors) {
  Structure p3 = fixtures::structure("p3");
  EXPECT_THROW(eval(p3, kHasSuccessor, {}), Error);
  try {
    eval(p3, Formula::rel("R", {"a"}), {{"a", 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityMismatch);
  }
}

TEST(Sequent, TopEntailsTop) {
  EXPECT_TRUE(satisfies_sequent(fixtures::structure("c3"), {{}, Formula::top(), Formula::top()}).ok);
}

TEST(Sequent, EdgeContinues) {
  Sequent s{{"x", "y"},
            Formula::rel("R", {"x", "y"}),
            Formula::exists({"z"}, Formula::rel("R", {"y", "z"}))};
  EXPECT_TRUE(satisfies_sequent(fixtures::structure("c3"), s).ok);
  Structure p3 = fixtures::structure("p3");
  auto r = satisfies_sequent(p3, s);
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(*r.counterexample,
            (std::vector<int>{p3.element_index("1"), p3.element_index("2")}));
}

TEST(Cardinality, Examples) {
  auto holds = [](int n, const char* name) {
    Structure m = fixtures::structure(name);
    auto [lower, upper] = cardinality_sequents(n, m.signature());
    return std::pair{satisfies_sequent(m, lower).ok, satisfies_sequent(m, upper).ok};
  };
  EXPECT_EQ(holds(1, "pure1"), (std::pair{true, true}));
  EXPECT_EQ(holds(3, "c3"), (std::pair{true, true}));
  EXPECT_FALSE(holds(3, "c4").second);
  EXPECT_FALSE(holds(2, "pure1").first);
  EXPECT_THROW(cardinality_sequents(0, {}), Error);
}

TEST(BackAndForth, SelfGivesIsomorphism) {
  Structure k3 = fixtures::structure("k3");
  auto iso = back_and_forth(k3, k3);
  ASSERT_TRUE(iso);
  EXPECT_EQ(all_isomorphisms(k3, k3).size(), 6u);
}

TEST(BackAndForth, CycleVersusPath) {
  EXPECT_FALSE(back_and_forth(fixtures::structure("c3"), fixtures::structure("p3")));
}

TEST(BackAndForth, Relabeled) {
  Structure c3 = fixtures::structure("c3");
  Structure r = fixtures::structure("c3_relabeled");
  auto iso = back_and_forth(c3, r);
  ASSERT_TRUE(iso);
  for (const auto& t : c3.relation("R")) {
    EXPECT_TRUE(r.holds("R", {(*iso)[t[0]], (*iso)[t[1]]}));
  }
  EXPECT_EQ(all_isomorphisms(c3, r).size(), 3u);
}

TEST(SameType, Examples) {
  Structure pure3 = fixtures::structure("pure3");
  EXPECT_TRUE(same_type(pure3, {0, 1}, pure3, {0, 1}));
  EXPECT_TRUE(same_type(pure3, {0, 1}, pure3, {2, 0}));
  EXPECT_TRUE(same_type(pure3, {1, 2}, pure3, {1, 0}));
  Structure lin3 = fixtures::structure("lin3");
  EXPECT_FALSE(same_type(lin3, {0}, lin3, {1}));
  EXPECT_THROW(same_type(lin3, {0}, lin3, {0, 1}), Error);
}

TEST(Homogeneity, Examples) {
  EXPECT_TRUE(is_homogeneous(fixtures::structure("pure3")).ok);
  EXPECT_TRUE(is_homogeneous(fixtures::structure("k3")).ok);
  auto lin2 = is_homogeneous(fixtures::structure("lin2"));
  ASSERT_FALSE(lin2.ok);
  ASSERT_TRUE(lin2.witness);
  EXPECT_EQ(lin2.witness->pairs, (std::vector<std::pair<int, int>>{{0, 1}}));
}
