#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposcalc/category.hpp"

namespace toposcalc {

/// A finite-set-valued contravariant functor on a finite category.
///
/// Elements of each F(c) are kept sorted by name; `act(f, x)` maps an element
/// index of F(cod f) to an element index of F(dom f).
class Presheaf {
 public:
  /// Element names per object, and per morphism the action by index into
  /// those name lists. Names are re-sorted; functoriality is validated.
  static Presheaf build(CategoryPtr cat,
                        std::vector<std::vector<std::string>> elements,
                        std::vector<std::vector<int>> actions);

  /// Same, but from named data as it appears in files.
  static Presheaf from_named(
      CategoryPtr cat,
      const std::map<std::string, std::vector<std::string>>& sets,
      const std::map<std::string, std::map<std::string, std::string>>& actions);

  const CategoryPtr& category() const { return cat_; }
  const Category& cat() const { return *cat_; }

  int size(int c) const { return static_cast<int>(elements_[c].size()); }
  int total_size() const;
  const std::string& element(int c, int x) const { return elements_[c][x]; }
  const std::vector<std::string>& elements(int c) const { return elements_[c]; }
  std::optional<int> find_element(int c, const std::string& name) const;

  int act(int f, int x) const { return actions_[f][x]; }
  const std::vector<int>& action(int f) const { return actions_[f]; }

  friend bool operator==(const Presheaf& a, const Presheaf& b) {
    return a.elements_ == b.elements_ && a.actions_ == b.actions_;
  }

 private:
  Presheaf() = default;

  CategoryPtr cat_;
  std::vector<std::vector<std::string>> elements_;
  std::vector<std::vector<int>> actions_;
};

/// Components indexed by object, mapping element indices of the source to
/// element indices of the target.
struct NatTrans {
  std::shared_ptr<const Presheaf> source;
  std::shared_ptr<const Presheaf> target;
  std::vector<std::vector<int>> components;
};

/// Throws NaturalityViolation if a square fails to commute.
void check_naturality(const NatTrans& alpha);

bool is_isomorphism(const NatTrans& alpha);

/// Membership flags per object.
struct Subpresheaf {
  std::vector<std::vector<bool>> members;

  bool contains(int c, int x) const { return members[c][x]; }
  int count() const;

  friend bool operator==(const Subpresheaf&, const Subpresheaf&) = default;
  friend auto operator<=>(const Subpresheaf&, const Subpresheaf&) = default;
};

Subpresheaf empty_subpresheaf(const Presheaf& f);
Subpresheaf full_subpresheaf(const Presheaf& f);
bool is_subpresheaf(const Presheaf& f, const Subpresheaf& s);
bool is_subset(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf unite(const Subpresheaf& a, const Subpresheaf& b);
Subpresheaf intersect(const Subpresheaf& a, const Subpresheaf& b);

/// The subpresheaf as a presheaf in its own right.
Presheaf restrict_to(const Presheaf& f, const Subpresheaf& s);

/// F(d) = C(d, c), acting by precomposition.
Presheaf yoneda(CategoryPtr cat, int c);

Presheaf constant_presheaf(CategoryPtr cat,
                           const std::vector<std::string>& values);

/// Objectwise disjoint union; element names get the given tags.
Presheaf coproduct(const Presheaf& a, const std::string& tag_a,
                   const Presheaf& b, const std::string& tag_b);

/// Every natural transformation source → target, in lexicographic order of
/// component tables.
std::vector<NatTrans> natural_transformations(
    const std::shared_ptr<const Presheaf>& source,
    const std::shared_ptr<const Presheaf>& target);

std::optional<NatTrans> find_isomorphism(
    const std::shared_ptr<const Presheaf>& a,
    const std::shared_ptr<const Presheaf>& b);

bool are_isomorphic(const Presheaf& a, const Presheaf& b);

/// Every quotient of `f` by a congruence (fibrewise equivalence compatible
/// with the actions). Classes are named by their least member.
std::vector<Presheaf> quotients(const Presheaf& f);

}  // namespace toposcalc
