#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "toposcalc/error.hpp"

namespace toposcalc {

/// A set of morphisms of a fixed category, indexed by morphism index.
using ArrowSet = boost::dynamic_bitset<>;

/// Category as read from a file, before any validation.
struct RawCategory {
  struct Arrow {
    std::string id;
    std::string dom;
    std::string cod;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::map<std::string, std::string> identities;
  /// (g, f, g∘f)
  std::vector<std::array<std::string, 3>> composition;
};

/// One failed law in a raw category description.
struct Violation {
  std::string law;
  std::vector<std::string> morphisms;
  std::string message;
};

class ValidationError : public Error {
 public:
  ValidationError(ErrorKind kind, std::vector<Violation> violations);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct ValidationResult;

/// A finite category with an explicit composition table.
///
/// Objects and morphisms are stored in lexicographic id order, so index
/// order and id order coincide. Instances are immutable once built.
class Category {
 public:
  /// Validates and builds. Throws ValidationError listing every violation.
  static Category build(const RawCategory& raw);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_morphisms() const { return static_cast<int>(arrows_.size()); }

  const std::string& object_id(int c) const { return objects_[c]; }
  const std::string& morphism_id(int f) const { return arrows_[f].id; }
  int dom(int f) const { return arrows_[f].dom; }
  int cod(int f) const { return arrows_[f].cod; }
  int identity(int c) const { return identities_[c]; }
  bool is_identity(int f) const { return identities_[dom(f)] == f; }

  /// g∘f, or -1 when cod(f) != dom(g).
  int compose(int g, int f) const { return table_[g * num_morphisms() + f]; }

  std::optional<int> find_object(const std::string& id) const;
  std::optional<int> find_morphism(const std::string& id) const;
  int object_index(const std::string& id) const;    // throws UnknownObject
  int morphism_index(const std::string& id) const;  // throws MalformedInput

  /// Morphisms with the given codomain, in index order.
  const std::vector<int>& arrows_into(int c) const { return into_[c]; }
  const std::vector<int>& arrows_from(int c) const { return from_[c]; }
  std::vector<int> hom(int a, int b) const;

  ArrowSet empty_set() const { return ArrowSet(arrows_.size()); }

  RawCategory to_raw() const;

  friend bool operator==(const Category& a, const Category& b);
  friend ValidationResult validate_category(const RawCategory& raw);

 private:
  struct Arrow {
    std::string id;
    int dom;
    int cod;
  };
  Category() = default;

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::vector<int> table_;
  std::vector<std::vector<int>> into_;
  std::vector<std::vector<int>> from_;
  std::map<std::string, int> object_index_;
  std::map<std::string, int> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const Category>;

/// Either a valid category or the violations that prevent one.
struct ValidationResult {
  std::optional<Category> category;
  std::vector<Violation> violations;
  bool ok() const { return category.has_value(); }
};

ValidationResult validate_category(const RawCategory& raw);

/// Partition of the objects under the equivalence generated by the arrows.
/// Components are sorted internally and ordered by least object.
std::vector<std::vector<int>> connected_components(const Category& cat);

/// A cospan left: a→target, right: b→target.
struct CospanWitness {
  int target;
  int left;
  int right;
};

struct OreResult {
  bool holds = true;
  std::optional<CospanWitness> witness;
};

OreResult is_right_ore(const Category& cat);

/// Full subcategory on the given objects; ids are preserved.
Category full_subcategory(const Category& cat, const std::vector<int>& objects);
Category full_subcategory(const Category& cat,
                          const std::vector<std::string>& objects);

/// Disjoint union; ids are prefixed with the given tags.
Category coproduct(const Category& a, const std::string& tag_a,
                   const Category& b, const std::string& tag_b);

/// Applies the renaming to every id (objects and morphisms share `rename`).
Category rename_ids(const Category& cat,
                    const std::map<std::string, std::string>& rename);

}  // namespace toposcalc
