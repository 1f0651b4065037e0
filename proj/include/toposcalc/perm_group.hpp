#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toposcalc/structure.hpp"

namespace toposcalc {

/// A permutation as the image index of each point.
using Perm = std::vector<int>;

/// Composition with (g∘h)[i] = g[h[i]].
Perm compose(const Perm& g, const Perm& h);
Perm inverse(const Perm& g);

/// Set of element indices of a group, sorted ascending.
using Subgroup = std::vector<int>;

constexpr int kDefaultGroupBound = 24;

/// A finite permutation group stored as an explicit element list. Element
/// order is kept as given.
class PermGroup {
 public:
  /// Throws MalformedInput for non-permutations or repeated elements, and
  /// LawViolation if the list is not closed or lacks identity or inverses.
  static PermGroup build(std::vector<std::string> points,
                         std::vector<Perm> elements);

  int degree() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  int point_index(const std::string& name) const;  // throws UnknownElement

  int order() const { return static_cast<int>(elements_.size()); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::optional<int> find(const Perm& p) const;

  int identity() const { return identity_; }
  /// Index of element(i) ∘ element(j).
  int multiply(int i, int j) const { return table_[i][j]; }
  int invert(int i) const { return inverses_[i]; }

  /// The subgroup on the given element indices, as a group in its own right.
  PermGroup restrict_to(const Subgroup& members) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    return a.points_ == b.points_ && a.elements_ == b.elements_;
  }

 private:
  PermGroup() = default;

  std::vector<std::string> points_;
  std::vector<Perm> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverses_;
  int identity_ = 0;
};

/// Aut(M), with elements in lexicographic order.
PermGroup automorphisms(const Structure& m);

/// Element indices fixing every entry of the tuple. Throws UnknownElement.
Subgroup stabilizer_indices(const PermGroup& g, const std::vector<int>& tuple);
PermGroup stabilizer(const PermGroup& g, const std::vector<int>& tuple);

/// Orbits of the diagonal action on k-tuples. Each orbit is sorted, and
/// orbits are ordered by their least tuple.
std::vector<std::vector<std::vector<int>>> orbits_on_tuples(const PermGroup& g,
                                                            int k);

/// Smallest subgroup containing `members`.
Subgroup generated_subgroup(const PermGroup& g, const std::vector<int>& members);

/// All subgroups, sorted by order and then by members.
std::vector<Subgroup> all_subgroups(const PermGroup& g, int bound = kDefaultGroupBound);

/// Subgroups grouped into conjugacy classes. Classes are ordered by their
/// first subgroup. Throws GroupTooLarge if |G| exceeds the bound.
std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(
    const PermGroup& g, int bound = kDefaultGroupBound);

}  // namespace toposcalc
