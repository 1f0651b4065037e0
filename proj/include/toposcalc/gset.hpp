#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "toposcalc/category.hpp"
#include "toposcalc/perm_group.hpp"
#include "toposcalc/presheaf.hpp"

namespace toposcalc {

/// A finite left G-set. `act(g, x)` is the index of element(g) · x.
class GSet {
 public:
  /// Throws MalformedInput for bad shapes and LawViolation if identity acts
  /// nontrivially or the action does not respect composition.
  static GSet build(std::shared_ptr<const PermGroup> group,
                    std::vector<std::string> carrier,
                    std::vector<std::vector<int>> action);

  const PermGroup& group() const { return *group_; }
  const std::shared_ptr<const PermGroup>& group_ptr() const { return group_; }
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  int act(int g, int x) const { return action_[g][x]; }

  /// Orbits, each sorted, ordered by least member.
  std::vector<std::vector<int>> orbits() const;

 private:
  GSet() = default;

  std::shared_ptr<const PermGroup> group_;
  std::vector<std::string> carrier_;
  std::vector<std::vector<int>> action_;
};

/// Left coset action G/H; cosets are named c0, c1, ... in order of their
/// least element index.
GSet coset_gset(const std::shared_ptr<const PermGroup>& group, const Subgroup& h);

/// One coset action per conjugacy class of subgroups, taking the first
/// subgroup of each class. Throws GroupTooLarge.
std::vector<GSet> transitive_gsets(const std::shared_ptr<const PermGroup>& group,
                                   int bound = kDefaultGroupBound);

/// The one-object category whose morphisms are the group elements. Morphism
/// ids are "g" followed by the zero-padded element index; g∘h is the group
/// product.
Category group_category(const PermGroup& group);

/// The G-set as a presheaf on group_category, with f acting as x ↦ f⁻¹ · x.
std::pair<CategoryPtr, Presheaf> gset_as_presheaf(const GSet& x);

}  // namespace toposcalc
