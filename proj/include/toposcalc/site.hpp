#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toposcalc/category.hpp"

namespace toposcalc {

/// Deterministic order on sieves of one category: by size, then by the
/// sorted list of morphism indices.
struct SieveLess {
  bool operator()(const ArrowSet& a, const ArrowSet& b) const;
};

using SieveSet = std::set<ArrowSet, SieveLess>;

/// A sieve: arrows with common codomain `base`, closed under precomposition.
struct Sieve {
  int base = 0;
  ArrowSet arrows;

  friend bool operator==(const Sieve& a, const Sieve& b) {
    return a.base == b.base && a.arrows == b.arrows;
  }
};

/// Covering sieves per object, indexed by object index.
struct Topology {
  std::vector<SieveSet> covers;

  bool covers_sieve(int c, const ArrowSet& s) const {
    return covers[c].count(s) > 0;
  }
  /// Pointwise inclusion.
  bool refines(const Topology& other) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.covers == b.covers;
  }
};

struct Site {
  CategoryPtr category;
  Topology topology;

  const Category& cat() const { return *category; }
};

std::vector<int> to_indices(const ArrowSet& s);

bool is_sieve(const Category& cat, int base, const ArrowSet& arrows);

/// Closes a set of arrows into `base` under precomposition.
ArrowSet generated_sieve(const Category& cat, int base,
                         const std::vector<int>& generators);

ArrowSet maximal_sieve(const Category& cat, int c);

/// All sieves on `c`, in SieveLess order.
std::vector<ArrowSet> enumerate_sieves(const Category& cat, int c);

/// {g | h∘g ∈ S} for S a sieve on cod(h). Throws BaseMismatch.
ArrowSet pullback_sieve(const Category& cat, const Sieve& sieve, int h);

struct TopologyCheck {
  bool ok = true;
  std::string axiom;  // "maximality", "stability" or "transitivity"
  int object = -1;
  std::optional<ArrowSet> sieve;
  std::optional<ArrowSet> cover;  // the witnessing cover for transitivity
  int arrow = -1;                 // the pullback arrow for stability
};

TopologyCheck is_topology(const Category& cat, const Topology& topology);

Topology trivial_topology(const Category& cat);
Topology degenerate_topology(const Category& cat);
Topology nonempty_sieve_family(const Category& cat);

/// Least topology containing the generators.
Topology saturate(const Category& cat, const std::vector<Sieve>& generators);

/// Every covering sieve of a topology, as generator input for saturate.
std::vector<Sieve> all_covers(const Topology& topology);

/// Least topology in which every non-empty sieve covers.
Topology atomic_topology(const Category& cat);

/// Objects covered by the empty sieve.
std::vector<int> empty_covered_objects(const Category& cat,
                                       const Topology& topology);
/// The sheaf topos is trivial: the empty sieve covers every object.
bool is_trivial_topos(const Category& cat, const Topology& topology);

/// Topology induced on a full subcategory: R covers iff the sieve it
/// generates in the ambient category covers.
Topology induced_topology(const Category& cat, const Topology& topology,
                          const Category& sub);

/// The alternative reading: R covers iff some covering H of the ambient
/// category has H ∩ arr(sub) = R.
Topology induced_topology_by_restriction(const Category& cat,
                                         const Topology& topology,
                                         const Category& sub);

struct DenseReduction {
  std::vector<int> retained;  // object indices of the input category
  Category sub;
  Topology topology;
};

/// Restricts to the objects not covered by the empty sieve in the atomic
/// topology. Throws std::logic_error if a guaranteed postcondition fails.
DenseReduction reduce_to_dense(const Category& cat);

/// Unions of connected components, ordered by size then lexicographically.
std::vector<std::vector<int>> enumerate_ideals(const Category& cat);

/// True iff the sieve is non-empty and connected as a full subcategory of
/// the slice over its base.
bool sieve_is_connected(const Category& cat, const Sieve& sieve);

}  // namespace toposcalc
