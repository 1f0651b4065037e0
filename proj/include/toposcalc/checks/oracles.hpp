#pragma once

#include <set>
#include <vector>

#include "toposcalc/category.hpp"
#include "toposcalc/perm_group.hpp"
#include "toposcalc/presheaf.hpp"
#include "toposcalc/site.hpp"
#include "toposcalc/structure.hpp"

// Exhaustive reference implementations. They only use the raw accessors of
// the data types and share no search code with the library.
namespace toposcalc::oracle {

using ArrowList = std::set<int>;
/// Covering sieves per object.
using Covers = std::vector<std::set<ArrowList>>;

/// Components of the arrow graph by breadth-first search.
std::vector<std::vector<int>> components(const Category& cat);

bool right_ore(const Category& cat);

/// Every precomposition-closed subset of arrows into each object.
std::vector<std::vector<ArrowList>> sieves(const Category& cat);

ArrowList pullback(const Category& cat, const ArrowList& s, int h);

bool is_topology(const Category& cat, const Covers& covers);

/// All topologies, by testing every family of sieves that contains the
/// maximal ones. Returns nothing if there are more than `max_sieves` sieves.
std::vector<Covers> all_topologies(const Category& cat, int max_sieves = 18);

/// Intersection of every topology containing the generators.
Covers least_topology(const std::vector<Covers>& topologies, const Covers& generators);

Covers from_topology(const Category& cat, const Topology& t);
Topology to_topology(const Category& cat, const Covers& covers);

/// Non-empty sieves on every object.
Covers nonempty_sieves(const Category& cat);

/// Unique amalgamation of every matching family over every cover.
bool is_sheaf(const Category& cat, const Covers& covers, const Presheaf& f);

/// All bijections that preserve and reflect relations and constants.
std::vector<std::vector<int>> isomorphisms(const Structure& m, const Structure& n);
bool is_isomorphism(const Structure& m, const Structure& n,
                    const std::vector<int>& map);

/// Subgroups as sets of element indices, by testing every subset.
std::vector<std::set<int>> subgroups(const PermGroup& g);
int subgroup_class_count(const PermGroup& g);

}  // namespace toposcalc::oracle
