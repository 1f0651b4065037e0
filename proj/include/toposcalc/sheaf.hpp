#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toposcalc/presheaf.hpp"
#include "toposcalc/site.hpp"

namespace toposcalc {

/// A family indexed by all morphisms: value at f is an element index of
/// F(dom f), or -1 for arrows outside the indexing sieve.
using Family = std::vector<int>;

/// Calls `visit` for every matching family of `f` over sieve `s` on `c`.
/// Stops early when `visit` returns true.
void for_each_matching_family(const Presheaf& f, int c, const ArrowSet& s,
                              const std::function<bool(const Family&)>& visit);

struct SheafFailure {
  int object = -1;
  ArrowSet cover;
  Family family;
  int amalgamations = 0;
};

struct SheafCheck {
  bool ok = true;
  std::optional<SheafFailure> failure;
};

SheafCheck is_sheaf(const Site& site, const Presheaf& f);

struct Sheafification {
  std::shared_ptr<const Presheaf> sheaf;
  NatTrans unit;
};

/// One plus-construction step.
Sheafification plus_construction(const Site& site,
                                 const std::shared_ptr<const Presheaf>& f);

/// The plus-construction applied twice; the unit is the composite.
Sheafification sheafify(const Site& site,
                        const std::shared_ptr<const Presheaf>& f);
Sheafification sheafify(const Site& site, const Presheaf& f);

/// Elements whose restrictions into `s` form a covering sieve.
Subpresheaf closure(const Site& site, const Presheaf& f, const Subpresheaf& s);

/// The zero subobject, i.e. the closure of the empty subpresheaf.
Subpresheaf zero_subsheaf(const Site& site, const Presheaf& f);

/// F is isomorphic to the initial sheaf.
bool is_zero_sheaf(const Site& site, const Presheaf& f);

/// All closed subpresheaves, ordered by size then membership.
std::vector<Subpresheaf> subsheaves(const Site& site, const Presheaf& f);

bool is_atom(const Site& site, const Presheaf& f);

/// Pointwise image of a natural transformation.
Subpresheaf image(const NatTrans& alpha);

/// Throws NaturalityViolation on a malformed transformation.
bool is_epi(const Site& site, const NatTrans& alpha);

/// True iff every covering sieve is non-empty and connected.
bool has_connected_covers(const Site& site);

/// Zigzag components of the elements. Throws SiteNotLocallyConnected unless
/// has_connected_covers holds.
std::vector<Subpresheaf> connected_components_sheaf(const Site& site,
                                                    const Presheaf& f);
bool is_connected_object(const Site& site, const Presheaf& f);

/// Connectedness with no site precondition: F is non-zero and its only
/// complemented subsheaves are zero and F.
bool is_indecomposable(const Site& site, const Presheaf& f);

/// J is the atomic topology of its category.
bool is_atomic_site(const Site& site);

struct TerminalDecomposition {
  std::shared_ptr<const Presheaf> terminal;
  std::vector<Subpresheaf> atoms;
};

/// Atoms of Sub(1). Throws NotAtomicSite.
TerminalDecomposition terminal_decomposition(const Site& site);

/// Closure of the orbit of x ∈ F(c). Throws UnknownElement.
Subpresheaf generated_subsheaf(const Site& site, const Presheaf& f, int c, int x);

/// Representative atoms of Sh(C, J), one per isomorphism class, found among
/// sheafified quotients of representables.
std::vector<std::shared_ptr<const Presheaf>> enumerate_atoms(const Site& site);

struct CanonicalSite {
  CategoryPtr category;
  Topology topology;
  /// Morphism index of the category → (source atom, target atom, components).
  std::vector<NatTrans> arrows;
  std::vector<bool> arrow_is_epi;
};

/// Full subcategory of the sheaf topos on the given atoms, with the
/// jointly-epimorphic covers. Throws NotAnAtom.
CanonicalSite restricted_canonical_topology(
    const Site& site, const std::vector<std::shared_ptr<const Presheaf>>& atoms);

}  // namespace toposcalc
