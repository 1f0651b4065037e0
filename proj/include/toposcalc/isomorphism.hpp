#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "toposcalc/structure.hpp"

namespace toposcalc {

/// Finite partial map between universes, as (element of M, element of N)
/// index pairs.
struct PartialIso {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const PartialIso&, const PartialIso&) = default;
};

/// Injective both ways, and preserves and reflects every relation atom and
/// constant whose arguments lie in the domain (resp. image).
bool is_partial_iso(const Structure& m, const Structure& n, const PartialIso& p);

/// A full isomorphism, as the image index of each element of M.
using Isomorphism = std::vector<int>;

/// Alternately extends to the least unmatched element of M and then of N,
/// trying partners in universe order and backtracking on failure.
/// Throws SignatureMismatch.
std::optional<Isomorphism> back_and_forth(const Structure& m, const Structure& n);

/// As above, starting from `seed`. Returns nullopt if the seed itself is not
/// a partial isomorphism.
std::optional<Isomorphism> back_and_forth(const Structure& m, const Structure& n,
                                          const PartialIso& seed);

/// Every isomorphism M → N in lexicographic order of image tables.
std::vector<Isomorphism> all_isomorphisms(const Structure& m, const Structure& n);

/// Whether an isomorphism M → N carries a to b pointwise.
/// Throws LengthMismatch, SignatureMismatch.
bool same_type(const Structure& m, const std::vector<int>& a,
               const Structure& n, const std::vector<int>& b);

struct HomogeneityCheck {
  bool ok = true;
  std::optional<PartialIso> witness;
};

/// Tries every partial isomorphism M → M whose domain contains the
/// constants, smallest domains first.
HomogeneityCheck is_homogeneous(const Structure& m);

}  // namespace toposcalc
