#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "toposcalc/category.hpp"
#include "toposcalc/formula.hpp"
#include "toposcalc/gset.hpp"
#include "toposcalc/perm_group.hpp"
#include "toposcalc/presheaf.hpp"
#include "toposcalc/sheaf.hpp"
#include "toposcalc/site.hpp"
#include "toposcalc/structure.hpp"

namespace toposcalc {

using Json = nlohmann::json;

/// Throws MalformedInput if the file is missing or not JSON.
Json read_json_file(const std::filesystem::path& path);

/// Fields that embed another file accept either the object inline or a path
/// relative to `base`.
Json resolve_embedded(const Json& value, const std::filesystem::path& base);

RawCategory parse_raw_category(const Json& j);
Category parse_category(const Json& j);
Json to_json(const Category& cat);

/// One generated sieve per inner list.
std::vector<Sieve> parse_generators(const Category& cat, const Json& j);
/// Emits every covering sieve in full, arrows sorted.
Json to_json(const Category& cat, const Topology& topology);
Json sieve_to_json(const Category& cat, const ArrowSet& arrows);

/// The topology is the least one containing the listed sieves. The strings
/// "atomic", "trivial" and "degenerate" stand for those topologies.
Site parse_site(const Json& j, const std::filesystem::path& base);
Site load_site(const std::filesystem::path& path);

Presheaf parse_presheaf(CategoryPtr cat, const Json& j);
Json to_json(const Presheaf& f);
/// {obj: {elem: image}} for the components of a natural transformation.
Json components_to_json(const NatTrans& alpha);
Json subpresheaf_to_json(const Presheaf& f, const Subpresheaf& s);

Signature parse_signature(const Json& j);
Json to_json(const Signature& sig);
Structure parse_structure(const Json& j);
Json to_json(const Structure& m);

Formula parse_formula(const Json& j);
Json to_json(const Formula& phi);
Sequent parse_sequent(const Json& j);
Json to_json(const Sequent& sigma);

PermGroup parse_group(const Json& j);
Json to_json(const PermGroup& g);
GSet parse_gset(const Json& j, const std::filesystem::path& base);
Json to_json(const GSet& x);

}  // namespace toposcalc
