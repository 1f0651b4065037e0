#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "toposcalc/json_io.hpp"

namespace fixtures {

inline std::string path(const std::string& rel) { return std::string(TOPOSCALC_CORPUS) + "/" + rel; }

inline toposcalc::CategoryPtr category(const std::string& name) {
  return std::make_shared<const toposcalc::Category>(
      toposcalc::parse_category(toposcalc::read_json_file(path("categories/" + name + ".json"))));
}

inline toposcalc::Site site(const std::string& name) {
  return toposcalc::load_site(path("sites/" + name + ".json"));
}

inline toposcalc::Presheaf presheaf(const toposcalc::Site& s, const std::string& name) {
  return toposcalc::parse_presheaf(s.category,
                                   toposcalc::read_json_file(path("presheaves/" + name + ".json")));
}

inline toposcalc::Structure structure(const std::string& name) {
  return toposcalc::parse_structure(toposcalc::read_json_file(path("structures/" + name + ".json")));
}

inline std::shared_ptr<const toposcalc::PermGroup> group(const std::string& name) {
  return std::make_shared<const toposcalc::PermGroup>(
      toposcalc::parse_group(toposcalc::read_json_file(path("groups/" + name + ".json"))));
}

inline toposcalc::GSet gset(const std::string& name) {
  return toposcalc::parse_gset(toposcalc::read_json_file(path("gsets/" + name + ".json")),
                               path("gsets"));
}

/// Morphism ids of a sieve, as a set.
inline std::set<std::string> ids(const toposcalc::Category& cat, const toposcalc::ArrowSet& s) {
  std::set<std::string> out;
  for (int f : toposcalc::to_indices(s)) out.insert(cat.morphism_id(f));
  return out;
}

/// Object ids of a list of components, each as a set.
inline std::set<std::set<std::string>> object_sets(const toposcalc::Category& cat,
                                                   const std::vector<std::vector<int>>& parts) {
  std::set<std::set<std::string>> out;
  for (const auto& p : parts) {
    std::set<std::string> s;
    for (int c : p) s.insert(cat.object_id(c));
    out.insert(s);
  }
  return out;
}

}  // namespace fixtures
