#include "toposcalc/json_io.hpp"

#include <fstream>
#include <set>

namespace toposcalc {

namespace fs = std::filesystem;

namespace {

// Runs a parser, turning JSON type and key errors into MalformedInput.
template <typename F>
auto guarded(const std::string& what, F&& parse) -> decltype(parse()) {
  try {
    return parse();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedInput, "bad " + what + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorKind::MalformedInput,
                what + " is missing \"" + std::string(key) + "\"");
  }
  return j.at(key);
}

}  // namespace

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::MalformedInput, "cannot read '" + path.string() + "'");
  }
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::MalformedInput,
                "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Json resolve_embedded(const Json& value, const fs::path& base) {
  if (value.is_string()) return read_json_file(base / value.get<std::string>());
  return value;
}

RawCategory parse_raw_category(const Json& j) {
  return guarded("category", [&] {
    RawCategory raw;
    raw.objects = field(j, "objects", "category").get<std::vector<std::string>>();
    for (const auto& m : field(j, "morphisms", "category")) {
      raw.morphisms.push_back({field(m, "id", "morphism").get<std::string>(),
                               field(m, "dom", "morphism").get<std::string>(),
                               field(m, "cod", "morphism").get<std::string>()});
    }
    if (j.contains("identities")) {
      raw.identities = j.at("identities").get<std::map<std::string, std::string>>();
    }
    if (j.contains("composition")) {
      for (const auto& row : j.at("composition")) {
        if (!row.is_array() || row.size() != 3) {
          throw Error(ErrorKind::MalformedInput,
                      "composition rows must be [g, f, g∘f]");
        }
        raw.composition.push_back({row[0].get<std::string>(),
                                   row[1].get<std::string>(),
                                   row[2].get<std::string>()});
      }
    }
    return raw;
  });
}

Category parse_category(const Json& j) {
  return Category::build(parse_raw_category(j));
}

Json to_json(const Category& cat) {
  RawCategory raw = cat.to_raw();
  Json j;
  j["objects"] = raw.objects;
  j["morphisms"] = Json::array();
  for (const auto& m : raw.morphisms) {
    j["morphisms"].push_back({{"id", m.id}, {"dom", m.dom}, {"cod", m.cod}});
  }
  j["identities"] = raw.identities;
  j["composition"] = Json::array();
  for (const auto& row : raw.composition) {
    j["composition"].push_back({row[0], row[1], row[2]});
  }
  return j;
}

std::vector<Sieve> parse_generators(const Category& cat, const Json& j) {
  return guarded("topology", [&] {
    std::vector<Sieve> out;
    for (const auto& [obj, sieves] : field(j, "covers", "topology").items()) {
      int c = cat.object_index(obj);
      for (const auto& gens : sieves) {
        std::vector<int> idx;
        for (const auto& g : gens) idx.push_back(cat.morphism_index(g.get<std::string>()));
        out.push_back({c, generated_sieve(cat, c, idx)});
      }
    }
    return out;
  });
}

Json sieve_to_json(const Category& cat, const ArrowSet& arrows) {
  Json j = Json::array();
  for (int f : to_indices(arrows)) j.push_back(cat.morphism_id(f));
  return j;
}

Json to_json(const Category& cat, const Topology& topology) {
  Json covers = Json::object();
  for (int c = 0; c < cat.num_objects(); ++c) {
    Json list = Json::array();
    for (const auto& s : topology.covers[c]) list.push_back(sieve_to_json(cat, s));
    covers[cat.object_id(c)] = list;
  }
  return {{"covers", covers}};
}

Site parse_site(const Json& j, const fs::path& base) {
  auto cat = std::make_shared<const Category>(
      parse_category(resolve_embedded(field(j, "category", "site"), base)));
  const Json& t = field(j, "topology", "site");
  Site site{cat, {}};
  if (t.is_string() && t.get<std::string>() == "atomic") {
    site.topology = atomic_topology(*cat);
  } else if (t.is_string() && t.get<std::string>() == "trivial") {
    site.topology = trivial_topology(*cat);
  } else if (t.is_string() && t.get<std::string>() == "degenerate") {
    site.topology = degenerate_topology(*cat);
  } else {
    site.topology = saturate(*cat, parse_generators(*cat, resolve_embedded(t, base)));
  }
  return site;
}

Site load_site(const fs::path& path) {
  return parse_site(read_json_file(path), path.parent_path());
}

Presheaf parse_presheaf(CategoryPtr cat, const Json& j) {
  return guarded("presheaf", [&] {
    auto sets = field(j, "sets", "presheaf")
                    .get<std::map<std::string, std::vector<std::string>>>();
    std::map<std::string, std::map<std::string, std::string>> actions;
    if (j.contains("actions")) {
      actions = j.at("actions")
                    .get<std::map<std::string, std::map<std::string, std::string>>>();
    }
    return Presheaf::from_named(std::move(cat), sets, actions);
  });
}

Json to_json(const Presheaf& f) {
  const Category& cat = f.cat();
  Json sets = Json::object();
  for (int c = 0; c < cat.num_objects(); ++c) sets[cat.object_id(c)] = f.elements(c);
  Json actions = Json::object();
  for (int m = 0; m < cat.num_morphisms(); ++m) {
    Json table = Json::object();
    for (int x = 0; x < f.size(cat.cod(m)); ++x) {
      table[f.element(cat.cod(m), x)] = f.element(cat.dom(m), f.act(m, x));
    }
    actions[cat.morphism_id(m)] = table;
  }
  return {{"sets", sets}, {"actions", actions}};
}

Json components_to_json(const NatTrans& alpha) {
  const Category& cat = alpha.source->cat();
  Json j = Json::object();
  for (int c = 0; c < cat.num_objects(); ++c) {
    Json table = Json::object();
    for (int x = 0; x < alpha.source->size(c); ++x) {
      table[alpha.source->element(c, x)] =
          alpha.target->element(c, alpha.components[c][x]);
    }
    j[cat.object_id(c)] = table;
  }
  return j;
}

Json subpresheaf_to_json(const Presheaf& f, const Subpresheaf& s) {
  Json j = Json::object();
  for (int c = 0; c < f.cat().num_objects(); ++c) {
    Json list = Json::array();
    for (int x = 0; x < f.size(c); ++x) {
      if (s.contains(c, x)) list.push_back(f.element(c, x));
    }
    j[f.cat().object_id(c)] = list;
  }
  return j;
}

Signature parse_signature(const Json& j) {
  return guarded("signature", [&] {
    Signature sig;
    if (j.contains("relations")) {
      sig.relations = j.at("relations").get<std::map<std::string, int>>();
    }
    if (j.contains("constants")) {
      sig.constants = j.at("constants").get<std::vector<std::string>>();
    }
    sig.validate();
    return sig;
  });
}

Json to_json(const Signature& sig) {
  return {{"relations", sig.relations}, {"constants", sig.constants}};
}

Structure parse_structure(const Json& j) {
  return guarded("structure", [&] {
    Signature sig = parse_signature(field(j, "signature", "structure"));
    auto universe = field(j, "universe", "structure").get<std::vector<std::string>>();
    std::map<std::string, std::vector<std::vector<std::string>>> relations;
    if (j.contains("relations")) {
      relations = j.at("relations")
                      .get<std::map<std::string, std::vector<std::vector<std::string>>>>();
    }
    std::map<std::string, std::string> constants;
    if (j.contains("constants")) {
      constants = j.at("constants").get<std::map<std::string, std::string>>();
    }
    return Structure::build(std::move(sig), std::move(universe), relations, constants);
  });
}

Json to_json(const Structure& m) {
  Json relations = Json::object();
  for (const auto& [name, arity] : m.signature().relations) {
    Json tuples = Json::array();
    for (const auto& t : m.relation(name)) {
      Json row = Json::array();
      for (int x : t) row.push_back(m.element(x));
      tuples.push_back(row);
    }
    relations[name] = tuples;
  }
  Json constants = Json::object();
  for (const auto& [name, value] : m.constants()) constants[name] = m.element(value);
  return {{"signature", to_json(m.signature())},
          {"universe", m.universe()},
          {"relations", relations},
          {"constants", constants}};
}

Formula parse_formula(const Json& j) {
  return guarded("formula", [&] {
    const std::string tag = field(j, "tag", "formula").get<std::string>();
    auto terms = [&] {
      return field(j, "terms", "formula").get<std::vector<std::string>>();
    };
    auto children = [&] {
      std::vector<Formula> out;
      for (const auto& c : field(j, "children", "formula")) out.push_back(parse_formula(c));
      return out;
    };
    auto pair = [&] {
      auto t = terms();
      if (t.size() != 2) {
        throw Error(ErrorKind::ArityMismatch, tag + " takes exactly two terms");
      }
      return t;
    };
    if (tag == "true") return Formula::top();
    if (tag == "false") return Formula::bottom();
    if (tag == "eq") {
      auto t = pair();
      return Formula::eq(t[0], t[1]);
    }
    if (tag == "neq") {
      auto t = pair();
      return Formula::neq(t[0], t[1]);
    }
    if (tag == "rel") {
      return Formula::rel(field(j, "name", "formula").get<std::string>(), terms());
    }
    if (tag == "and") return Formula::conj(children());
    if (tag == "or") return Formula::disj(children());
    if (tag == "exists") {
      return Formula::exists(field(j, "vars", "formula").get<std::vector<std::string>>(),
                             parse_formula(field(j, "body", "formula")));
    }
    throw Error(ErrorKind::MalformedInput, "unknown formula tag '" + tag + "'");
  });
}

Json to_json(const Formula& phi) {
  switch (phi.kind) {
    case Formula::Kind::True:
      return {{"tag", "true"}};
    case Formula::Kind::False:
      return {{"tag", "false"}};
    case Formula::Kind::Eq:
      return {{"tag", "eq"}, {"terms", phi.terms}};
    case Formula::Kind::Neq:
      return {{"tag", "neq"}, {"terms", phi.terms}};
    case Formula::Kind::Rel:
      return {{"tag", "rel"}, {"name", phi.relation}, {"terms", phi.terms}};
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Json cs = Json::array();
      for (const auto& c : phi.children) cs.push_back(to_json(c));
      return {{"tag", phi.kind == Formula::Kind::And ? "and" : "or"}, {"children", cs}};
    }
    case Formula::Kind::Exists:
      return {{"tag", "exists"}, {"vars", phi.bound}, {"body", to_json(phi.children.at(0))}};
  }
  return {};
}

Sequent parse_sequent(const Json& j) {
  return guarded("sequent", [&] {
    Sequent s;
    if (j.contains("context")) s.context = j.at("context").get<std::vector<std::string>>();
    s.lhs = parse_formula(field(j, "lhs", "sequent"));
    s.rhs = parse_formula(field(j, "rhs", "sequent"));
    return s;
  });
}

Json to_json(const Sequent& sigma) {
  return {{"context", sigma.context}, {"lhs", to_json(sigma.lhs)}, {"rhs", to_json(sigma.rhs)}};
}

PermGroup parse_group(const Json& j) {
  return guarded("group", [&] {
    auto points = field(j, "degree", "group").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
    std::vector<Perm> elements;
    for (const auto& e : field(j, "elements", "group")) {
      auto table = e.get<std::map<std::string, std::string>>();
      Perm p(points.size(), -1);
      for (const auto& [from, to] : table) {
        auto a = index.find(from);
        auto b = index.find(to);
        if (a == index.end() || b == index.end()) {
          throw Error(ErrorKind::UnknownElement, "group element mentions unknown point");
        }
        p[a->second] = b->second;
      }
      elements.push_back(std::move(p));
    }
    return PermGroup::build(std::move(points), std::move(elements));
  });
}

Json to_json(const PermGroup& g) {
  Json elements = Json::array();
  for (const auto& p : g.elements()) {
    Json table = Json::object();
    for (int i = 0; i < g.degree(); ++i) table[g.points()[i]] = g.points()[p[i]];
    elements.push_back(table);
  }
  return {{"degree", g.points()}, {"elements", elements}};
}

GSet parse_gset(const Json& j, const fs::path& base) {
  return guarded("G-set", [&] {
    auto group = std::make_shared<const PermGroup>(
        parse_group(resolve_embedded(field(j, "group", "G-set"), base)));
    auto carrier = field(j, "carrier", "G-set").get<std::vector<std::string>>();
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < carrier.size(); ++i) index[carrier[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> action(group->order(),
                                         std::vector<int>(carrier.size(), -1));
    std::set<int> given;
    for (const auto& [key, table] : field(j, "action", "G-set").items()) {
      int g = -1;
      try {
        g = std::stoi(key);
      } catch (const std::exception&) {
        throw Error(ErrorKind::MalformedInput, "action key '" + key + "' is not an index");
      }
      if (g < 0 || g >= group->order()) {
        throw Error(ErrorKind::UnknownElement, "no group element " + key);
      }
      given.insert(g);
      for (const auto& [x, y] : table.get<std::map<std::string, std::string>>()) {
        auto a = index.find(x);
        auto b = index.find(y);
        if (a == index.end() || b == index.end()) {
          throw Error(ErrorKind::UnknownElement, "action mentions unknown element");
        }
        action[g][a->second] = b->second;
      }
    }
    // omitted rows default to the identity element acting trivially
    if (!given.count(group->identity())) {
      for (std::size_t x = 0; x < carrier.size(); ++x) {
        action[group->identity()][x] = static_cast<int>(x);
      }
    }
    return GSet::build(group, std::move(carrier), std::move(action));
  });
}

Json to_json(const GSet& x) {
  Json action = Json::object();
  for (int g = 0; g < x.group().order(); ++g) {
    Json table = Json::object();
    for (int e = 0; e < x.size(); ++e) table[x.carrier()[e]] = x.carrier()[x.act(g, e)];
    action[std::to_string(g)] = table;
  }
  return {{"group", to_json(x.group())}, {"carrier", x.carrier()}, {"action", action}};
}

}  // namespace toposcalc
