// toposcalc: command-line front end for the toposcalc library.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toposcalc/checks/properties.hpp"
#include "toposcalc/formula.hpp"
#include "toposcalc/isomorphism.hpp"
#include "toposcalc/json_io.hpp"
#include "toposcalc/sheaf.hpp"

namespace fs = std::filesystem;
using namespace toposcalc;

namespace {

struct Output {
  Json json;
  std::string text;
  int status = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  return "{" + join(items, ", ") + "}";
}

std::vector<std::string> object_ids(const Category& cat, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(cat.object_id(i));
  return out;
}

std::string sieve_text(const Category& cat, const ArrowSet& s) {
  std::vector<std::string> ids;
  for (int f : to_indices(s)) ids.push_back(cat.morphism_id(f));
  return braces(ids);
}

std::string topology_text(const Category& cat, const Topology& t) {
  std::ostringstream out;
  for (int c = 0; c < cat.num_objects(); ++c) {
    std::vector<std::string> sieves;
    for (const auto& s : t.covers[c]) sieves.push_back(sieve_text(cat, s));
    out << cat.object_id(c) << ": " << join(sieves, " ") << "\n";
  }
  return out.str();
}

std::string presheaf_text(const Presheaf& f) {
  std::ostringstream out;
  const Category& cat = f.cat();
  for (int c = 0; c < cat.num_objects(); ++c) {
    out << cat.object_id(c) << ": " << braces(f.elements(c)) << "\n";
  }
  return out.str();
}

std::string subpresheaf_text(const Presheaf& f, const Subpresheaf& s) {
  std::vector<std::string> parts;
  for (int c = 0; c < f.cat().num_objects(); ++c) {
    std::vector<std::string> xs;
    for (int x = 0; x < f.size(c); ++x) {
      if (s.contains(c, x)) xs.push_back(f.element(c, x));
    }
    parts.push_back(f.cat().object_id(c) + "=" + braces(xs));
  }
  return join(parts, " ");
}

CategoryPtr load_category(const std::string& path) {
  return std::make_shared<const Category>(parse_category(read_json_file(path)));
}

std::shared_ptr<const Presheaf> load_presheaf(const Site& site, const std::string& path) {
  return std::make_shared<const Presheaf>(parse_presheaf(site.category, read_json_file(path)));
}

std::shared_ptr<const Presheaf> load_sheaf(const Site& site, const std::string& path) {
  auto f = load_presheaf(site, path);
  if (!is_sheaf(site, *f).ok) {
    throw Error(ErrorKind::NotASheaf, "'" + path + "' is not a sheaf on this site");
  }
  return f;
}

Structure load_structure(const std::string& path) {
  return parse_structure(read_json_file(path));
}

// A group file, or a structure file standing for its automorphism group.
PermGroup load_group_or_aut(const std::string& path) {
  Json j = read_json_file(path);
  if (j.is_object() && j.contains("degree")) return parse_group(j);
  return automorphisms(parse_structure(j));
}

std::vector<int> point_indices(const PermGroup& g, const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& n : names) out.push_back(g.point_index(n));
  return out;
}

Json group_json(const PermGroup& g) {
  Json j = to_json(g);
  j["order"] = g.order();
  return j;
}

std::string group_text(const PermGroup& g) {
  std::ostringstream out;
  out << "order " << g.order() << "\n";
  for (const auto& p : g.elements()) {
    std::vector<std::string> images;
    for (int x : p) images.push_back(g.points()[x]);
    out << "  [" << join(images, " ") << "]\n";
  }
  return out.str();
}

// ------------------------------------------------------------- commands

Output cmd_validate(const std::string& path) {
  RawCategory raw = parse_raw_category(read_json_file(path));
  ValidationResult v = validate_category(raw);
  Output out;
  if (v.ok()) {
    out.json = {{"valid", true},
                {"objects", v.category->num_objects()},
                {"morphisms", v.category->num_morphisms()}};
    out.text = "valid (" + std::to_string(v.category->num_objects()) + " objects, " +
               std::to_string(v.category->num_morphisms()) + " morphisms)\n";
    return out;
  }
  Json list = Json::array();
  out.text = "invalid\n";
  for (const auto& viol : v.violations) {
    list.push_back({{"law", viol.law}, {"morphisms", viol.morphisms}, {"message", viol.message}});
    out.text += "  " + viol.law + ": " + viol.message + "\n";
  }
  out.json = {{"valid", false}, {"violations", list}};
  out.status = 2;
  return out;
}

Output cmd_components(const std::string& path) {
  auto cat = load_category(path);
  Output out;
  out.json["components"] = Json::array();
  for (const auto& comp : connected_components(*cat)) {
    out.json["components"].push_back(object_ids(*cat, comp));
    out.text += braces(object_ids(*cat, comp)) + "\n";
  }
  return out;
}

Output cmd_ore(const std::string& path) {
  auto cat = load_category(path);
  OreResult r = is_right_ore(*cat);
  Output out;
  out.json["ore"] = r.holds;
  if (r.holds) {
    out.text = "true\n";
  } else {
    const auto& w = *r.witness;
    out.json["witness"] = {{"target", cat->object_id(w.target)},
                           {"left", cat->morphism_id(w.left)},
                           {"right", cat->morphism_id(w.right)}};
    out.text = "false, witness cospan (" + cat->object_id(w.target) + "; " +
               cat->morphism_id(w.left) + "," + cat->morphism_id(w.right) + ")\n";
  }
  return out;
}

Output cmd_sieves(const std::string& path, const std::string& object) {
  auto cat = load_category(path);
  int c = cat->object_index(object);
  Output out;
  out.json["object"] = object;
  out.json["sieves"] = Json::array();
  for (const auto& s : enumerate_sieves(*cat, c)) {
    out.json["sieves"].push_back(sieve_to_json(*cat, s));
    out.text += sieve_text(*cat, s) + "\n";
  }
  return out;
}

Output topology_output(const Category& cat, const Topology& t) {
  Output out;
  out.json = to_json(cat, t);
  out.json["trivial_topos"] = is_trivial_topos(cat, t);
  out.text = topology_text(cat, t);
  if (is_trivial_topos(cat, t)) out.text += "(trivial topos: the empty sieve covers every object)\n";
  return out;
}

Output cmd_saturate(const std::string& cat_path, const std::string& gens_path) {
  auto cat = load_category(cat_path);
  auto gens = parse_generators(*cat, read_json_file(gens_path));
  return topology_output(*cat, saturate(*cat, gens));
}

Output cmd_atomic(const std::string& path) {
  auto cat = load_category(path);
  return topology_output(*cat, atomic_topology(*cat));
}

Output cmd_reduce(const std::string& path) {
  auto cat = load_category(path);
  DenseReduction d = reduce_to_dense(*cat);
  Output out;
  out.json = {{"retained", object_ids(*cat, d.retained)},
              {"category", to_json(d.sub)},
              {"topology", to_json(d.sub, d.topology)}};
  out.text = "retained " + braces(object_ids(*cat, d.retained)) + "\n" +
             topology_text(d.sub, d.topology);
  return out;
}

Output cmd_ideals(const std::string& path) {
  auto cat = load_category(path);
  Output out;
  out.json["ideals"] = Json::array();
  for (const auto& ideal : enumerate_ideals(*cat)) {
    out.json["ideals"].push_back(object_ids(*cat, ideal));
    out.text += braces(object_ids(*cat, ideal)) + "\n";
  }
  return out;
}

Output cmd_induced(const std::string& site_path, const std::vector<std::string>& objects) {
  Site site = load_site(site_path);
  Category sub = full_subcategory(site.cat(), objects);
  Topology t = induced_topology(site.cat(), site.topology, sub);
  Output out;
  out.json = {{"category", to_json(sub)}, {"topology", to_json(sub, t)}};
  out.text = topology_text(sub, t);
  return out;
}

Output cmd_sheafcheck(const std::string& site_path, const std::string& presheaf_path) {
  Site site = load_site(site_path);
  auto f = load_presheaf(site, presheaf_path);
  SheafCheck r = is_sheaf(site, *f);
  Output out;
  out.json["sheaf"] = r.ok;
  if (r.ok) {
    out.text = "true\n";
    return out;
  }
  const auto& fail = *r.failure;
  const Category& cat = site.cat();
  Json family = Json::object();
  std::vector<std::string> parts;
  for (int m = 0; m < cat.num_morphisms(); ++m) {
    if (fail.family[m] < 0) continue;
    const std::string& value = f->element(cat.dom(m), fail.family[m]);
    family[cat.morphism_id(m)] = value;
    parts.push_back(cat.morphism_id(m) + ":" + value);
  }
  out.json["failure"] = {{"object", cat.object_id(fail.object)},
                         {"cover", sieve_to_json(cat, fail.cover)},
                         {"family", family},
                         {"amalgamations", fail.amalgamations}};
  out.text = "false, cover " + sieve_text(cat, fail.cover) + " on " + cat.object_id(fail.object) +
             ", family " + braces(parts) + " has " + std::to_string(fail.amalgamations) +
             " amalgamations\n";
  return out;
}

Output cmd_sheafify(const std::string& site_path, const std::string& presheaf_path) {
  Site site = load_site(site_path);
  Sheafification a = sheafify(site, load_presheaf(site, presheaf_path));
  Output out;
  out.json = to_json(*a.sheaf);
  out.json["unit"] = components_to_json(a.unit);
  out.text = presheaf_text(*a.sheaf);
  out.text += "unit is " + std::string(is_isomorphism(a.unit) ? "" : "not ") + "an isomorphism\n";
  return out;
}

Output cmd_subsheaves(const std::string& site_path, const std::string& presheaf_path) {
  Site site = load_site(site_path);
  auto f = load_sheaf(site, presheaf_path);
  Output out;
  out.json["subsheaves"] = Json::array();
  auto subs = subsheaves(site, *f);
  for (const auto& s : subs) {
    out.json["subsheaves"].push_back(subpresheaf_to_json(*f, s));
    out.text += subpresheaf_text(*f, s) + "\n";
  }
  out.json["atom"] = subs.size() == 2;
  return out;
}

Output cmd_atoms(const std::string& site_path) {
  Site site = load_site(site_path);
  Output out;
  out.json["atoms"] = Json::array();
  int i = 0;
  for (const auto& a : enumerate_atoms(site)) {
    out.json["atoms"].push_back(to_json(*a));
    out.text += "atom " + std::to_string(i++) + "\n" + presheaf_text(*a);
  }
  out.text += std::to_string(i) + " atoms\n";
  return out;
}

Output cmd_connected(const std::string& site_path, const std::string& presheaf_path) {
  Site site = load_site(site_path);
  auto f = load_sheaf(site, presheaf_path);
  auto comps = connected_components_sheaf(site, *f);
  Output out;
  out.json["components"] = Json::array();
  for (const auto& c : comps) {
    out.json["components"].push_back(subpresheaf_to_json(*f, c));
    out.text += subpresheaf_text(*f, c) + "\n";
  }
  out.json["connected"] = comps.size() == 1;
  out.text += comps.size() == 1 ? "connected\n" : "not connected\n";
  return out;
}

Output cmd_decompose(const std::string& site_path) {
  Site site = load_site(site_path);
  auto dec = terminal_decomposition(site);
  Output out;
  out.json["atoms"] = Json::array();
  for (const auto& a : dec.atoms) {
    out.json["atoms"].push_back(subpresheaf_to_json(*dec.terminal, a));
    out.text += subpresheaf_text(*dec.terminal, a) + "\n";
  }
  return out;
}

Output cmd_completions(const std::string& site_path) {
  Site site = load_site(site_path);
  std::size_t n = terminal_decomposition(site).atoms.size();
  Output out;
  out.json["completions"] = n;
  out.text = std::to_string(n) + "\n";
  return out;
}

Output cmd_canonical(const std::string& site_path) {
  Site site = load_site(site_path);
  CanonicalSite canon = restricted_canonical_topology(site, enumerate_atoms(site));
  Output out;
  out.json = {{"category", to_json(*canon.category)},
              {"topology", to_json(*canon.category, canon.topology)},
              {"all_arrows_epi", std::all_of(canon.arrow_is_epi.begin(), canon.arrow_is_epi.end(),
                                             [](bool b) { return b; })}};
  out.text = topology_text(*canon.category, canon.topology);
  return out;
}

Output cmd_eval(const std::string& structure_path, const std::string& formula_path,
                const std::vector<std::string>& assigns) {
  Structure m = load_structure(structure_path);
  Formula phi = parse_formula(read_json_file(formula_path));
  Assignment a;
  for (const auto& item : assigns) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::MalformedInput, "assignment '" + item + "' is not var=element");
    }
    a[item.substr(0, eq)] = m.element_index(item.substr(eq + 1));
  }
  bool value = eval(m, phi, a);
  return {{{"value", value}}, value ? "true\n" : "false\n"};
}

Output sequent_output(const Structure& m, const Sequent& sigma) {
  SequentCheck r = satisfies_sequent(m, sigma);
  Output out;
  out.json["satisfied"] = r.ok;
  if (r.ok) {
    out.text = "true\n";
    return out;
  }
  Json cx = Json::object();
  std::vector<std::string> values;
  for (std::size_t i = 0; i < sigma.context.size(); ++i) {
    cx[sigma.context[i]] = m.element((*r.counterexample)[i]);
    values.push_back(m.element((*r.counterexample)[i]));
  }
  out.json["counterexample"] = cx;
  out.text = "false, witness (" + join(values, ",") + ")\n";
  return out;
}

Output cmd_sequent(const std::string& structure_path, const std::string& sequent_path) {
  return sequent_output(load_structure(structure_path),
                        parse_sequent(read_json_file(sequent_path)));
}

Output cmd_cardseq(int n, const std::string& structure_path) {
  Signature sig;
  std::optional<Structure> m;
  if (!structure_path.empty()) {
    m = load_structure(structure_path);
    sig = m->signature();
  }
  auto [at_least, at_most] = cardinality_sequents(n, sig);
  Output out;
  out.json["sequents"] = {to_json(at_least), to_json(at_most)};
  if (m) {
    bool a = satisfies_sequent(*m, at_least).ok;
    bool b = satisfies_sequent(*m, at_most).ok;
    out.json["satisfied"] = {a, b};
    out.text = std::string("at least ") + std::to_string(n) + ": " + (a ? "true" : "false") +
               "\nat most " + std::to_string(n) + ": " + (b ? "true" : "false") + "\n";
  } else {
    out.text = out.json["sequents"].dump(2) + "\n";
  }
  return out;
}

Output cmd_iso(const std::string& a_path, const std::string& b_path) {
  Structure m = load_structure(a_path);
  Structure n = load_structure(b_path);
  auto iso = back_and_forth(m, n);
  Output out;
  out.json["isomorphic"] = iso.has_value();
  if (!iso) {
    out.text = "not isomorphic\n";
    return out;
  }
  Json map = Json::object();
  std::vector<std::string> pairs;
  for (int i = 0; i < m.size(); ++i) {
    map[m.element(i)] = n.element((*iso)[i]);
    pairs.push_back(m.element(i) + "->" + n.element((*iso)[i]));
  }
  out.json["map"] = map;
  out.text = "isomorphic: " + join(pairs, ", ") + "\n";
  return out;
}

Output cmd_homog(const std::string& path) {
  Structure m = load_structure(path);
  HomogeneityCheck h = is_homogeneous(m);
  Output out;
  out.json["homogeneous"] = h.ok;
  if (h.ok) {
    out.text = "true\n";
    return out;
  }
  Json w = Json::object();
  std::vector<std::string> pairs;
  for (const auto& [a, b] : h.witness->pairs) {
    w[m.element(a)] = m.element(b);
    pairs.push_back(m.element(a) + " -> " + m.element(b));
  }
  out.json["witness"] = w;
  out.text = "false, witness " + braces(pairs) + "\n";
  return out;
}

Output cmd_aut(const std::string& path) {
  PermGroup g = automorphisms(load_structure(path));
  return {group_json(g), group_text(g)};
}

Output cmd_orbits(const std::string& path, int k) {
  PermGroup g = load_group_or_aut(path);
  Output out;
  out.json["orbits"] = Json::array();
  for (const auto& orbit : orbits_on_tuples(g, k)) {
    Json tuples = Json::array();
    std::vector<std::string> shown;
    for (const auto& t : orbit) {
      std::vector<std::string> names;
      for (int x : t) names.push_back(g.points()[x]);
      tuples.push_back(names);
      shown.push_back("(" + join(names, ",") + ")");
    }
    out.json["orbits"].push_back(tuples);
    out.text += braces(shown) + "\n";
  }
  return out;
}

Output cmd_stab(const std::string& path, const std::vector<std::string>& tuple) {
  PermGroup g = load_group_or_aut(path);
  PermGroup s = stabilizer(g, point_indices(g, tuple));
  return {group_json(s), group_text(s)};
}

Output cmd_gset_atoms(const std::string& path, int bound) {
  auto g = std::make_shared<const PermGroup>(parse_group(read_json_file(path)));
  auto classes = subgroup_conjugacy_classes(*g, bound);
  Output out;
  Json sets = Json::array();
  int atoms = 0;
  for (const auto& x : transitive_gsets(g, bound)) {
    auto [cat, p] = gset_as_presheaf(x);
    bool atom = is_atom({cat, atomic_topology(*cat)}, p);
    if (atom) ++atoms;
    sets.push_back({{"size", x.size()}, {"atom", atom}, {"gset", to_json(x)}});
    out.text += "transitive G-set of size " + std::to_string(x.size()) +
                (atom ? ": atom\n" : ": not an atom\n");
  }
  out.json = {{"classes", classes.size()}, {"atoms", atoms}, {"gsets", sets}};
  out.text += std::to_string(classes.size()) + " subgroup classes, " + std::to_string(atoms) +
              " atoms\n";
  return out;
}

Output cmd_suite(const std::string& dir) {
  Corpus corpus = load_corpus(dir);
  Output out;
  out.json["checks"] = Json::array();
  if (corpus.file_count() == 0) {
    std::cerr << "warning: corpus '" << dir << "' is empty; nothing to check\n";
    out.json["passed"] = true;
    out.text = "0 checks\n";
    return out;
  }
  bool all = true;
  int failed = 0;
  for (const auto& check : all_checks()) {
    CheckReport r = run_check(check, corpus);
    all = all && r.passed();
    if (!r.passed()) ++failed;
    out.json["checks"].push_back({{"id", r.id},
                                  {"passed", r.passed()},
                                  {"cases", r.cases},
                                  {"failures", r.failures}});
    out.text += std::string(r.passed() ? "PASS " : "FAIL ") + r.id + " (" +
                std::to_string(r.cases) + " cases): " + r.title + "\n";
    for (const auto& f : r.failures) out.text += "    " + f + "\n";
  }
  out.json["passed"] = all;
  out.text += std::to_string(all_checks().size()) + " checks, " + std::to_string(failed) +
              " failed\n";
  out.status = all ? 0 : 1;
  return out;
}

int default_bound() {
  if (const char* env = std::getenv("TOPOSCALC_BOUND")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring TOPOSCALC_BOUND='" << env << "'\n";
    }
  }
  return kDefaultGroupBound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite sites, sheaves, atoms and the model theory around them."};
  app.require_subcommand(1);
  bool json = false;
  int bound = default_bound();
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--bound", bound, "Largest group order for subgroup enumeration")
      ->check(CLI::PositiveNumber);

  std::function<Output()> action;
  std::string a;
  std::string b;
  std::vector<std::string> rest;
  int n = 0;

  auto one_file = [&](const char* name, const char* help, Output (*fn)(const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", a, "Input file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(a); }; });
  };
  auto two_files = [&](const char* name, const char* help, const char* first, const char* second,
                       Output (*fn)(const std::string&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option(first, a, "Input file")->required();
    sub->add_option(second, b, "Input file")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(a, b); }; });
  };

  one_file("validate", "Validate a category file", cmd_validate);
  one_file("components", "Connected components of a category", cmd_components);
  one_file("ore", "Right Ore condition, with a failing cospan", cmd_ore);
  {
    auto* sub = app.add_subcommand("sieves", "All sieves on an object");
    sub->add_option("category", a)->required();
    sub->add_option("object", b)->required();
    sub->callback([&] { action = [&] { return cmd_sieves(a, b); }; });
  }
  two_files("saturate", "Least topology containing the generators", "category", "generators",
            cmd_saturate);
  one_file("atomic", "Atomic topology of a category", cmd_atomic);
  one_file("reduce", "Dense subcategory on which the atomic topology is non-degenerate",
           cmd_reduce);
  one_file("ideals", "Unions of connected components", cmd_ideals);
  {
    auto* sub = app.add_subcommand("induced", "Topology induced on a full subcategory");
    sub->add_option("site", a)->required();
    sub->add_option("objects", rest, "Objects of the subcategory");
    sub->callback([&] { action = [&] { return cmd_induced(a, rest); }; });
  }
  two_files("sheafcheck", "Sheaf condition, with a failing family", "site", "presheaf",
            cmd_sheafcheck);
  two_files("sheafify", "Associated sheaf and unit", "site", "presheaf", cmd_sheafify);
  two_files("subsheaves", "Closed subpresheaves of a sheaf", "site", "sheaf", cmd_subsheaves);
  one_file("atoms", "Atoms of the sheaf topos, up to isomorphism", cmd_atoms);
  two_files("connected", "Connected components of a sheaf", "site", "sheaf", cmd_connected);
  one_file("decompose", "Terminal sheaf as a sum of atoms", cmd_decompose);
  one_file("completions", "Number of atoms of the terminal sheaf", cmd_completions);
  one_file("canonical", "Canonical topology restricted to the atoms", cmd_canonical);
  {
    auto* sub = app.add_subcommand("eval", "Evaluate a formula");
    sub->add_option("structure", a)->required();
    sub->add_option("formula", b)->required();
    sub->add_option("--assign", rest, "var=element");
    sub->callback([&] { action = [&] { return cmd_eval(a, b, rest); }; });
  }
  two_files("sequent", "Check a sequent, with a counterexample", "structure", "sequent",
            cmd_sequent);
  {
    auto* sub = app.add_subcommand("cardseq", "Sequents pinning the size to n");
    sub->add_option("n", n)->required()->check(CLI::PositiveNumber);
    sub->add_option("structure", a);
    sub->callback([&] { action = [&] { return cmd_cardseq(n, a); }; });
  }
  two_files("iso", "Back-and-forth isomorphism search", "first", "second", cmd_iso);
  one_file("homog", "Homogeneity, with a non-extending partial iso", cmd_homog);
  one_file("aut", "Automorphism group of a structure", cmd_aut);
  {
    auto* sub = app.add_subcommand("orbits", "Orbits on k-tuples");
    sub->add_option("file", a, "Group or structure")->required();
    sub->add_option("k", n)->required()->check(CLI::NonNegativeNumber);
    sub->callback([&] { action = [&] { return cmd_orbits(a, n); }; });
  }
  {
    auto* sub = app.add_subcommand("stab", "Pointwise stabilizer of a tuple");
    sub->add_option("file", a, "Group or structure")->required();
    sub->add_option("points", rest, "Tuple entries");
    sub->callback([&] { action = [&] { return cmd_stab(a, rest); }; });
  }
  {
    auto* sub = app.add_subcommand("gset-atoms", "Transitive G-sets as atoms");
    sub->add_option("group", a)->required();
    sub->callback([&] { action = [&] { return cmd_gset_atoms(a, bound); }; });
  }
  {
    auto* sub = app.add_subcommand("suite", "Run every property check over a corpus");
    sub->add_option("corpus", a)->required();
    sub->callback([&] { action = [&] { return cmd_suite(a); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << (app.get_subcommands().empty() ? app.help()
                                                : app.get_subcommands().front()->help());
    return 1;
  }

  try {
    Output out = action();
    if (json) {
      std::cout << out.json.dump(2) << "\n";
    } else {
      std::cout << out.text;
    }
    return out.status;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
