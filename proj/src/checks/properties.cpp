#include "toposcalc/checks/properties.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "toposcalc/checks/oracles.hpp"
#include "toposcalc/formula.hpp"
#include "toposcalc/isomorphism.hpp"
#include "toposcalc/sheaf.hpp"

namespace toposcalc {

namespace {

constexpr int kSmallCategory = 6;
constexpr std::size_t kMaxMessages = 8;

std::string label(const std::filesystem::path& file) {
  return file.filename().string();
}

using PresheafPtr = std::shared_ptr<const Presheaf>;

struct SheafPair {
  std::string label;
  Site site;
  PresheafPtr presheaf;
};

PresheafPtr share(Presheaf p) { return std::make_shared<const Presheaf>(std::move(p)); }

// Corpus presheaves, plus representables and small constant presheaves over
// every corpus site.
std::vector<SheafPair> sheaf_pairs(const Corpus& corpus) {
  std::vector<SheafPair> out;
  for (const auto& p : corpus.presheaves) out.push_back({label(p.file), p.site, p.presheaf});
  for (const auto& s : corpus.sites) {
    const Category& cat = s.site.cat();
    for (int c = 0; c < cat.num_objects(); ++c) {
      out.push_back({label(s.file) + " y(" + cat.object_id(c) + ")", s.site,
                     share(yoneda(s.site.category, c))});
    }
    std::vector<std::vector<std::string>> values = {{}, {"*"}, {"0", "1"}};
    for (const auto& v : values) {
      out.push_back({label(s.file) + " Δ" + std::to_string(v.size()), s.site,
                     share(constant_presheaf(s.site.category, v))});
    }
  }
  return out;
}

std::vector<const CorpusSite*> atomic_sites(const Corpus& corpus) {
  std::vector<const CorpusSite*> out;
  for (const auto& s : corpus.sites) {
    if (is_atomic_site(s.site)) out.push_back(&s);
  }
  return out;
}

const CorpusStructure* find_structure(const Corpus& corpus, const std::string& name) {
  for (const auto& s : corpus.structures) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

bool covers_equal(const oracle::Covers& a, const oracle::Covers& b) { return a == b; }

bool subset_covers(const oracle::Covers& a, const oracle::Covers& b) {
  for (std::size_t c = 0; c < a.size(); ++c) {
    for (const auto& s : a[c]) {
      if (!b[c].count(s)) return false;
    }
  }
  return true;
}

std::vector<Sieve> to_generators(const Category& cat, const oracle::Covers& covers) {
  std::vector<Sieve> out;
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : covers[c]) {
      ArrowSet bits = cat.empty_set();
      for (int f : s) bits.set(f);
      out.push_back({c, bits});
    }
  }
  return out;
}

// Generator families used against the minimality oracle: none, all
// non-empty sieves, and each single sieve.
std::vector<oracle::Covers> generator_families(const Category& cat) {
  std::vector<oracle::Covers> out;
  oracle::Covers none(cat.num_objects());
  out.push_back(none);
  out.push_back(oracle::nonempty_sieves(cat));
  auto all = oracle::sieves(cat);
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : all[c]) {
      oracle::Covers one(cat.num_objects());
      one[c].insert(s);
      out.push_back(one);
    }
  }
  return out;
}

// ---------------------------------------------------------------- fincat

void check_validate(const Corpus& corpus, CheckReport& r) {
  for (const auto& f : corpus.failures) r.expect(false, label(f.file) + ": " + f.message);
  for (const auto& c : corpus.categories) r.expect(true, c.name);
}

void check_roundtrip(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    Category again = Category::build(c.category->to_raw());
    r.expect(again == *c.category, label(c.file) + ": to_raw round trip differs");
    Category parsed = parse_category(Json::parse(to_json(*c.category).dump()));
    r.expect(parsed == *c.category, label(c.file) + ": JSON round trip differs");
  }
}

void check_components(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    r.expect(connected_components(*c.category) == oracle::components(*c.category),
             label(c.file) + ": components disagree with search");
  }
}

void check_components_refine(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    const int n = cat.num_objects();
    if (n > 8) continue;
    auto whole = oracle::components(cat);
    std::vector<int> comp_of(n);
    for (std::size_t i = 0; i < whole.size(); ++i) {
      for (int x : whole[i]) comp_of[x] = static_cast<int>(i);
    }
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
      std::vector<int> objs;
      for (int i = 0; i < n; ++i) {
        if (mask & (1U << i)) objs.push_back(i);
      }
      Category sub = full_subcategory(cat, objs);
      bool refines = true;
      for (const auto& part : connected_components(sub)) {
        int first = comp_of[cat.object_index(sub.object_id(part.front()))];
        for (int x : part) {
          refines = refines && comp_of[cat.object_index(sub.object_id(x))] == first;
        }
      }
      r.expect(refines, label(c.file) + ": sub-components not refining");
    }
  }
}

void check_ore(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    OreResult ore = is_right_ore(cat);
    r.expect(ore.holds == oracle::right_ore(cat), label(c.file) + ": Ore disagrees");
    if (!ore.holds) {
      const auto& w = *ore.witness;
      bool completable = false;
      for (int p = 0; p < cat.num_morphisms(); ++p) {
        for (int q = 0; q < cat.num_morphisms(); ++q) {
          if (cat.cod(p) == cat.dom(w.left) && cat.cod(q) == cat.dom(w.right) &&
              cat.dom(p) == cat.dom(q) &&
              cat.compose(w.left, p) == cat.compose(w.right, q)) {
            completable = true;
          }
        }
      }
      r.expect(!completable && cat.cod(w.left) == w.target && cat.cod(w.right) == w.target,
               label(c.file) + ": Ore witness is not an uncompletable cospan");
    }
    std::map<std::string, std::string> rename;
    for (int i = 0; i < cat.num_objects(); ++i) rename[cat.object_id(i)] = "o_" + cat.object_id(i);
    for (int f = 0; f < cat.num_morphisms(); ++f) rename[cat.morphism_id(f)] = "m_" + cat.morphism_id(f);
    r.expect(is_right_ore(rename_ids(cat, rename)).holds == ore.holds,
             label(c.file) + ": Ore changes under renaming");
  }
}

// -------------------------------------------------------------- sitecore

void check_sieves(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    auto expected = oracle::sieves(cat);
    for (int o = 0; o < cat.num_objects(); ++o) {
      std::set<oracle::ArrowList> mine;
      for (const auto& s : enumerate_sieves(cat, o)) {
        oracle::ArrowList list;
        for (int f : to_indices(s)) list.insert(f);
        mine.insert(list);
      }
      std::set<oracle::ArrowList> theirs(expected[o].begin(), expected[o].end());
      r.expect(mine == theirs, label(c.file) + ": sieves on " + cat.object_id(o));
    }
  }
}

void check_saturate_minimal(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    bool small = cat.num_morphisms() <= kSmallCategory;
    std::vector<oracle::Covers> topologies;
    if (small) topologies = oracle::all_topologies(cat);
    for (const auto& gens : generator_families(cat)) {
      Topology t = saturate(cat, to_generators(cat, gens));
      oracle::Covers covers = oracle::from_topology(cat, t);
      r.expect(is_topology(cat, t).ok && oracle::is_topology(cat, covers),
               label(c.file) + ": saturate output is not a topology");
      r.expect(subset_covers(gens, covers), label(c.file) + ": generators lost");
      if (small) {
        r.expect(!topologies.empty(), label(c.file) + ": no topologies enumerated");
        r.expect(covers_equal(covers, oracle::least_topology(topologies, gens)),
                 label(c.file) + ": saturate is not the least topology");
      }
    }
  }
}

void check_saturate_laws(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    auto families = generator_families(cat);
    for (const auto& gens : families) {
      Topology t = saturate(cat, to_generators(cat, gens));
      r.expect(saturate(cat, all_covers(t)) == t, label(c.file) + ": not idempotent");
      // monotone: adding the non-empty sieves can only grow the result
      oracle::Covers bigger = gens;
      auto extra = oracle::nonempty_sieves(cat);
      for (std::size_t o = 0; o < bigger.size(); ++o) bigger[o].insert(extra[o].begin(), extra[o].end());
      Topology u = saturate(cat, to_generators(cat, bigger));
      r.expect(t.refines(u), label(c.file) + ": not monotone");
    }
  }
}

void check_atomic_ore(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    oracle::Covers atomic = oracle::from_topology(cat, atomic_topology(cat));
    if (oracle::right_ore(cat)) {
      r.expect(atomic == oracle::nonempty_sieves(cat),
               label(c.file) + ": atomic covers are not the non-empty sieves");
    }
    if (c.name == "v") {
      r.expect(atomic_topology(cat) == degenerate_topology(cat),
               label(c.file) + ": V should get the degenerate topology");
      r.expect(reduce_to_dense(cat).retained.empty(), label(c.file) + ": V should reduce to nothing");
      r.expect(is_trivial_topos(cat, atomic_topology(cat)), label(c.file) + ": topos not trivial");
    }
  }
}

void check_nonore_connected(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    if (oracle::right_ore(cat) || oracle::components(cat).size() != 1) continue;
    r.expect(reduce_to_dense(cat).retained.empty(),
             label(c.file) + ": connected non-Ore category kept objects");
  }
}

void check_dense(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    DenseReduction d = reduce_to_dense(cat);
    r.expect(oracle::right_ore(d.sub), label(c.file) + ": C' is not Ore");
    r.expect(oracle::from_topology(d.sub, d.topology) == oracle::nonempty_sieves(d.sub),
             label(c.file) + ": induced topology is not the non-empty sieves");
    std::set<int> kept(d.retained.begin(), d.retained.end());
    bool union_of_components = true;
    for (const auto& comp : oracle::components(cat)) {
      std::size_t in = std::count_if(comp.begin(), comp.end(), [&](int x) { return kept.count(x) > 0; });
      union_of_components = union_of_components && (in == 0 || in == comp.size());
    }
    r.expect(union_of_components, label(c.file) + ": C' is not a union of components");
    // an object survives exactly when the empty sieve does not cover it
    auto atomic = oracle::from_topology(cat, atomic_topology(cat));
    for (int o = 0; o < cat.num_objects(); ++o) {
      r.expect(atomic[o].count({}) == (kept.count(o) == 0),
               label(c.file) + ": wrong object set for C'");
    }
  }
}

void check_induced_agree(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    DenseReduction d = reduce_to_dense(cat);
    Topology atomic = atomic_topology(cat);
    r.expect(induced_topology(cat, atomic, d.sub) ==
                 induced_topology_by_restriction(cat, atomic, d.sub),
             label(c.file) + ": induced topology readings differ on C'");
    r.expect(induced_topology(cat, atomic, cat) == atomic,
             label(c.file) + ": inducing on C itself changed J");
  }
}

void check_ideals(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    const int n = cat.num_objects();
    if (n > 12) continue;
    std::set<std::vector<int>> expected;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      bool closed = true;
      for (int f = 0; f < cat.num_morphisms(); ++f) {
        bool a = mask & (1U << cat.dom(f));
        bool b = mask & (1U << cat.cod(f));
        closed = closed && a == b;
      }
      if (!closed) continue;
      std::vector<int> u;
      for (int i = 0; i < n; ++i) {
        if (mask & (1U << i)) u.push_back(i);
      }
      expected.insert(u);
    }
    auto ideals = enumerate_ideals(cat);
    std::set<std::vector<int>> got(ideals.begin(), ideals.end());
    r.expect(got == expected && got.size() == ideals.size(),
             label(c.file) + ": ideals disagree with subset search");
  }
}

void check_ore_sieves_connected(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    if (!oracle::right_ore(cat)) continue;
    for (int o = 0; o < cat.num_objects(); ++o) {
      for (const auto& s : enumerate_sieves(cat, o)) {
        if (s.none()) {
          r.expect(!sieve_is_connected(cat, {o, s}), label(c.file) + ": empty sieve connected");
        } else {
          r.expect(sieve_is_connected(cat, {o, s}),
                   label(c.file) + ": non-empty sieve on Ore category is disconnected");
        }
      }
    }
  }
}

// -------------------------------------------------------------- sheafkit

void check_is_sheaf_oracle(const Corpus& corpus, CheckReport& r) {
  for (const auto& p : sheaf_pairs(corpus)) {
    auto covers = oracle::from_topology(p.site.cat(), p.site.topology);
    r.expect(is_sheaf(p.site, *p.presheaf).ok ==
                 oracle::is_sheaf(p.site.cat(), covers, *p.presheaf),
             p.label + ": is_sheaf disagrees with family search");
  }
}

void check_sheafify(const Corpus& corpus, CheckReport& r) {
  for (const auto& p : sheaf_pairs(corpus)) {
    const Category& cat = p.site.cat();
    auto covers = oracle::from_topology(cat, p.site.topology);
    Sheafification a = sheafify(p.site, p.presheaf);
    r.expect(oracle::is_sheaf(cat, covers, *a.sheaf), p.label + ": aF is not a sheaf");
    check_naturality(a.unit);
    bool was_sheaf = oracle::is_sheaf(cat, covers, *p.presheaf);
    r.expect(is_isomorphism(a.unit) == was_sheaf,
             p.label + ": unit iso does not match sheafness of F");
    Sheafification again = sheafify(p.site, a.sheaf);
    r.expect(is_isomorphism(again.unit), p.label + ": second sheafification not stable");
  }
}

std::vector<PresheafPtr> atom_candidates(const Site& site, const Corpus& corpus) {
  const Category& cat = site.cat();
  std::vector<PresheafPtr> out;
  std::vector<PresheafPtr> reps;
  for (int c = 0; c < cat.num_objects(); ++c) {
    reps.push_back(sheafify(site, yoneda(site.category, c)).sheaf);
    for (const auto& q : quotients(yoneda(site.category, c))) {
      out.push_back(sheafify(site, q).sheaf);
    }
  }
  out.push_back(sheafify(site, constant_presheaf(site.category, {"0", "1"})).sheaf);
  out.push_back(sheafify(site, constant_presheaf(site.category, {})).sheaf);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i; j < reps.size() && j < i + 2; ++j) {
      out.push_back(sheafify(site, coproduct(*reps[i], "l", *reps[j], "r")).sheaf);
    }
  }
  for (const auto& p : corpus.presheaves) {
    if (*p.site.category == cat && p.site.topology == site.topology) {
      out.push_back(sheafify(p.site, p.presheaf).sheaf);
    }
  }
  return out;
}

void check_atoms(const Corpus& corpus, CheckReport& r) {
  for (const CorpusSite* s : atomic_sites(corpus)) {
    const Site& site = s->site;
    const Category& cat = site.cat();
    std::vector<PresheafPtr> reps;
    for (int c = 0; c < cat.num_objects(); ++c) {
      reps.push_back(sheafify(site, yoneda(site.category, c)).sheaf);
    }
    for (const auto& f : atom_candidates(site, corpus)) {
      bool by_subsheaves = subsheaves(site, *f).size() == 2;
      bool nonzero = !is_zero_sheaf(site, *f);
      bool by_epi = false;
      for (const auto& rep : reps) {
        for (const auto& alpha : natural_transformations(rep, f)) {
          if (is_epi(site, alpha)) {
            by_epi = true;
            break;
          }
        }
        if (by_epi) break;
      }
      by_epi = by_epi && nonzero;
      bool by_generator = false;
      Subpresheaf full = full_subpresheaf(*f);
      for (int c = 0; c < cat.num_objects() && !by_generator; ++c) {
        for (int x = 0; x < f->size(c) && !by_generator; ++x) {
          by_generator = generated_subsheaf(site, *f, c, x) == full;
        }
      }
      by_generator = by_generator && nonzero;
      r.expect(by_subsheaves == by_epi && by_epi == by_generator,
               label(s->file) + ": atom characterizations disagree");
    }
    for (const auto& a : enumerate_atoms(site)) {
      r.expect(subsheaves(site, *a).size() == 2, label(s->file) + ": enumerated non-atom");
    }
  }
}

void check_local_connectedness(const Corpus& corpus, CheckReport& r) {
  for (const auto& s : corpus.sites) {
    const Site& site = s.site;
    const Category& cat = site.cat();
    auto covers = oracle::from_topology(cat, site.topology);
    bool constants = true;
    std::vector<std::string> values;
    for (int size = 0; size <= 3; ++size) {
      if (size > 0) values.push_back(std::to_string(size - 1));
      constants = constants && oracle::is_sheaf(cat, covers, constant_presheaf(site.category, values));
    }
    bool representables = true;
    for (int c = 0; c < cat.num_objects(); ++c) {
      auto a = sheafify(site, yoneda(site.category, c)).sheaf;
      bool connected = is_indecomposable(site, *a);
      representables = representables && connected;
      if (has_connected_covers(site)) {
        r.expect(is_connected_object(site, *a) == connected,
                 label(s.file) + ": zigzag connectedness disagrees");
      }
    }
    r.expect(constants == representables,
             label(s.file) + ": constant sheaves vs connected representables");
  }
}

void check_remark(const Corpus& corpus, CheckReport& r) {
  for (const auto& s : corpus.sites) {
    const Site& site = s.site;
    const Category& cat = site.cat();
    auto covers = oracle::from_topology(cat, site.topology);
    bool no_empty = true;
    bool connected = true;
    for (int c = 0; c < cat.num_objects(); ++c) {
      for (const auto& sieve : site.topology.covers[c]) {
        if (sieve.none()) no_empty = false;
        if (!sieve_is_connected(cat, {c, sieve})) connected = false;
      }
    }
    r.expect(oracle::is_sheaf(cat, covers, constant_presheaf(site.category, {})) == no_empty,
             label(s.file) + ": empty constant sheaf criterion");
    r.expect(oracle::is_sheaf(cat, covers, constant_presheaf(site.category, {"*"})),
             label(s.file) + ": terminal presheaf is not a sheaf");
    r.expect(oracle::is_sheaf(cat, covers, constant_presheaf(site.category, {"0", "1"})) == connected,
             label(s.file) + ": two-point constant sheaf criterion");
    r.expect(has_connected_covers(site) == connected, label(s.file) + ": connected covers");
  }
}

void check_boolean(const Corpus& corpus, CheckReport& r) {
  for (const auto& p : sheaf_pairs(corpus)) {
    if (!is_atomic_site(p.site)) continue;
    auto f = sheafify(p.site, p.presheaf).sheaf;
    auto subs = subsheaves(p.site, *f);
    if (subs.size() > 128) continue;
    std::set<Subpresheaf> all(subs.begin(), subs.end());
    Subpresheaf zero = zero_subsheaf(p.site, *f);
    Subpresheaf top = full_subpresheaf(*f);
    std::vector<Subpresheaf> atoms;
    for (const auto& s : subs) {
      if (s == zero) continue;
      bool minimal = std::none_of(subs.begin(), subs.end(), [&](const Subpresheaf& t) {
        return t != zero && t != s && is_subset(t, s);
      });
      if (minimal) atoms.push_back(s);
    }
    bool boolean = all.count(zero) && all.count(top);
    bool atomic = true;
    for (const auto& s : subs) {
      bool complemented = false;
      for (const auto& t : subs) {
        if (intersect(s, t) == zero && closure(p.site, *f, unite(s, t)) == top) {
          complemented = true;
          break;
        }
      }
      boolean = boolean && complemented;
      if (s != zero) {
        atomic = atomic && std::any_of(atoms.begin(), atoms.end(),
                                       [&](const Subpresheaf& a) { return is_subset(a, s); });
      }
    }
    r.expect(boolean, p.label + ": subsheaf lattice is not Boolean");
    r.expect(atomic, p.label + ": subsheaf lattice is not atomic");
  }
}

void check_completions(const Corpus& corpus, CheckReport& r) {
  for (const CorpusSite* s : atomic_sites(corpus)) {
    const Category& cat = s->site.cat();
    auto dec = terminal_decomposition(s->site);
    std::size_t expected = oracle::components(reduce_to_dense(cat).sub).size();
    r.expect(dec.atoms.size() == expected,
             label(s->file) + ": completions " + std::to_string(dec.atoms.size()) +
                 " vs components " + std::to_string(expected));
    if (s->name == "discrete2_atomic") {
      r.expect(dec.atoms.size() == 2, label(s->file) + ": discrete-2 should give 2");
    }
    if (oracle::right_ore(cat) && oracle::components(cat).size() == 1) {
      r.expect(dec.atoms.size() == 1, label(s->file) + ": connected Ore site should give 1");
    }
  }
}

void check_atom_transport(const Corpus& corpus, CheckReport& r) {
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    if (cat.num_morphisms() > kSmallCategory) continue;
    auto tops = oracle::all_topologies(cat);
    std::vector<Site> sites;
    std::vector<std::vector<PresheafPtr>> atoms;
    for (const auto& t : tops) {
      sites.push_back({c.category, oracle::to_topology(cat, t)});
      atoms.push_back(enumerate_atoms(sites.back()));
    }
    for (std::size_t i = 0; i < tops.size(); ++i) {
      for (std::size_t j = 0; j < tops.size(); ++j) {
        if (!subset_covers(tops[i], tops[j])) continue;
        for (const auto& a : atoms[i]) {
          auto b = sheafify(sites[j], a).sheaf;
          r.expect(is_zero_sheaf(sites[j], *b) || is_atom(sites[j], *b),
                   label(c.file) + ": transported atom is neither zero nor an atom");
        }
      }
    }
  }
}

void check_canonical(const Corpus& corpus, CheckReport& r) {
  for (const CorpusSite* s : atomic_sites(corpus)) {
    auto atoms = enumerate_atoms(s->site);
    CanonicalSite canon = restricted_canonical_topology(s->site, atoms);
    const Category& cat = *canon.category;
    r.expect(is_topology(cat, canon.topology).ok, label(s->file) + ": canonical topology invalid");
    r.expect(std::all_of(canon.arrow_is_epi.begin(), canon.arrow_is_epi.end(),
                         [](bool b) { return b; }),
             label(s->file) + ": an arrow between atoms is not epi");
    r.expect(atomic_topology(cat).refines(canon.topology),
             label(s->file) + ": atomic topology does not refine the canonical one");
  }
}

// -------------------------------------------------------------- modelkit

std::vector<const CorpusStructure*> small_structures(const Corpus& corpus, int max) {
  std::vector<const CorpusStructure*> out;
  for (const auto& s : corpus.structures) {
    if (s.structure.size() <= max) out.push_back(&s);
  }
  return out;
}

void check_back_and_forth(const Corpus& corpus, CheckReport& r) {
  auto structs = small_structures(corpus, 6);
  auto start = std::chrono::steady_clock::now();
  for (const auto* m : structs) {
    for (const auto* n : structs) {
      if (!(m->structure.signature() == n->structure.signature())) continue;
      auto iso = back_and_forth(m->structure, n->structure);
      bool brute = !oracle::isomorphisms(m->structure, n->structure).empty();
      r.expect(iso.has_value() == brute, m->name + " vs " + n->name + ": disagrees with bijection search");
      if (iso) {
        r.expect(oracle::is_isomorphism(m->structure, n->structure, *iso),
                 m->name + " vs " + n->name + ": returned map is not an isomorphism");
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.expect(secs < 5.0, "back-and-forth sweep took " + std::to_string(secs) + " s");
  const auto* c3 = find_structure(corpus, "c3");
  const auto* p3 = find_structure(corpus, "p3");
  if (c3 && p3) r.expect(!back_and_forth(c3->structure, p3->structure), "C3 vs P3 must be rejected");
}

void check_back_and_forth_self(const Corpus& corpus, CheckReport& r) {
  for (const auto& s : corpus.structures) {
    auto iso = back_and_forth(s.structure, s.structure);
    r.expect(iso && oracle::is_isomorphism(s.structure, s.structure, *iso),
             s.name + ": no self-isomorphism found");
  }
}

// All tuples of length k over n elements, lexicographic.
std::vector<std::vector<int>> tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(k, 0);
  if (k > 0 && n == 0) return out;
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

void check_same_type_equivalence(const Corpus& corpus, CheckReport& r) {
  for (const auto* s : small_structures(corpus, 5)) {
    const Structure& m = s->structure;
    for (int k = 1; k <= 2; ++k) {
      auto ts = tuples(m.size(), k);
      const std::size_t n = ts.size();
      std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rel[i][j] = same_type(m, ts[i], m, ts[j]);
      }
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) {
        ok = ok && rel[i][i];
        for (std::size_t j = 0; j < n; ++j) {
          ok = ok && rel[i][j] == rel[j][i];
          for (std::size_t l = 0; l < n && ok; ++l) {
            if (rel[i][j] && rel[j][l]) ok = rel[i][l];
          }
        }
      }
      r.expect(ok, s->name + ": same_type is not an equivalence on " + std::to_string(k) + "-tuples");
    }
  }
}

void check_cardinality(const Corpus& corpus, CheckReport& r) {
  for (const auto& s : corpus.structures) {
    for (int n = 1; n <= 5; ++n) {
      auto [at_least, at_most] = cardinality_sequents(n, s.structure.signature());
      bool both = satisfies_sequent(s.structure, at_least).ok &&
                  satisfies_sequent(s.structure, at_most).ok;
      r.expect(both == (s.structure.size() == n),
               s.name + ": cardinality sequents for n=" + std::to_string(n));
    }
  }
}

bool oracle_partial_iso(const Structure& m, const Structure& n, const PartialIso& p) {
  std::map<int, int> fwd;
  std::map<int, int> bwd;
  for (const auto& [a, b] : p.pairs) {
    if (fwd.count(a) || bwd.count(b)) return false;
    fwd[a] = b;
    bwd[b] = a;
  }
  for (const auto& [name, value] : m.constants()) {
    int other = n.constant(name);
    if (fwd.count(value) && fwd[value] != other) return false;
    if (bwd.count(other) && bwd[other] != value) return false;
  }
  for (const auto& [name, arity] : m.signature().relations) {
    for (const auto& t : tuples(static_cast<int>(fwd.size()), arity)) {
      std::vector<std::pair<int, int>> pairs(fwd.begin(), fwd.end());
      Tuple a;
      Tuple b;
      for (int i : t) {
        a.push_back(pairs[i].first);
        b.push_back(pairs[i].second);
      }
      if (m.holds(name, a) != n.holds(name, b)) return false;
    }
  }
  return true;
}

bool extends(const std::vector<std::vector<int>>& isos, const PartialIso& p) {
  return std::any_of(isos.begin(), isos.end(), [&](const std::vector<int>& sigma) {
    return std::all_of(p.pairs.begin(), p.pairs.end(),
                       [&](const auto& ab) { return sigma[ab.first] == ab.second; });
  });
}

// Every partial isomorphism with domain and image listed in order.
std::vector<PartialIso> partial_isos(const Structure& m, const Structure& n) {
  std::vector<PartialIso> out;
  const int size = m.size();
  for (unsigned mask = 0; mask < (1U << size); ++mask) {
    std::vector<int> dom;
    for (int i = 0; i < size; ++i) {
      if (mask & (1U << i)) dom.push_back(i);
    }
    std::vector<int> img(n.size());
    for (int i = 0; i < n.size(); ++i) img[i] = i;
    std::set<std::vector<int>> seen;
    do {
      std::vector<int> head(img.begin(), img.begin() + std::min<std::size_t>(dom.size(), img.size()));
      if (head.size() != dom.size() || !seen.insert(head).second) continue;
      PartialIso p;
      for (std::size_t i = 0; i < dom.size(); ++i) p.pairs.emplace_back(dom[i], head[i]);
      if (oracle_partial_iso(m, n, p)) out.push_back(p);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

void check_homogeneous_pairs(const Corpus& corpus, CheckReport& r) {
  auto structs = small_structures(corpus, 4);
  for (const auto* m : structs) {
    if (!is_homogeneous(m->structure).ok) continue;
    for (const auto* n : structs) {
      if (!is_homogeneous(n->structure).ok) continue;
      if (!back_and_forth(m->structure, n->structure)) continue;
      auto isos = oracle::isomorphisms(m->structure, n->structure);
      for (const auto& p : partial_isos(m->structure, n->structure)) {
        r.expect(extends(isos, p), m->name + " vs " + n->name + ": partial iso does not extend");
      }
    }
  }
}

void check_homogeneity(const Corpus& corpus, CheckReport& r) {
  for (const auto* s : small_structures(corpus, 5)) {
    const Structure& m = s->structure;
    auto auts = oracle::isomorphisms(m, m);
    HomogeneityCheck h = is_homogeneous(m);
    bool expected = true;
    for (const auto& p : partial_isos(m, m)) expected = expected && extends(auts, p);
    r.expect(h.ok == expected, s->name + ": homogeneity disagrees with exhaustive search");
    if (h.ok) {
      for (int k = 1; k <= 2; ++k) {
        for (const auto& a : tuples(m.size(), k)) {
          for (const auto& b : tuples(m.size(), k)) {
            bool orbit = std::any_of(auts.begin(), auts.end(), [&](const std::vector<int>& sigma) {
              for (int i = 0; i < k; ++i) {
                if (sigma[a[i]] != b[i]) return false;
              }
              return true;
            });
            r.expect(same_type(m, a, m, b) == orbit, s->name + ": same_type vs orbit membership");
          }
        }
      }
    } else {
      r.expect(h.witness && oracle_partial_iso(m, m, *h.witness) && !extends(auts, *h.witness),
               s->name + ": bad non-extension witness");
    }
  }
  for (const char* name : {"lin2", "lin3", "lin4"}) {
    const auto* s = find_structure(corpus, name);
    if (s) r.expect(!is_homogeneous(s->structure).ok, std::string(name) + " should not be homogeneous");
  }
  const auto* lin2 = find_structure(corpus, "lin2");
  if (lin2) {
    auto h = is_homogeneous(lin2->structure);
    r.expect(h.witness && h.witness->pairs == std::vector<std::pair<int, int>>{{0, 1}},
             "lin2 witness should be {0 -> 1}");
  }
}

// ----------------------------------------------------------------- gsets

void check_automorphisms(const Corpus& corpus, CheckReport& r) {
  for (const auto* s : small_structures(corpus, 6)) {
    PermGroup g = automorphisms(s->structure);
    auto brute = oracle::isomorphisms(s->structure, s->structure);
    std::set<Perm> got(g.elements().begin(), g.elements().end());
    std::set<Perm> want(brute.begin(), brute.end());
    r.expect(got == want, s->name + ": automorphism group disagrees with bijection search");
  }
}

void check_subgroups(const Corpus& corpus, CheckReport& r) {
  for (const auto& g : corpus.groups) {
    auto mine = all_subgroups(*g.group);
    auto brute = oracle::subgroups(*g.group);
    std::set<std::set<int>> a;
    for (const auto& h : mine) a.insert(std::set<int>(h.begin(), h.end()));
    std::set<std::set<int>> b(brute.begin(), brute.end());
    r.expect(a == b, label(g.file) + ": subgroups disagree with subset search");
    r.expect(static_cast<int>(subgroup_conjugacy_classes(*g.group).size()) ==
                 oracle::subgroup_class_count(*g.group),
             label(g.file) + ": conjugacy class count disagrees");
  }
}

void check_gset_atoms(const Corpus& corpus, CheckReport& r) {
  const std::map<std::string, int> expected = {
      {"trivial", 1}, {"z2", 2}, {"z3", 2}, {"z2xz2", 5}, {"s3", 4}};
  for (const auto& g : corpus.groups) {
    int brute = oracle::subgroup_class_count(*g.group);
    auto want = expected.find(g.name);
    if (want != expected.end()) {
      r.expect(brute == want->second, label(g.file) + ": subgroup oracle gives " +
                                          std::to_string(brute) + ", expected " +
                                          std::to_string(want->second));
    }
    int atoms = 0;
    for (const auto& x : transitive_gsets(g.group)) {
      auto [cat, p] = gset_as_presheaf(x);
      Site site{cat, atomic_topology(*cat)};
      if (is_atom(site, p)) ++atoms;
      r.expect(x.orbits().size() == 1, label(g.file) + ": coset action is not transitive");
    }
    r.expect(atoms == brute, label(g.file) + ": " + std::to_string(atoms) +
                                 " atomic G-sets vs " + std::to_string(brute) + " classes");
    auto cat = std::make_shared<const Category>(group_category(*g.group));
    int enumerated = static_cast<int>(enumerate_atoms({cat, atomic_topology(*cat)}).size());
    r.expect(enumerated == brute, label(g.file) + ": " + std::to_string(enumerated) +
                                      " atoms found by subsheaf search vs " +
                                      std::to_string(brute));
  }
}

void check_gset_sheaves(const Corpus& corpus, CheckReport& r) {
  auto verify = [&](const GSet& x, const std::string& what) {
    auto [cat, p] = gset_as_presheaf(x);
    Topology t = atomic_topology(*cat);
    r.expect(oracle::is_sheaf(*cat, oracle::from_topology(*cat, t), p), what + ": not a sheaf");
    r.expect(is_sheaf({cat, t}, p).ok, what + ": is_sheaf rejects it");
  };
  for (const auto& x : corpus.gsets) verify(x.gset, label(x.file));
  for (const auto& g : corpus.groups) {
    for (const auto& x : transitive_gsets(g.group)) verify(x, label(g.file) + " coset action");
  }
}

void check_orbit_type(const Corpus& corpus, CheckReport& r) {
  for (const auto* s : small_structures(corpus, 5)) {
    const Structure& m = s->structure;
    if (!is_homogeneous(m).ok) continue;
    PermGroup g = automorphisms(m);
    for (int k = 1; k <= 2; ++k) {
      for (const auto& orbit : orbits_on_tuples(g, k)) {
        std::set<std::vector<int>> members(orbit.begin(), orbit.end());
        for (const auto& b : tuples(m.size(), k)) {
          r.expect(same_type(m, orbit.front(), m, b) == (members.count(b) > 0),
                   s->name + ": orbit and type disagree");
        }
      }
    }
  }
}

void check_stabilizers(const Corpus& corpus, CheckReport& r) {
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (const auto& g : corpus.groups) groups.emplace_back(label(g.file), *g.group);
  for (const auto* s : small_structures(corpus, 5)) {
    groups.emplace_back(s->name + " Aut", automorphisms(s->structure));
  }
  for (const auto& [name, g] : groups) {
    r.expect(stabilizer_indices(g, {}).size() == static_cast<std::size_t>(g.order()),
             name + ": stabilizer of the empty tuple is not G");
    for (int k = 0; k < 2; ++k) {
      for (const auto& a : tuples(g.degree(), k)) {
        auto outer = stabilizer_indices(g, a);
        for (int x = 0; x < g.degree(); ++x) {
          auto longer = a;
          longer.push_back(x);
          auto inner = stabilizer_indices(g, longer);
          r.expect(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()),
                   name + ": stabilizers do not shrink");
        }
      }
    }
  }
}

// ------------------------------------------------------------------- cli

void check_determinism(const Corpus& corpus, CheckReport& r) {
  std::string first = corpus_snapshot(corpus).dump();
  std::string second = corpus_snapshot(corpus).dump();
  r.expect(first == second, "repeated snapshots differ");
}

}  // namespace

void CheckReport::expect(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  if (failures.size() < kMaxMessages) {
    failures.push_back(what);
  } else if (failures.size() == kMaxMessages) {
    failures.push_back("...");
  }
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"fincat.validate", 0, "every corpus file loads and every category validates", check_validate},
      {"fincat.roundtrip", 0, "categories round-trip through raw form and JSON", check_roundtrip},
      {"fincat.components", 0, "components match breadth-first search", check_components},
      {"fincat.components-refine", 0, "components of full subcategories refine", check_components_refine},
      {"fincat.ore", 0, "Ore test matches search and is rename-invariant", check_ore},
      {"sitecore.sieves", 0, "sieve enumeration matches subset search", check_sieves},
      {"sitecore.saturate-minimal", 1, "saturate yields the least topology", check_saturate_minimal},
      {"sitecore.saturate-laws", 0, "saturate is idempotent and monotone", check_saturate_laws},
      {"sitecore.atomic-ore", 2, "Ore gives non-empty covers; V is degenerate", check_atomic_ore},
      {"sitecore.nonore-connected", 2, "connected non-Ore categories reduce to nothing", check_nonore_connected},
      {"sitecore.dense", 3, "reduce_to_dense postconditions", check_dense},
      {"sitecore.induced", 0, "both induced topology readings agree on C'", check_induced_agree},
      {"sitecore.ideals", 0, "ideals are the unions of components", check_ideals},
      {"sitecore.ore-sieves-connected", 0, "non-empty sieves of Ore categories are connected", check_ore_sieves_connected},
      {"sheafkit.is-sheaf", 4, "is_sheaf matches family search", check_is_sheaf_oracle},
      {"sheafkit.sheafify", 4, "sheafification is a sheaf, unit iso iff sheaf, stable", check_sheafify},
      {"sheafkit.atoms", 5, "three atom characterizations agree", check_atoms},
      {"sheafkit.local-connectedness", 6, "constant sheaves iff connected representables", check_local_connectedness},
      {"sheafkit.remark", 0, "constant sheaf criteria via covering sieves", check_remark},
      {"sheafkit.boolean", 0, "subsheaf lattices on atomic sites are atomic Boolean", check_boolean},
      {"sheafkit.atom-transport", 7, "sheafifying an atom gives zero or an atom", check_atom_transport},
      {"sheafkit.completions", 8, "completions equal components of C'", check_completions},
      {"sheafkit.canonical", 0, "arrows between atoms are epi", check_canonical},
      {"modelkit.back-and-forth", 9, "back-and-forth matches bijection search", check_back_and_forth},
      {"modelkit.self-iso", 0, "every structure is isomorphic to itself", check_back_and_forth_self},
      {"modelkit.same-type", 0, "same_type is an equivalence relation", check_same_type_equivalence},
      {"modelkit.cardinality", 10, "cardinality sequents pin the size", check_cardinality},
      {"modelkit.homogeneous-pairs", 0, "partial isos between homogeneous models extend", check_homogeneous_pairs},
      {"modelkit.homogeneity", 11, "homogeneity, orbits and witnesses", check_homogeneity},
      {"gsets.automorphisms", 0, "automorphism groups match bijection search", check_automorphisms},
      {"gsets.subgroups", 12, "subgroups match subset search", check_subgroups},
      {"gsets.atoms", 12, "atomic G-sets match subgroup classes", check_gset_atoms},
      {"gsets.sheaves", 0, "G-sets are sheaves for the atomic topology", check_gset_sheaves},
      {"gsets.orbit-type", 0, "orbits on tuples match same_type", check_orbit_type},
      {"gsets.stabilizers", 0, "stabilizers shrink as tuples grow", check_stabilizers},
      {"cli.determinism", 13, "repeated runs give identical JSON", check_determinism},
  };
  return checks;
}

CheckReport run_check(const Check& check, const Corpus& corpus) {
  CheckReport report;
  report.id = check.id;
  report.criterion = check.criterion;
  report.title = check.title;
  auto start = std::chrono::steady_clock::now();
  try {
    check.run(corpus, report);
  } catch (const std::exception& e) {
    report.failures.push_back(std::string("exception: ") + e.what());
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json corpus_snapshot(const Corpus& corpus) {
  Json out = Json::object();
  for (const auto& c : corpus.categories) {
    const Category& cat = *c.category;
    DenseReduction d = reduce_to_dense(cat);
    out["categories"][c.name] = {{"atomic", to_json(cat, atomic_topology(cat))},
                                 {"components", connected_components(cat)},
                                 {"ideals", enumerate_ideals(cat)},
                                 {"dense", to_json(d.sub, d.topology)}};
  }
  for (const auto& s : corpus.sites) {
    Json atoms = Json::array();
    for (const auto& a : enumerate_atoms(s.site)) atoms.push_back(to_json(*a));
    out["sites"][s.name] = {{"topology", to_json(s.site.cat(), s.site.topology)}, {"atoms", atoms}};
  }
  for (const auto& p : corpus.presheaves) {
    Sheafification a = sheafify(p.site, p.presheaf);
    Json subs = Json::array();
    for (const auto& s : subsheaves(p.site, *a.sheaf)) subs.push_back(subpresheaf_to_json(*a.sheaf, s));
    out["presheaves"][p.name] = {{"sheaf", to_json(*a.sheaf)},
                                 {"unit", components_to_json(a.unit)},
                                 {"subsheaves", subs}};
  }
  for (const auto& s : corpus.structures) {
    out["structures"][s.name] = {{"automorphisms", to_json(automorphisms(s.structure))},
                                 {"homogeneous", is_homogeneous(s.structure).ok}};
  }
  for (const auto& g : corpus.groups) {
    Json sets = Json::array();
    for (const auto& x : transitive_gsets(g.group)) sets.push_back(to_json(x));
    out["groups"][g.name] = sets;
  }
  return out;
}

}  // namespace toposcalc
