#include "toposcalc/site.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace toposcalc {

bool SieveLess::operator()(const ArrowSet& a, const ArrowSet& b) const {
  auto ca = a.count();
  auto cb = b.count();
  if (ca != cb) return ca < cb;
  auto i = a.find_first();
  auto j = b.find_first();
  while (i != ArrowSet::npos && j != ArrowSet::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return false;
}

bool Topology::refines(const Topology& other) const {
  if (covers.size() != other.covers.size()) return false;
  for (std::size_t c = 0; c < covers.size(); ++c) {
    for (const auto& s : covers[c]) {
      if (!other.covers[c].count(s)) return false;
    }
  }
  return true;
}

std::vector<int> to_indices(const ArrowSet& s) {
  std::vector<int> out;
  for (auto i = s.find_first(); i != ArrowSet::npos; i = s.find_next(i)) {
    out.push_back(static_cast<int>(i));
  }
  return out;
}

bool is_sieve(const Category& cat, int base, const ArrowSet& arrows) {
  if (static_cast<int>(arrows.size()) != cat.num_morphisms()) return false;
  for (int f : to_indices(arrows)) {
    if (cat.cod(f) != base) return false;
    for (int g : cat.arrows_into(cat.dom(f))) {
      if (!arrows.test(cat.compose(f, g))) return false;
    }
  }
  return true;
}

ArrowSet generated_sieve(const Category& cat, int base,
                         const std::vector<int>& generators) {
  ArrowSet out = cat.empty_set();
  for (int f : generators) {
    if (cat.cod(f) != base) {
      throw Error(ErrorKind::BaseMismatch,
                  "generator '" + cat.morphism_id(f) + "' does not land in '" +
                      cat.object_id(base) + "'");
    }
    for (int g : cat.arrows_into(cat.dom(f))) out.set(cat.compose(f, g));
  }
  return out;
}

ArrowSet maximal_sieve(const Category& cat, int c) {
  ArrowSet out = cat.empty_set();
  for (int f : cat.arrows_into(c)) out.set(f);
  return out;
}

std::vector<ArrowSet> enumerate_sieves(const Category& cat, int c) {
  const auto& arrows = cat.arrows_into(c);
  std::vector<ArrowSet> down;
  for (int f : arrows) down.push_back(generated_sieve(cat, c, {f}));

  std::vector<ArrowSet> out;
  ArrowSet included = cat.empty_set();
  ArrowSet excluded = cat.empty_set();
  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == arrows.size()) {
      out.push_back(included);
      return;
    }
    int f = arrows[i];
    if (included.test(f)) {
      visit(i + 1);
      return;
    }
    excluded.set(f);
    visit(i + 1);
    excluded.reset(f);
    if (!down[i].intersects(excluded)) {
      ArrowSet saved = included;
      included |= down[i];
      visit(i + 1);
      included = std::move(saved);
    }
  };
  visit(0);
  std::sort(out.begin(), out.end(), SieveLess{});
  return out;
}

ArrowSet pullback_sieve(const Category& cat, const Sieve& sieve, int h) {
  if (cat.cod(h) != sieve.base) {
    throw Error(ErrorKind::BaseMismatch,
                "cannot pull back a sieve on '" + cat.object_id(sieve.base) +
                    "' along '" + cat.morphism_id(h) + "'");
  }
  ArrowSet out = cat.empty_set();
  for (int g : cat.arrows_into(cat.dom(h))) {
    if (sieve.arrows.test(cat.compose(h, g))) out.set(g);
  }
  return out;
}

TopologyCheck is_topology(const Category& cat, const Topology& topology) {
  TopologyCheck result;
  auto fail = [&result](std::string axiom, int c) {
    result.ok = false;
    result.axiom = std::move(axiom);
    result.object = c;
    return result;
  };
  if (static_cast<int>(topology.covers.size()) != cat.num_objects()) {
    return fail("shape", -1);
  }
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : topology.covers[c]) {
      if (!is_sieve(cat, c, s)) {
        result.sieve = s;
        return fail("sieve", c);
      }
    }
  }
  for (int c = 0; c < cat.num_objects(); ++c) {
    if (!topology.covers_sieve(c, maximal_sieve(cat, c))) {
      return fail("maximality", c);
    }
  }
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : topology.covers[c]) {
      for (int h : cat.arrows_into(c)) {
        if (!topology.covers_sieve(cat.dom(h),
                                   pullback_sieve(cat, {c, s}, h))) {
          result.sieve = s;
          result.arrow = h;
          return fail("stability", c);
        }
      }
    }
  }
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& r : enumerate_sieves(cat, c)) {
      if (topology.covers_sieve(c, r)) continue;
      for (const auto& s : topology.covers[c]) {
        bool locally = true;
        for (int f : to_indices(s)) {
          if (!topology.covers_sieve(cat.dom(f),
                                     pullback_sieve(cat, {c, r}, f))) {
            locally = false;
            break;
          }
        }
        if (locally) {
          result.sieve = r;
          result.cover = s;
          return fail("transitivity", c);
        }
      }
    }
  }
  return result;
}

Topology trivial_topology(const Category& cat) {
  Topology t;
  t.covers.resize(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    t.covers[c].insert(maximal_sieve(cat, c));
  }
  return t;
}

Topology degenerate_topology(const Category& cat) {
  Topology t;
  t.covers.resize(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (auto& s : enumerate_sieves(cat, c)) t.covers[c].insert(std::move(s));
  }
  return t;
}

Topology nonempty_sieve_family(const Category& cat) {
  Topology t;
  t.covers.resize(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (auto& s : enumerate_sieves(cat, c)) {
      if (s.any()) t.covers[c].insert(std::move(s));
    }
  }
  return t;
}

Topology saturate(const Category& cat, const std::vector<Sieve>& generators) {
  Topology t = trivial_topology(cat);
  for (const auto& g : generators) {
    if (!is_sieve(cat, g.base, g.arrows)) {
      throw Error(ErrorKind::MalformedInput,
                  "generator on '" + cat.object_id(g.base) + "' is not a sieve");
    }
    t.covers[g.base].insert(g.arrows);
  }
  std::vector<std::vector<ArrowSet>> sieves;
  for (int c = 0; c < cat.num_objects(); ++c) {
    sieves.push_back(enumerate_sieves(cat, c));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    // Stability pass.
    for (int c = 0; c < cat.num_objects(); ++c) {
      std::vector<ArrowSet> snapshot(t.covers[c].begin(), t.covers[c].end());
      for (const auto& s : snapshot) {
        for (int h : cat.arrows_into(c)) {
          if (t.covers[cat.dom(h)].insert(pullback_sieve(cat, {c, s}, h))
                  .second) {
            changed = true;
          }
        }
      }
    }
    // Transitivity pass.
    for (int c = 0; c < cat.num_objects(); ++c) {
      for (const auto& r : sieves[c]) {
        if (t.covers_sieve(c, r)) continue;
        for (const auto& s : t.covers[c]) {
          bool locally = true;
          for (int f : to_indices(s)) {
            if (!t.covers_sieve(cat.dom(f), pullback_sieve(cat, {c, r}, f))) {
              locally = false;
              break;
            }
          }
          if (locally) {
            t.covers[c].insert(r);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return t;
}

std::vector<Sieve> all_covers(const Topology& topology) {
  std::vector<Sieve> out;
  for (std::size_t c = 0; c < topology.covers.size(); ++c) {
    for (const auto& s : topology.covers[c]) {
      out.push_back({static_cast<int>(c), s});
    }
  }
  return out;
}

Topology atomic_topology(const Category& cat) {
  return saturate(cat, all_covers(nonempty_sieve_family(cat)));
}

std::vector<int> empty_covered_objects(const Category& cat,
                                       const Topology& topology) {
  std::vector<int> out;
  for (int c = 0; c < cat.num_objects(); ++c) {
    if (topology.covers_sieve(c, cat.empty_set())) out.push_back(c);
  }
  return out;
}

bool is_trivial_topos(const Category& cat, const Topology& topology) {
  return static_cast<int>(empty_covered_objects(cat, topology).size()) ==
         cat.num_objects();
}

namespace {

// Maps each morphism of `sub` to its index in `cat`; throws unless `sub` is a
// full subcategory of `cat` with the inherited composition.
std::vector<int> embed_full(const Category& cat, const Category& sub) {
  auto fail = [](const std::string& why) {
    throw Error(ErrorKind::NotFullSubcategory, why);
  };
  std::vector<int> objects;
  for (int c = 0; c < sub.num_objects(); ++c) {
    auto o = cat.find_object(sub.object_id(c));
    if (!o) fail("object '" + sub.object_id(c) + "' is not in the category");
    objects.push_back(*o);
  }
  std::vector<int> arrows;
  for (int f = 0; f < sub.num_morphisms(); ++f) {
    auto g = cat.find_morphism(sub.morphism_id(f));
    if (!g || cat.dom(*g) != objects[sub.dom(f)] ||
        cat.cod(*g) != objects[sub.cod(f)]) {
      fail("morphism '" + sub.morphism_id(f) + "' is not inherited");
    }
    arrows.push_back(*g);
  }
  for (int a = 0; a < sub.num_objects(); ++a) {
    for (int b = 0; b < sub.num_objects(); ++b) {
      if (cat.hom(objects[a], objects[b]).size() != sub.hom(a, b).size()) {
        fail("hom-set " + sub.object_id(a) + "->" + sub.object_id(b) +
             " is not full");
      }
    }
  }
  for (int g = 0; g < sub.num_morphisms(); ++g) {
    for (int f = 0; f < sub.num_morphisms(); ++f) {
      int r = sub.compose(g, f);
      if (r >= 0 && cat.compose(arrows[g], arrows[f]) != arrows[r]) {
        fail("composition is not inherited");
      }
    }
  }
  return arrows;
}

}  // namespace

Topology induced_topology(const Category& cat, const Topology& topology,
                          const Category& sub) {
  auto arrows = embed_full(cat, sub);
  Topology t;
  t.covers.resize(sub.num_objects());
  for (int c = 0; c < sub.num_objects(); ++c) {
    int ambient = cat.object_index(sub.object_id(c));
    for (auto& r : enumerate_sieves(sub, c)) {
      std::vector<int> gens;
      for (int f : to_indices(r)) gens.push_back(arrows[f]);
      if (topology.covers_sieve(ambient, generated_sieve(cat, ambient, gens))) {
        t.covers[c].insert(std::move(r));
      }
    }
  }
  return t;
}

Topology induced_topology_by_restriction(const Category& cat,
                                         const Topology& topology,
                                         const Category& sub) {
  auto arrows = embed_full(cat, sub);
  std::vector<int> back(cat.num_morphisms(), -1);
  for (int f = 0; f < sub.num_morphisms(); ++f) back[arrows[f]] = f;
  Topology t;
  t.covers.resize(sub.num_objects());
  for (int c = 0; c < sub.num_objects(); ++c) {
    int ambient = cat.object_index(sub.object_id(c));
    for (const auto& h : topology.covers[ambient]) {
      ArrowSet r = sub.empty_set();
      for (int f : to_indices(h)) {
        if (back[f] >= 0) r.set(back[f]);
      }
      t.covers[c].insert(std::move(r));
    }
  }
  return t;
}

DenseReduction reduce_to_dense(const Category& cat) {
  Topology atomic = atomic_topology(cat);
  DenseReduction out{{}, full_subcategory(cat, std::vector<int>{}), {}};
  for (int c = 0; c < cat.num_objects(); ++c) {
    if (!atomic.covers_sieve(c, cat.empty_set())) out.retained.push_back(c);
  }
  out.sub = full_subcategory(cat, out.retained);
  out.topology = induced_topology(cat, atomic, out.sub);

  if (!is_right_ore(out.sub).holds) {
    throw std::logic_error("reduce_to_dense: dense part is not right Ore");
  }
  if (!(out.topology == nonempty_sieve_family(out.sub))) {
    throw std::logic_error(
        "reduce_to_dense: induced topology differs from the non-empty sieves");
  }
  std::vector<bool> kept(cat.num_objects(), false);
  for (int c : out.retained) kept[c] = true;
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    if (kept[cat.dom(f)] != kept[cat.cod(f)]) {
      throw std::logic_error(
          "reduce_to_dense: dense part is not a union of components");
    }
  }
  return out;
}

std::vector<std::vector<int>> enumerate_ideals(const Category& cat) {
  auto components = connected_components(cat);
  const std::size_t k = components.size();
  std::vector<std::vector<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> ideal;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ideal.insert(ideal.end(), components[i].begin(), components[i].end());
      }
    }
    std::sort(ideal.begin(), ideal.end());
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool sieve_is_connected(const Category& cat, const Sieve& sieve) {
  auto members = to_indices(sieve.arrows);
  if (members.empty()) return false;
  std::vector<int> parent(cat.num_morphisms());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int f : members) {
    for (int g : cat.arrows_into(cat.dom(f))) {
      int a = find(f);
      int b = find(cat.compose(f, g));
      if (a != b) parent[b] = a;
    }
  }
  int root = find(members.front());
  return std::all_of(members.begin(), members.end(),
                     [&](int f) { return find(f) == root; });
}

}  // namespace toposcalc
