#include "toposcalc/sheaf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace toposcalc {

namespace {

std::string padded(const std::string& prefix, std::size_t i, std::size_t n) {
  std::string digits = std::to_string(i);
  std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  return prefix + std::string(width - std::min(width, digits.size()), '0') +
         digits;
}

ArrowSet support(const Category& cat, const Family& family) {
  ArrowSet s = cat.empty_set();
  for (std::size_t f = 0; f < family.size(); ++f) {
    if (family[f] >= 0) s.set(f);
  }
  return s;
}

std::string family_name(const Presheaf& f, const Family& family) {
  const Category& c = f.cat();
  std::string out = "{";
  bool first = true;
  for (std::size_t m = 0; m < family.size(); ++m) {
    if (family[m] < 0) continue;
    if (!first) out += ",";
    first = false;
    out += c.morphism_id(static_cast<int>(m)) + ":" +
           f.element(c.dom(static_cast<int>(m)), family[m]);
  }
  return out + "}";
}

// Orbit of a single element as a subpresheaf.
Subpresheaf orbit(const Presheaf& f, int c, int x) {
  Subpresheaf s = empty_subpresheaf(f);
  const Category& k = f.cat();
  for (int m : k.arrows_into(c)) s.members[k.dom(m)][f.act(m, x)] = true;
  return s;
}

}  // namespace

void for_each_matching_family(const Presheaf& f, int c, const ArrowSet& s,
                              const std::function<bool(const Family&)>& visit) {
  const Category& k = f.cat();
  auto arrows = to_indices(s);
  Family family(k.num_morphisms(), -1);
  std::vector<int> trail;
  bool stop = false;

  auto assign = [&](int m, int v) {
    if (family[m] >= 0) return family[m] == v;
    family[m] = v;
    trail.push_back(m);
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      family[trail.back()] = -1;
      trail.pop_back();
    }
  };

  std::function<void(std::size_t)> step = [&](std::size_t i) {
    while (i < arrows.size() && family[arrows[i]] >= 0) ++i;
    if (i == arrows.size()) {
      stop = visit(family);
      return;
    }
    int a = arrows[i];
    for (int v = 0; v < f.size(k.dom(a)) && !stop; ++v) {
      std::size_t mark = trail.size();
      bool ok = assign(a, v);
      for (int g : k.arrows_into(k.dom(a))) {
        if (!ok) break;
        ok = assign(k.compose(a, g), f.act(g, v));
      }
      if (ok) step(i + 1);
      undo(mark);
    }
  };
  (void)c;
  step(0);
}

SheafCheck is_sheaf(const Site& site, const Presheaf& f) {
  const Category& k = site.cat();
  SheafCheck result;
  for (int c = 0; c < k.num_objects() && result.ok; ++c) {
    for (const auto& s : site.topology.covers[c]) {
      auto arrows = to_indices(s);
      for_each_matching_family(f, c, s, [&](const Family& family) {
        int amalgamations = 0;
        for (int y = 0; y < f.size(c); ++y) {
          bool fits = std::all_of(arrows.begin(), arrows.end(), [&](int m) {
            return f.act(m, y) == family[m];
          });
          if (fits) ++amalgamations;
        }
        if (amalgamations != 1) {
          result.ok = false;
          result.failure = SheafFailure{c, s, family, amalgamations};
          return true;
        }
        return false;
      });
      if (!result.ok) break;
    }
  }
  return result;
}

Sheafification plus_construction(const Site& site,
                                 const std::shared_ptr<const Presheaf>& fp) {
  const Presheaf& f = *fp;
  const Category& k = site.cat();
  const int n = k.num_objects();

  std::vector<std::vector<Family>> families(n);
  std::vector<std::map<Family, int>> family_index(n);
  std::vector<std::vector<int>> class_of(n);  // family -> class
  std::vector<std::vector<int>> rep(n);       // class -> representative family
  std::vector<std::vector<std::string>> names(n);

  for (int c = 0; c < n; ++c) {
    for (const auto& s : site.topology.covers[c]) {
      for_each_matching_family(f, c, s, [&](const Family& family) {
        family_index[c].emplace(family, static_cast<int>(families[c].size()));
        families[c].push_back(family);
        return false;
      });
    }
    const auto& fams = families[c];
    const int m = static_cast<int>(fams.size());
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (find(i) == find(j)) continue;
        ArrowSet agree = k.empty_set();
        for (int a : k.arrows_into(c)) {
          if (fams[i][a] >= 0 && fams[i][a] == fams[j][a]) agree.set(a);
        }
        if (site.topology.covers_sieve(c, agree)) {
          parent[std::max(find(i), find(j))] = std::min(find(i), find(j));
        }
      }
    }
    // Representative: least indexing sieve, then least name.
    std::map<int, int> root_class;
    class_of[c].resize(m);
    std::vector<std::string> fam_names(m);
    for (int i = 0; i < m; ++i) fam_names[i] = family_name(f, fams[i]);
    for (int i = 0; i < m; ++i) {
      int r = find(i);
      auto [it, fresh] = root_class.emplace(r, static_cast<int>(rep[c].size()));
      if (fresh) rep[c].push_back(i);
      class_of[c][i] = it->second;
      int& best = rep[c][it->second];
      ArrowSet si = support(k, fams[i]);
      ArrowSet sb = support(k, fams[best]);
      if (SieveLess{}(si, sb) ||
          (si == sb && fam_names[i] < fam_names[best])) {
        best = i;
      }
    }
    for (int r : rep[c]) names[c].push_back(fam_names[r]);
  }

  std::vector<std::vector<int>> actions(k.num_morphisms());
  for (int h = 0; h < k.num_morphisms(); ++h) {
    int c = k.cod(h);
    int d = k.dom(h);
    for (int r : rep[c]) {
      const Family& x = families[c][r];
      Family pulled(k.num_morphisms(), -1);
      for (int g : k.arrows_into(d)) {
        int hg = k.compose(h, g);
        if (x[hg] >= 0) pulled[g] = x[hg];
      }
      actions[h].push_back(class_of[d][family_index[d].at(pulled)]);
    }
  }

  auto plus = std::make_shared<const Presheaf>(
      Presheaf::build(fp->category(), names, std::move(actions)));

  NatTrans unit{fp, plus, {}};
  unit.components.resize(n);
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < f.size(c); ++x) {
      Family family(k.num_morphisms(), -1);
      for (int a : k.arrows_into(c)) family[a] = f.act(a, x);
      int cls = class_of[c][family_index[c].at(family)];
      unit.components[c].push_back(*plus->find_element(c, names[c][cls]));
    }
  }
  return {plus, std::move(unit)};
}

Sheafification sheafify(const Site& site,
                        const std::shared_ptr<const Presheaf>& f) {
  auto once = plus_construction(site, f);
  auto twice = plus_construction(site, once.sheaf);
  NatTrans unit{f, twice.sheaf, {}};
  unit.components.resize(site.cat().num_objects());
  for (int c = 0; c < site.cat().num_objects(); ++c) {
    for (int y : once.unit.components[c]) {
      unit.components[c].push_back(twice.unit.components[c][y]);
    }
  }
  return {twice.sheaf, std::move(unit)};
}

Sheafification sheafify(const Site& site, const Presheaf& f) {
  return sheafify(site, std::make_shared<const Presheaf>(f));
}

Subpresheaf closure(const Site& site, const Presheaf& f, const Subpresheaf& s) {
  const Category& k = site.cat();
  Subpresheaf out = empty_subpresheaf(f);
  for (int c = 0; c < k.num_objects(); ++c) {
    for (int x = 0; x < f.size(c); ++x) {
      ArrowSet into = k.empty_set();
      for (int m : k.arrows_into(c)) {
        if (s.contains(k.dom(m), f.act(m, x))) into.set(m);
      }
      out.members[c][x] = site.topology.covers_sieve(c, into);
    }
  }
  return out;
}

Subpresheaf zero_subsheaf(const Site& site, const Presheaf& f) {
  return closure(site, f, empty_subpresheaf(f));
}

bool is_zero_sheaf(const Site& site, const Presheaf& f) {
  return zero_subsheaf(site, f) == full_subpresheaf(f);
}

std::vector<Subpresheaf> subsheaves(const Site& site, const Presheaf& f) {
  const Category& k = site.cat();
  std::vector<std::pair<int, int>> cells;
  std::vector<Subpresheaf> orbits;
  for (int c = 0; c < k.num_objects(); ++c) {
    for (int x = 0; x < f.size(c); ++x) {
      cells.push_back({c, x});
      orbits.push_back(orbit(f, c, x));
    }
  }
  Subpresheaf included = empty_subpresheaf(f);
  Subpresheaf excluded = empty_subpresheaf(f);
  std::vector<Subpresheaf> out;

  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == cells.size()) {
      if (closure(site, f, included) == included) out.push_back(included);
      return;
    }
    auto [c, x] = cells[i];
    if (included.contains(c, x)) {
      visit(i + 1);
      return;
    }
    excluded.members[c][x] = true;
    visit(i + 1);
    excluded.members[c][x] = false;
    if (intersect(orbits[i], excluded).count() == 0) {
      Subpresheaf saved = included;
      included = unite(included, orbits[i]);
      visit(i + 1);
      included = std::move(saved);
    }
  };
  visit(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ca = a.count();
    int cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

bool is_atom(const Site& site, const Presheaf& f) {
  return subsheaves(site, f).size() == 2;
}

Subpresheaf image(const NatTrans& alpha) {
  Subpresheaf s = empty_subpresheaf(*alpha.target);
  for (std::size_t c = 0; c < alpha.components.size(); ++c) {
    for (int y : alpha.components[c]) s.members[c][y] = true;
  }
  return s;
}

bool is_epi(const Site& site, const NatTrans& alpha) {
  check_naturality(alpha);
  return closure(site, *alpha.target, image(alpha)) ==
         full_subpresheaf(*alpha.target);
}

bool has_connected_covers(const Site& site) {
  const Category& k = site.cat();
  for (int c = 0; c < k.num_objects(); ++c) {
    for (const auto& s : site.topology.covers[c]) {
      if (!sieve_is_connected(k, {c, s})) return false;
    }
  }
  return true;
}

std::vector<Subpresheaf> connected_components_sheaf(const Site& site,
                                                    const Presheaf& f) {
  if (!has_connected_covers(site)) {
    throw Error(ErrorKind::SiteNotLocallyConnected,
                "some covering sieve is empty or disconnected");
  }
  const Category& k = site.cat();
  std::vector<int> offset(k.num_objects() + 1, 0);
  for (int c = 0; c < k.num_objects(); ++c) offset[c + 1] = offset[c] + f.size(c);
  std::vector<int> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int m = 0; m < k.num_morphisms(); ++m) {
    for (int x = 0; x < f.size(k.cod(m)); ++x) {
      int a = find(offset[k.cod(m)] + x);
      int b = find(offset[k.dom(m)] + f.act(m, x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<int, Subpresheaf> by_root;
  for (int c = 0; c < k.num_objects(); ++c) {
    for (int x = 0; x < f.size(c); ++x) {
      int r = find(offset[c] + x);
      auto it = by_root.find(r);
      if (it == by_root.end()) it = by_root.emplace(r, empty_subpresheaf(f)).first;
      it->second.members[c][x] = true;
    }
  }
  std::vector<Subpresheaf> out;
  for (auto& [r, s] : by_root) out.push_back(std::move(s));
  return out;
}

bool is_connected_object(const Site& site, const Presheaf& f) {
  return connected_components_sheaf(site, f).size() == 1;
}

bool is_indecomposable(const Site& site, const Presheaf& f) {
  Subpresheaf zero = zero_subsheaf(site, f);
  Subpresheaf full = full_subpresheaf(f);
  if (zero == full) return false;
  auto subs = subsheaves(site, f);
  for (const auto& u : subs) {
    if (u == zero || u == full) continue;
    for (const auto& v : subs) {
      if (intersect(u, v) == zero && closure(site, f, unite(u, v)) == full) {
        return false;
      }
    }
  }
  return true;
}

bool is_atomic_site(const Site& site) {
  return site.topology == atomic_topology(site.cat());
}

TerminalDecomposition terminal_decomposition(const Site& site) {
  if (!is_atomic_site(site)) {
    throw Error(ErrorKind::NotAtomicSite,
                "the topology is not the atomic topology of its category");
  }
  auto terminal = sheafify(site, constant_presheaf(site.category, {"*"})).sheaf;
  auto subs = subsheaves(site, *terminal);
  Subpresheaf zero = zero_subsheaf(site, *terminal);
  TerminalDecomposition out{terminal, {}};
  for (const auto& s : subs) {
    if (s == zero) continue;
    bool minimal = std::none_of(subs.begin(), subs.end(), [&](const auto& t) {
      return t != zero && t != s && is_subset(t, s);
    });
    if (minimal) out.atoms.push_back(s);
  }
  return out;
}

Subpresheaf generated_subsheaf(const Site& site, const Presheaf& f, int c, int x) {
  if (c < 0 || c >= site.cat().num_objects() || x < 0 || x >= f.size(c)) {
    throw Error(ErrorKind::UnknownElement, "no such element");
  }
  return closure(site, f, orbit(f, c, x));
}

std::vector<std::shared_ptr<const Presheaf>> enumerate_atoms(const Site& site) {
  std::vector<std::shared_ptr<const Presheaf>> out;
  for (int c = 0; c < site.cat().num_objects(); ++c) {
    for (const auto& q : quotients(yoneda(site.category, c))) {
      auto a = sheafify(site, q).sheaf;
      if (!is_atom(site, *a)) continue;
      bool known = std::any_of(out.begin(), out.end(), [&](const auto& b) {
        return are_isomorphic(*a, *b);
      });
      if (!known) out.push_back(a);
    }
  }
  return out;
}

CanonicalSite restricted_canonical_topology(
    const Site& site, const std::vector<std::shared_ptr<const Presheaf>>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (!is_sheaf(site, *atoms[i]).ok || !is_atom(site, *atoms[i])) {
      throw Error(ErrorKind::NotAnAtom,
                  "member " + std::to_string(i) + " is not an atom");
    }
  }
  const std::size_t n = atoms.size();
  std::vector<std::string> objects;
  for (std::size_t i = 0; i < n; ++i) objects.push_back(padded("L", i, n));

  // hom[i][j] = transformations atoms[i] -> atoms[j]
  std::vector<std::vector<std::vector<NatTrans>>> hom(
      n, std::vector<std::vector<NatTrans>>(n));
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom[i][j] = natural_transformations(atoms[i], atoms[j]);
      total += hom[i][j].size();
    }
  }

  RawCategory raw;
  raw.objects = objects;
  std::vector<std::vector<std::vector<std::string>>> ids(
      n, std::vector<std::vector<std::string>>(n));
  std::size_t counter = 0;
  std::map<std::string, NatTrans> by_id;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& alpha : hom[i][j]) {
        std::string id = padded("m", counter++, total);
        ids[i][j].push_back(id);
        raw.morphisms.push_back({id, objects[i], objects[j]});
        by_id.emplace(id, alpha);
      }
    }
  }
  auto find_in = [&](std::size_t i, std::size_t j,
                     const std::vector<std::vector<int>>& comp) {
    for (std::size_t k = 0; k < hom[i][j].size(); ++k) {
      if (hom[i][j][k].components == comp) return ids[i][j][k];
    }
    throw std::logic_error("composite transformation not enumerated");
  };
  const int objs = site.cat().num_objects();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<int>> id(objs);
    for (int c = 0; c < objs; ++c) {
      id[c].resize(atoms[i]->size(c));
      std::iota(id[c].begin(), id[c].end(), 0);
    }
    raw.identities[objects[i]] = find_in(i, i, id);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t a = 0; a < hom[i][j].size(); ++a) {
          for (std::size_t b = 0; b < hom[j][l].size(); ++b) {
            const auto& f = hom[i][j][a].components;
            const auto& g = hom[j][l][b].components;
            std::vector<std::vector<int>> gf(objs);
            for (int c = 0; c < objs; ++c) {
              for (int y : f[c]) gf[c].push_back(g[c][y]);
            }
            raw.composition.push_back({ids[j][l][b], ids[i][j][a], find_in(i, l, gf)});
          }
        }
      }
    }
  }

  CanonicalSite out;
  auto cat = std::make_shared<const Category>(Category::build(raw));
  out.category = cat;
  for (int m = 0; m < cat->num_morphisms(); ++m) {
    const NatTrans& alpha = by_id.at(cat->morphism_id(m));
    out.arrows.push_back(alpha);
    out.arrow_is_epi.push_back(is_epi(site, alpha));
  }
  out.topology.covers.resize(cat->num_objects());
  for (int j = 0; j < cat->num_objects(); ++j) {
    const Presheaf& target = *atoms[j];
    for (auto& s : enumerate_sieves(*cat, j)) {
      Subpresheaf joint = empty_subpresheaf(target);
      for (int m : to_indices(s)) joint = unite(joint, image(out.arrows[m]));
      if (closure(site, target, joint) == full_subpresheaf(target)) {
        out.topology.covers[j].insert(std::move(s));
      }
    }
  }
  return out;
}

}  // namespace toposcalc
