#include "toposcalc/checks/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace toposcalc::oracle {

std::vector<std::vector<int>> components(const Category& cat) {
  const int n = cat.num_objects();
  std::vector<std::vector<int>> adj(n);
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    adj[cat.dom(f)].push_back(cat.cod(f));
    adj[cat.cod(f)].push_back(cat.dom(f));
  }
  std::vector<int> label(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    label[s] = static_cast<int>(out.size());
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (int y : adj[x]) {
        if (label[y] < 0) {
          label[y] = label[s];
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  return out;
}

bool right_ore(const Category& cat) {
  const int m = cat.num_morphisms();
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (cat.cod(f) != cat.cod(g)) continue;
      bool found = false;
      for (int p = 0; p < m && !found; ++p) {
        if (cat.cod(p) != cat.dom(f)) continue;
        for (int q = 0; q < m && !found; ++q) {
          if (cat.cod(q) != cat.dom(g) || cat.dom(q) != cat.dom(p)) continue;
          found = cat.compose(f, p) == cat.compose(g, q);
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::vector<ArrowList>> sieves(const Category& cat) {
  std::vector<std::vector<ArrowList>> out(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    std::vector<int> into;
    for (int f = 0; f < cat.num_morphisms(); ++f) {
      if (cat.cod(f) == c) into.push_back(f);
    }
    const std::size_t k = into.size();
    for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
      ArrowList s;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1UL << i)) s.insert(into[i]);
      }
      bool closed = true;
      for (int f : s) {
        for (int g = 0; g < cat.num_morphisms() && closed; ++g) {
          if (cat.cod(g) == cat.dom(f) && !s.count(cat.compose(f, g))) closed = false;
        }
      }
      if (closed) out[c].push_back(s);
    }
  }
  return out;
}

ArrowList pullback(const Category& cat, const ArrowList& s, int h) {
  ArrowList out;
  for (int g = 0; g < cat.num_morphisms(); ++g) {
    if (cat.cod(g) == cat.dom(h) && s.count(cat.compose(h, g))) out.insert(g);
  }
  return out;
}

namespace {

ArrowList maximal(const Category& cat, int c) {
  ArrowList s;
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    if (cat.cod(f) == c) s.insert(f);
  }
  return s;
}

bool transitivity_holds(const Category& cat, const Covers& covers,
                        const std::vector<std::vector<ArrowList>>& all) {
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& r : all[c]) {
      if (covers[c].count(r)) continue;
      for (const auto& s : covers[c]) {
        bool locally = std::all_of(s.begin(), s.end(), [&](int f) {
          return covers[cat.dom(f)].count(pullback(cat, r, f)) > 0;
        });
        if (locally) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_topology(const Category& cat, const Covers& covers) {
  for (int c = 0; c < cat.num_objects(); ++c) {
    if (!covers[c].count(maximal(cat, c))) return false;
    for (const auto& s : covers[c]) {
      for (int h = 0; h < cat.num_morphisms(); ++h) {
        if (cat.cod(h) == c && !covers[cat.dom(h)].count(pullback(cat, s, h))) {
          return false;
        }
      }
    }
  }
  return transitivity_holds(cat, covers, sieves(cat));
}

std::vector<Covers> all_topologies(const Category& cat, int max_sieves) {
  auto all = sieves(cat);
  std::vector<std::pair<int, ArrowList>> optional;
  for (int c = 0; c < cat.num_objects(); ++c) {
    ArrowList top = maximal(cat, c);
    for (const auto& s : all[c]) {
      if (s != top) optional.emplace_back(c, s);
    }
  }
  std::vector<Covers> out;
  if (static_cast<int>(optional.size()) > max_sieves) return out;
  for (unsigned long mask = 0; mask < (1UL << optional.size()); ++mask) {
    Covers covers(cat.num_objects());
    for (int c = 0; c < cat.num_objects(); ++c) covers[c].insert(maximal(cat, c));
    for (std::size_t i = 0; i < optional.size(); ++i) {
      if (mask & (1UL << i)) covers[optional[i].first].insert(optional[i].second);
    }
    bool stable = true;
    for (int c = 0; c < cat.num_objects() && stable; ++c) {
      for (const auto& s : covers[c]) {
        for (int h = 0; h < cat.num_morphisms() && stable; ++h) {
          if (cat.cod(h) == c && !covers[cat.dom(h)].count(pullback(cat, s, h))) {
            stable = false;
          }
        }
        if (!stable) break;
      }
    }
    if (stable && transitivity_holds(cat, covers, all)) out.push_back(covers);
  }
  return out;
}

Covers least_topology(const std::vector<Covers>& topologies, const Covers& generators) {
  Covers result;
  bool first = true;
  for (const auto& t : topologies) {
    bool contains = true;
    for (std::size_t c = 0; c < generators.size() && contains; ++c) {
      for (const auto& s : generators[c]) {
        if (!t[c].count(s)) contains = false;
      }
    }
    if (!contains) continue;
    if (first) {
      result = t;
      first = false;
      continue;
    }
    for (std::size_t c = 0; c < result.size(); ++c) {
      std::set<ArrowList> keep;
      for (const auto& s : result[c]) {
        if (t[c].count(s)) keep.insert(s);
      }
      result[c] = keep;
    }
  }
  return result;
}

Covers from_topology(const Category& cat, const Topology& t) {
  Covers out(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : t.covers[c]) {
      ArrowList list;
      for (auto i = s.find_first(); i != ArrowSet::npos; i = s.find_next(i)) {
        list.insert(static_cast<int>(i));
      }
      out[c].insert(list);
    }
  }
  return out;
}

Topology to_topology(const Category& cat, const Covers& covers) {
  Topology t;
  t.covers.resize(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : covers[c]) {
      ArrowSet bits = cat.empty_set();
      for (int f : s) bits.set(f);
      t.covers[c].insert(bits);
    }
  }
  return t;
}

Covers nonempty_sieves(const Category& cat) {
  auto all = sieves(cat);
  Covers out(cat.num_objects());
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : all[c]) {
      if (!s.empty()) out[c].insert(s);
    }
  }
  return out;
}

namespace {

// Counts amalgamations of every matching family over `arrows`, assigning
// arrows in order and checking each constraint once both ends are set.
bool families_amalgamate(const Category& cat, const Presheaf& f, int c,
                         const std::vector<int>& arrows, std::vector<int>& family,
                         std::size_t i) {
  if (i == arrows.size()) {
    int count = 0;
    for (int y = 0; y < f.size(c); ++y) {
      bool ok = true;
      for (std::size_t j = 0; j < arrows.size() && ok; ++j) {
        ok = f.act(arrows[j], y) == family[j];
      }
      if (ok) ++count;
    }
    return count == 1;
  }
  const int a = arrows[i];
  for (int x = 0; x < f.size(cat.dom(a)); ++x) {
    family[i] = x;
    bool matching = true;
    for (std::size_t j = 0; j <= i && matching; ++j) {
      for (std::size_t k = 0; k <= i && matching; ++k) {
        if (j != i && k != i) continue;
        // if arrows[k] = arrows[j] ∘ g, the value at k is the restriction
        const int fj = arrows[j];
        const int fk = arrows[k];
        for (int g = 0; g < cat.num_morphisms(); ++g) {
          if (cat.cod(g) == cat.dom(fj) && cat.compose(fj, g) == fk &&
              f.act(g, family[j]) != family[k]) {
            matching = false;
            break;
          }
        }
      }
    }
    if (matching && !families_amalgamate(cat, f, c, arrows, family, i + 1)) {
      return false;
    }
  }
  family[i] = -1;
  return true;
}

}  // namespace

bool is_sheaf(const Category& cat, const Covers& covers, const Presheaf& f) {
  for (int c = 0; c < cat.num_objects(); ++c) {
    for (const auto& s : covers[c]) {
      std::vector<int> arrows(s.begin(), s.end());
      std::vector<int> family(arrows.size(), -1);
      if (!families_amalgamate(cat, f, c, arrows, family, 0)) return false;
    }
  }
  return true;
}

bool is_isomorphism(const Structure& m, const Structure& n,
                    const std::vector<int>& map) {
  if (m.size() != n.size() || static_cast<int>(map.size()) != m.size()) return false;
  std::vector<int> sorted = map;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m.size(); ++i) {
    if (sorted[i] != i) return false;
  }
  for (const auto& [name, value] : m.constants()) {
    if (map[value] != n.constant(name)) return false;
  }
  for (const auto& [name, arity] : m.signature().relations) {
    const auto& rm = m.relation(name);
    const auto& rn = n.relation(name);
    if (rm.size() != rn.size()) return false;
    for (const auto& t : rm) {
      Tuple img;
      for (int x : t) img.push_back(map[x]);
      if (!rn.count(img)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> isomorphisms(const Structure& m, const Structure& n) {
  std::vector<std::vector<int>> out;
  if (m.size() != n.size() || !(m.signature() == n.signature())) return out;
  std::vector<int> map(m.size());
  std::iota(map.begin(), map.end(), 0);
  do {
    if (is_isomorphism(m, n, map)) out.push_back(map);
  } while (std::next_permutation(map.begin(), map.end()));
  return out;
}

std::vector<std::set<int>> subgroups(const PermGroup& g) {
  const int n = g.order();
  std::vector<std::set<int>> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::set<int> h;
    for (int i = 0; i < n; ++i) {
      if (mask & (1UL << i)) h.insert(i);
    }
    if (!h.count(g.identity())) continue;
    bool closed = true;
    for (int a : h) {
      for (int b : h) {
        if (!h.count(g.find(compose(g.element(a), g.element(b))).value())) {
          closed = false;
        }
      }
    }
    if (closed) out.push_back(h);
  }
  return out;
}

int subgroup_class_count(const PermGroup& g) {
  auto subs = subgroups(g);
  std::vector<int> cls(subs.size(), -1);
  int count = 0;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = count;
    for (int x = 0; x < g.order(); ++x) {
      const Perm& p = g.element(x);
      Perm pinv = inverse(p);
      std::set<int> conj;
      for (int h : subs[i]) {
        conj.insert(g.find(compose(compose(p, g.element(h)), pinv)).value());
      }
      for (std::size_t j = 0; j < subs.size(); ++j) {
        if (subs[j] == conj) cls[j] = count;
      }
    }
    ++count;
  }
  return count;
}

}  // namespace toposcalc::oracle
