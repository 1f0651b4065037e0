#include "toposcalc/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toposcalc/isomorphism.hpp"

namespace toposcalc {

Perm compose(const Perm& g, const Perm& h) {
  Perm out(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) out[i] = g[h[i]];
  return out;
}

Perm inverse(const Perm& g) {
  Perm out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[g[i]] = static_cast<int>(i);
  return out;
}

PermGroup PermGroup::build(std::vector<std::string> points,
                           std::vector<Perm> elements) {
  const int n = static_cast<int>(points.size());
  if (std::set<std::string>(points.begin(), points.end()).size() != points.size()) {
    throw Error(ErrorKind::MalformedInput, "repeated point in degree set");
  }
  if (elements.empty()) {
    throw Error(ErrorKind::LawViolation, "group has no elements");
  }
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const Perm& p = elements[i];
    std::vector<bool> hit(n, false);
    bool ok = static_cast<int>(p.size()) == n;
    for (int x : p) {
      if (!ok || x < 0 || x >= n || hit[x]) {
        ok = false;
        break;
      }
      hit[x] = true;
    }
    if (!ok) {
      throw Error(ErrorKind::MalformedInput,
                  "element " + std::to_string(i) + " is not a permutation");
    }
    if (!index.emplace(p, static_cast<int>(i)).second) {
      throw Error(ErrorKind::MalformedInput,
                  "element " + std::to_string(i) + " is listed twice");
    }
  }
  PermGroup g;
  g.points_ = std::move(points);
  g.elements_ = std::move(elements);
  const int order = g.order();
  Perm id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  auto id_it = index.find(id);
  if (id_it == index.end()) {
    throw Error(ErrorKind::LawViolation, "identity permutation is missing");
  }
  g.identity_ = id_it->second;
  g.table_.assign(order, std::vector<int>(order));
  g.inverses_.assign(order, -1);
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      auto it = index.find(compose(g.elements_[i], g.elements_[j]));
      if (it == index.end()) {
        throw Error(ErrorKind::LawViolation,
                    "not closed under composition: elements " +
                        std::to_string(i) + " and " + std::to_string(j));
      }
      g.table_[i][j] = it->second;
    }
    auto inv = index.find(inverse(g.elements_[i]));
    if (inv == index.end()) {
      throw Error(ErrorKind::LawViolation,
                  "inverse of element " + std::to_string(i) + " is missing");
    }
    g.inverses_[i] = inv->second;
  }
  return g;
}

int PermGroup::point_index(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) {
    throw Error(ErrorKind::UnknownElement, "unknown point '" + name + "'");
  }
  return static_cast<int>(it - points_.begin());
}

std::optional<int> PermGroup::find(const Perm& p) const {
  auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

PermGroup PermGroup::restrict_to(const Subgroup& members) const {
  std::vector<Perm> perms;
  for (int i : members) perms.push_back(elements_.at(i));
  return build(points_, std::move(perms));
}

PermGroup automorphisms(const Structure& m) {
  return PermGroup::build(m.universe(), all_isomorphisms(m, m));
}

Subgroup stabilizer_indices(const PermGroup& g, const std::vector<int>& tuple) {
  for (int x : tuple) {
    if (x < 0 || x >= g.degree()) {
      throw Error(ErrorKind::UnknownElement,
                  "point " + std::to_string(x) + " is out of range");
    }
  }
  Subgroup out;
  for (int i = 0; i < g.order(); ++i) {
    const Perm& p = g.element(i);
    if (std::all_of(tuple.begin(), tuple.end(), [&](int x) { return p[x] == x; })) {
      out.push_back(i);
    }
  }
  return out;
}

PermGroup stabilizer(const PermGroup& g, const std::vector<int>& tuple) {
  return g.restrict_to(stabilizer_indices(g, tuple));
}

std::vector<std::vector<std::vector<int>>> orbits_on_tuples(const PermGroup& g,
                                                            int k) {
  if (k < 0) throw Error(ErrorKind::MalformedInput, "tuple length must be >= 0");
  std::vector<std::vector<std::vector<int>>> orbits;
  std::set<std::vector<int>> seen;
  std::vector<int> t(k, 0);
  const int n = g.degree();
  if (k > 0 && n == 0) return orbits;
  while (true) {
    if (!seen.count(t)) {
      std::set<std::vector<int>> orbit;
      for (const Perm& p : g.elements()) {
        std::vector<int> img(k);
        for (int i = 0; i < k; ++i) img[i] = p[t[i]];
        orbit.insert(img);
      }
      seen.insert(orbit.begin(), orbit.end());
      orbits.emplace_back(orbit.begin(), orbit.end());
    }
    int i = k - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) break;
  }
  return orbits;
}

Subgroup generated_subgroup(const PermGroup& g, const std::vector<int>& members) {
  std::set<int> closed{g.identity()};
  std::vector<int> frontier{g.identity()};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int s : members) {
      int y = g.multiply(x, s);
      if (closed.insert(y).second) frontier.push_back(y);
    }
  }
  return {closed.begin(), closed.end()};
}

namespace {

void check_bound(const PermGroup& g, int bound) {
  if (g.order() > bound) {
    throw Error(ErrorKind::GroupTooLarge,
                "group of order " + std::to_string(g.order()) +
                    " exceeds the bound " + std::to_string(bound));
  }
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const PermGroup& g, int bound) {
  check_bound(g, bound);
  std::set<Subgroup> found;
  std::vector<Subgroup> queue{generated_subgroup(g, {})};
  found.insert(queue.front());
  while (!queue.empty()) {
    Subgroup h = queue.back();
    queue.pop_back();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      Subgroup bigger = generated_subgroup(g, gens);
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<std::vector<Subgroup>> subgroup_conjugacy_classes(const PermGroup& g,
                                                              int bound) {
  std::vector<Subgroup> subs = all_subgroups(g, bound);
  std::vector<std::vector<Subgroup>> classes;
  std::set<Subgroup> placed;
  for (const auto& h : subs) {
    if (placed.count(h)) continue;
    std::set<Subgroup> cls;
    for (int x = 0; x < g.order(); ++x) {
      Subgroup conj;
      for (int y : h) conj.push_back(g.multiply(g.multiply(x, y), g.invert(x)));
      std::sort(conj.begin(), conj.end());
      cls.insert(conj);
    }
    std::vector<Subgroup> members(cls.begin(), cls.end());
    std::sort(members.begin(), members.end(), subgroup_less);
    placed.insert(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  return classes;
}

}  // namespace toposcalc
