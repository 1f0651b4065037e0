#include "toposcalc/presheaf.hpp"

#include <algorithm>
#include <numeric>

namespace toposcalc {

Presheaf Presheaf::build(CategoryPtr cat,
                         std::vector<std::vector<std::string>> elements,
                         std::vector<std::vector<int>> actions) {
  const Category& c = *cat;
  if (static_cast<int>(elements.size()) != c.num_objects() ||
      static_cast<int>(actions.size()) != c.num_morphisms()) {
    throw Error(ErrorKind::MalformedInput, "presheaf shape mismatch");
  }
  // new index of each old index, per object
  std::vector<std::vector<int>> renumber(c.num_objects());
  Presheaf p;
  p.cat_ = std::move(cat);
  p.elements_.resize(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    auto& names = elements[o];
    std::vector<int> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return names[a] < names[b]; });
    renumber[o].resize(names.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      renumber[o][order[i]] = static_cast<int>(i);
      p.elements_[o].push_back(names[order[i]]);
      if (i > 0 && p.elements_[o][i] == p.elements_[o][i - 1]) {
        throw Error(ErrorKind::MalformedInput,
                    "element '" + names[order[i]] + "' repeated over '" +
                        c.object_id(o) + "'");
      }
    }
  }
  p.actions_.resize(c.num_morphisms());
  for (int f = 0; f < c.num_morphisms(); ++f) {
    const auto& old = actions[f];
    int from = c.cod(f);
    int to = c.dom(f);
    if (old.size() != elements[from].size()) {
      throw Error(ErrorKind::MalformedInput,
                  "action of '" + c.morphism_id(f) + "' is not total");
    }
    p.actions_[f].resize(old.size());
    for (std::size_t x = 0; x < old.size(); ++x) {
      if (old[x] < 0 || old[x] >= static_cast<int>(elements[to].size())) {
        throw Error(ErrorKind::MalformedInput,
                    "action of '" + c.morphism_id(f) + "' leaves its codomain");
      }
      p.actions_[f][renumber[from][x]] = renumber[to][old[x]];
    }
  }
  for (int o = 0; o < c.num_objects(); ++o) {
    const auto& id = p.actions_[c.identity(o)];
    for (int x = 0; x < p.size(o); ++x) {
      if (id[x] != x) {
        throw Error(ErrorKind::LawViolation,
                    "identity on '" + c.object_id(o) + "' does not act trivially");
      }
    }
  }
  for (int g = 0; g < c.num_morphisms(); ++g) {
    for (int f : c.arrows_into(c.dom(g))) {
      int gf = c.compose(g, f);
      for (int x = 0; x < p.size(c.cod(g)); ++x) {
        if (p.act(gf, x) != p.act(f, p.act(g, x))) {
          throw Error(ErrorKind::LawViolation,
                      "action is not functorial at " + c.morphism_id(g) + "∘" +
                          c.morphism_id(f));
        }
      }
    }
  }
  return p;
}

Presheaf Presheaf::from_named(
    CategoryPtr cat,
    const std::map<std::string, std::vector<std::string>>& sets,
    const std::map<std::string, std::map<std::string, std::string>>& actions) {
  const Category& c = *cat;
  std::vector<std::vector<std::string>> elements(c.num_objects());
  for (const auto& [obj, elems] : sets) {
    elements[c.object_index(obj)] = elems;
  }
  auto index_of = [&](int o, const std::string& name) {
    const auto& es = elements[o];
    auto it = std::find(es.begin(), es.end(), name);
    if (it == es.end()) {
      throw Error(ErrorKind::UnknownElement, "unknown element '" + name +
                                                 "' over '" + c.object_id(o) +
                                                 "'");
    }
    return static_cast<int>(it - es.begin());
  };
  std::vector<std::vector<int>> acts(c.num_morphisms());
  for (int f = 0; f < c.num_morphisms(); ++f) {
    int from = c.cod(f);
    int to = c.dom(f);
    acts[f].assign(elements[from].size(), -1);
    auto it = actions.find(c.morphism_id(f));
    if (c.is_identity(f) && it == actions.end()) {
      std::iota(acts[f].begin(), acts[f].end(), 0);
      continue;
    }
    if (it == actions.end()) {
      if (elements[from].empty()) continue;
      throw Error(ErrorKind::MalformedInput,
                  "no action given for '" + c.morphism_id(f) + "'");
    }
    for (const auto& [x, y] : it->second) {
      acts[f][index_of(from, x)] = index_of(to, y);
    }
  }
  for (const auto& [m, table] : actions) c.morphism_index(m);
  return build(std::move(cat), std::move(elements), std::move(acts));
}

int Presheaf::total_size() const {
  int n = 0;
  for (const auto& e : elements_) n += static_cast<int>(e.size());
  return n;
}

std::optional<int> Presheaf::find_element(int c, const std::string& name) const {
  const auto& es = elements_[c];
  auto it = std::lower_bound(es.begin(), es.end(), name);
  if (it == es.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - es.begin());
}

void check_naturality(const NatTrans& alpha) {
  const Presheaf& f = *alpha.source;
  const Presheaf& g = *alpha.target;
  const Category& c = f.cat();
  if (static_cast<int>(alpha.components.size()) != c.num_objects()) {
    throw Error(ErrorKind::NaturalityViolation, "wrong number of components");
  }
  for (int o = 0; o < c.num_objects(); ++o) {
    const auto& comp = alpha.components[o];
    if (static_cast<int>(comp.size()) != f.size(o)) {
      throw Error(ErrorKind::NaturalityViolation,
                  "component at '" + c.object_id(o) + "' is not total");
    }
    for (int y : comp) {
      if (y < 0 || y >= g.size(o)) {
        throw Error(ErrorKind::NaturalityViolation,
                    "component at '" + c.object_id(o) + "' leaves the target");
      }
    }
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    for (int x = 0; x < f.size(c.cod(m)); ++x) {
      if (alpha.components[c.dom(m)][f.act(m, x)] !=
          g.act(m, alpha.components[c.cod(m)][x])) {
        throw Error(ErrorKind::NaturalityViolation,
                    "naturality square for '" + c.morphism_id(m) +
                        "' does not commute");
      }
    }
  }
}

bool is_isomorphism(const NatTrans& alpha) {
  for (std::size_t o = 0; o < alpha.components.size(); ++o) {
    const auto& comp = alpha.components[o];
    if (static_cast<int>(comp.size()) != alpha.target->size(static_cast<int>(o))) {
      return false;
    }
    std::vector<bool> hit(comp.size(), false);
    for (int y : comp) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

int Subpresheaf::count() const {
  int n = 0;
  for (const auto& m : members) n += static_cast<int>(std::count(m.begin(), m.end(), true));
  return n;
}

Subpresheaf empty_subpresheaf(const Presheaf& f) {
  Subpresheaf s;
  for (int o = 0; o < f.cat().num_objects(); ++o) {
    s.members.emplace_back(f.size(o), false);
  }
  return s;
}

Subpresheaf full_subpresheaf(const Presheaf& f) {
  Subpresheaf s;
  for (int o = 0; o < f.cat().num_objects(); ++o) {
    s.members.emplace_back(f.size(o), true);
  }
  return s;
}

bool is_subpresheaf(const Presheaf& f, const Subpresheaf& s) {
  const Category& c = f.cat();
  if (static_cast<int>(s.members.size()) != c.num_objects()) return false;
  for (int o = 0; o < c.num_objects(); ++o) {
    if (static_cast<int>(s.members[o].size()) != f.size(o)) return false;
  }
  for (int m = 0; m < c.num_morphisms(); ++m) {
    for (int x = 0; x < f.size(c.cod(m)); ++x) {
      if (s.contains(c.cod(m), x) && !s.contains(c.dom(m), f.act(m, x))) {
        return false;
      }
    }
  }
  return true;
}

bool is_subset(const Subpresheaf& a, const Subpresheaf& b) {
  for (std::size_t o = 0; o < a.members.size(); ++o) {
    for (std::size_t x = 0; x < a.members[o].size(); ++x) {
      if (a.members[o][x] && !b.members[o][x]) return false;
    }
  }
  return true;
}

Subpresheaf unite(const Subpresheaf& a, const Subpresheaf& b) {
  Subpresheaf s = a;
  for (std::size_t o = 0; o < s.members.size(); ++o) {
    for (std::size_t x = 0; x < s.members[o].size(); ++x) {
      if (b.members[o][x]) s.members[o][x] = true;
    }
  }
  return s;
}

Subpresheaf intersect(const Subpresheaf& a, const Subpresheaf& b) {
  Subpresheaf s = a;
  for (std::size_t o = 0; o < s.members.size(); ++o) {
    for (std::size_t x = 0; x < s.members[o].size(); ++x) {
      if (!b.members[o][x]) s.members[o][x] = false;
    }
  }
  return s;
}

Presheaf restrict_to(const Presheaf& f, const Subpresheaf& s) {
  const Category& c = f.cat();
  std::vector<std::vector<std::string>> elements(c.num_objects());
  std::vector<std::vector<int>> renumber(c.num_objects());
  for (int o = 0; o < c.num_objects(); ++o) {
    renumber[o].assign(f.size(o), -1);
    for (int x = 0; x < f.size(o); ++x) {
      if (!s.contains(o, x)) continue;
      renumber[o][x] = static_cast<int>(elements[o].size());
      elements[o].push_back(f.element(o, x));
    }
  }
  std::vector<std::vector<int>> actions(c.num_morphisms());
  for (int m = 0; m < c.num_morphisms(); ++m) {
    for (int x = 0; x < f.size(c.cod(m)); ++x) {
      if (s.contains(c.cod(m), x)) {
        actions[m].push_back(renumber[c.dom(m)][f.act(m, x)]);
      }
    }
  }
  return Presheaf::build(f.category(), std::move(elements), std::move(actions));
}

Presheaf yoneda(CategoryPtr cat, int c) {
  const Category& k = *cat;
  if (c < 0 || c >= k.num_objects()) {
    throw Error(ErrorKind::UnknownObject, "object index out of range");
  }
  std::vector<std::vector<std::string>> elements(k.num_objects());
  std::vector<std::vector<int>> position(k.num_objects());
  std::vector<int> slot(k.num_morphisms(), -1);
  for (int f : k.arrows_into(c)) {
    slot[f] = static_cast<int>(elements[k.dom(f)].size());
    elements[k.dom(f)].push_back(k.morphism_id(f));
    position[k.dom(f)].push_back(f);
  }
  std::vector<std::vector<int>> actions(k.num_morphisms());
  for (int m = 0; m < k.num_morphisms(); ++m) {
    for (int f : position[k.cod(m)]) {
      actions[m].push_back(slot[k.compose(f, m)]);
    }
  }
  return Presheaf::build(std::move(cat), std::move(elements), std::move(actions));
}

Presheaf constant_presheaf(CategoryPtr cat,
                           const std::vector<std::string>& values) {
  const Category& k = *cat;
  std::vector<std::vector<std::string>> elements(k.num_objects(), values);
  std::vector<int> id(values.size());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> actions(k.num_morphisms(), id);
  return Presheaf::build(std::move(cat), std::move(elements), std::move(actions));
}

Presheaf coproduct(const Presheaf& a, const std::string& tag_a,
                   const Presheaf& b, const std::string& tag_b) {
  const Category& k = a.cat();
  std::vector<std::vector<std::string>> elements(k.num_objects());
  for (int o = 0; o < k.num_objects(); ++o) {
    for (const auto& e : a.elements(o)) elements[o].push_back(tag_a + e);
    for (const auto& e : b.elements(o)) elements[o].push_back(tag_b + e);
  }
  std::vector<std::vector<int>> actions(k.num_morphisms());
  for (int m = 0; m < k.num_morphisms(); ++m) {
    int offset = a.size(k.dom(m));
    actions[m] = a.action(m);
    for (int y : b.action(m)) actions[m].push_back(y + offset);
  }
  return Presheaf::build(a.category(), std::move(elements), std::move(actions));
}

namespace {

// Depth-first search over natural transformations. Each free choice forces
// the component on every restriction of the chosen element.
class NatTransSearch {
 public:
  NatTransSearch(const Presheaf& source, const Presheaf& target, bool bijective)
      : f_(source), g_(target), bijective_(bijective) {
    const Category& c = f_.cat();
    comp_.resize(c.num_objects());
    used_.resize(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o) {
      comp_[o].assign(f_.size(o), -1);
      used_[o].assign(g_.size(o), false);
      for (int x = 0; x < f_.size(o); ++x) order_.push_back({o, x});
    }
  }

  void run(const std::function<bool(const std::vector<std::vector<int>>&)>& emit) {
    if (bijective_) {
      for (int o = 0; o < f_.cat().num_objects(); ++o) {
        if (f_.size(o) != g_.size(o)) return;
      }
    }
    emit_ = &emit;
    visit(0);
  }

 private:
  struct Cell {
    int object;
    int element;
  };

  bool assign(int o, int x, int y) {
    if (comp_[o][x] >= 0) return comp_[o][x] == y;
    if (bijective_ && used_[o][y]) return false;
    comp_[o][x] = y;
    if (bijective_) used_[o][y] = true;
    trail_.push_back({o, x});
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [o, x] = trail_.back();
      trail_.pop_back();
      if (bijective_) used_[o][comp_[o][x]] = false;
      comp_[o][x] = -1;
    }
  }

  bool visit(std::size_t i) {
    while (i < order_.size() && comp_[order_[i].object][order_[i].element] >= 0) {
      ++i;
    }
    if (i == order_.size()) return (*emit_)(comp_);
    auto [o, x] = order_[i];
    const Category& c = f_.cat();
    for (int y = 0; y < g_.size(o); ++y) {
      std::size_t mark = trail_.size();
      bool ok = assign(o, x, y);
      for (int m : c.arrows_into(o)) {
        if (!ok) break;
        ok = assign(c.dom(m), f_.act(m, x), g_.act(m, y));
      }
      if (ok && visit(i + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const Presheaf& f_;
  const Presheaf& g_;
  bool bijective_;
  std::vector<std::vector<int>> comp_;
  std::vector<std::vector<bool>> used_;
  std::vector<Cell> order_;
  std::vector<Cell> trail_;
  const std::function<bool(const std::vector<std::vector<int>>&)>* emit_ = nullptr;
};

}  // namespace

std::vector<NatTrans> natural_transformations(
    const std::shared_ptr<const Presheaf>& source,
    const std::shared_ptr<const Presheaf>& target) {
  std::vector<NatTrans> out;
  NatTransSearch search(*source, *target, false);
  search.run([&](const std::vector<std::vector<int>>& comp) {
    out.push_back({source, target, comp});
    return false;
  });
  return out;
}

std::optional<NatTrans> find_isomorphism(
    const std::shared_ptr<const Presheaf>& a,
    const std::shared_ptr<const Presheaf>& b) {
  std::optional<NatTrans> out;
  NatTransSearch search(*a, *b, true);
  search.run([&](const std::vector<std::vector<int>>& comp) {
    out = NatTrans{a, b, comp};
    return true;
  });
  return out;
}

bool are_isomorphic(const Presheaf& a, const Presheaf& b) {
  return find_isomorphism(std::make_shared<const Presheaf>(a),
                          std::make_shared<const Presheaf>(b))
      .has_value();
}

std::vector<Presheaf> quotients(const Presheaf& f) {
  const Category& c = f.cat();
  // Restricted-growth labelling of each fibre; label[o][x] is the class.
  std::vector<std::vector<int>> label(c.num_objects());
  std::vector<std::pair<int, int>> cells;
  for (int o = 0; o < c.num_objects(); ++o) {
    label[o].assign(f.size(o), -1);
    for (int x = 0; x < f.size(o); ++x) cells.push_back({o, x});
  }
  std::vector<int> classes(c.num_objects(), 0);
  std::vector<Presheaf> out;

  auto compatible = [&]() {
    for (int m = 0; m < c.num_morphisms(); ++m) {
      int from = c.cod(m);
      int to = c.dom(m);
      for (int x = 0; x < f.size(from); ++x) {
        for (int y = x + 1; y < f.size(from); ++y) {
          if (label[from][x] == label[from][y] &&
              label[to][f.act(m, x)] != label[to][f.act(m, y)]) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto emit = [&]() {
    std::vector<std::vector<std::string>> elements(c.num_objects());
    std::vector<std::vector<int>> rep(c.num_objects());
    for (int o = 0; o < c.num_objects(); ++o) {
      rep[o].assign(classes[o], -1);
      for (int x = 0; x < f.size(o); ++x) {
        if (rep[o][label[o][x]] < 0) rep[o][label[o][x]] = x;
      }
      for (int k = 0; k < classes[o]; ++k) {
        elements[o].push_back(f.element(o, rep[o][k]));
      }
    }
    std::vector<std::vector<int>> actions(c.num_morphisms());
    for (int m = 0; m < c.num_morphisms(); ++m) {
      for (int k = 0; k < classes[c.cod(m)]; ++k) {
        actions[m].push_back(label[c.dom(m)][f.act(m, rep[c.cod(m)][k])]);
      }
    }
    out.push_back(
        Presheaf::build(f.category(), std::move(elements), std::move(actions)));
  };

  std::function<void(std::size_t)> visit = [&](std::size_t i) {
    if (i == cells.size()) {
      if (compatible()) emit();
      return;
    }
    auto [o, x] = cells[i];
    for (int k = 0; k <= classes[o]; ++k) {
      label[o][x] = k;
      bool fresh = k == classes[o];
      if (fresh) ++classes[o];
      visit(i + 1);
      if (fresh) --classes[o];
    }
    label[o][x] = -1;
  };
  visit(0);
  return out;
}

}  // namespace toposcalc
