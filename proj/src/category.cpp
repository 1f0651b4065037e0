#include "toposcalc/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace toposcalc {

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (const auto& v : violations) {
    out << "; " << v.law << ": " << v.message;
  }
  return out.str();
}

bool is_malformed_law(const std::string& law) {
  return law == "duplicate-id" || law == "unknown-reference" ||
         law == "missing-identity";
}

// Union-find over small index ranges.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ValidationError::ValidationError(ErrorKind kind,
                                 std::vector<Violation> violations)
    : Error(kind, summarize(violations)), violations_(std::move(violations)) {}

ValidationResult validate_category(const RawCategory& raw) {
  ValidationResult result;
  auto& out = result.violations;
  auto violate = [&](std::string law, std::vector<std::string> arrows,
                     std::string message) {
    out.push_back({std::move(law), std::move(arrows), std::move(message)});
  };

  Category cat;
  std::set<std::string> seen;
  std::vector<std::string> objects = raw.objects;
  std::sort(objects.begin(), objects.end());
  for (const auto& o : objects) {
    if (!seen.insert(o).second) {
      violate("duplicate-id", {}, "object id '" + o + "' declared twice");
    }
  }
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) {
    cat.object_index_[objects[i]] = i;
  }
  cat.objects_ = objects;

  auto arrows = raw.morphisms;
  std::sort(arrows.begin(), arrows.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  for (const auto& a : arrows) {
    if (!seen.insert(a.id).second) {
      violate("duplicate-id", {a.id}, "id '" + a.id + "' declared twice");
      continue;
    }
    auto d = cat.find_object(a.dom);
    auto c = cat.find_object(a.cod);
    if (!d || !c) {
      violate("unknown-reference", {a.id},
              "morphism '" + a.id + "' has undeclared dom or cod");
      continue;
    }
    cat.morphism_index_[a.id] = static_cast<int>(cat.arrows_.size());
    cat.arrows_.push_back({a.id, *d, *c});
  }

  cat.identities_.assign(cat.objects_.size(), -1);
  for (const auto& [obj, arrow] : raw.identities) {
    auto o = cat.find_object(obj);
    auto f = cat.find_morphism(arrow);
    if (!o || !f) {
      violate("unknown-reference", {arrow},
              "identity entry '" + obj + "' -> '" + arrow +
                  "' references an undeclared id");
      continue;
    }
    if (cat.dom(*f) != *o || cat.cod(*f) != *o) {
      violate("identity", {arrow},
              "identity of '" + obj + "' is not an endomorphism of it");
      continue;
    }
    cat.identities_[*o] = *f;
  }
  for (int o = 0; o < cat.num_objects(); ++o) {
    if (cat.identities_[o] < 0) {
      violate("missing-identity", {},
              "object '" + cat.objects_[o] + "' has no identity");
    }
  }
  if (!out.empty()) return result;

  const int n = cat.num_morphisms();
  cat.table_.assign(static_cast<std::size_t>(n) * n, -1);
  auto slot = [&](int g, int f) -> int& { return cat.table_[g * n + f]; };

  for (const auto& entry : raw.composition) {
    auto g = cat.find_morphism(entry[0]);
    auto f = cat.find_morphism(entry[1]);
    auto r = cat.find_morphism(entry[2]);
    if (!g || !f || !r) {
      violate("unknown-reference", {entry[0], entry[1], entry[2]},
              "composition entry references an undeclared morphism");
      continue;
    }
    if (cat.cod(*f) != cat.dom(*g)) {
      violate("totality", {entry[0], entry[1]},
              "composite " + entry[0] + "∘" + entry[1] +
                  " declared but cod(" + entry[1] + ") != dom(" + entry[0] +
                  ")");
      continue;
    }
    if (cat.dom(*r) != cat.dom(*f) || cat.cod(*r) != cat.cod(*g)) {
      violate("typing", {entry[0], entry[1], entry[2]},
              entry[0] + "∘" + entry[1] + " = " + entry[2] +
                  " has the wrong domain or codomain");
      continue;
    }
    int& s = slot(*g, *f);
    if (s >= 0 && s != *r) {
      violate("well-defined", {entry[0], entry[1]},
              entry[0] + "∘" + entry[1] + " declared with two results");
      continue;
    }
    s = *r;
  }

  for (int f = 0; f < n; ++f) {
    int id_dom = cat.identities_[cat.dom(f)];
    int id_cod = cat.identities_[cat.cod(f)];
    int& right = slot(f, id_dom);
    if (right >= 0 && right != f) {
      violate("identity", {cat.arrows_[f].id, cat.arrows_[id_dom].id},
              cat.arrows_[f].id + "∘" + cat.arrows_[id_dom].id + " != " +
                  cat.arrows_[f].id);
    } else {
      right = f;
    }
    int& left = slot(id_cod, f);
    if (left >= 0 && left != f) {
      violate("identity", {cat.arrows_[id_cod].id, cat.arrows_[f].id},
              cat.arrows_[id_cod].id + "∘" + cat.arrows_[f].id + " != " +
                  cat.arrows_[f].id);
    } else {
      left = f;
    }
  }

  for (int g = 0; g < n; ++g) {
    for (int f = 0; f < n; ++f) {
      if (cat.cod(f) == cat.dom(g) && slot(g, f) < 0) {
        violate("totality", {cat.arrows_[g].id, cat.arrows_[f].id},
                "composite " + cat.arrows_[g].id + "∘" + cat.arrows_[f].id +
                    " is missing");
      }
    }
  }
  if (!out.empty()) return result;

  for (int h = 0; h < n; ++h) {
    for (int g = 0; g < n; ++g) {
      if (cat.cod(g) != cat.dom(h)) continue;
      for (int f = 0; f < n; ++f) {
        if (cat.cod(f) != cat.dom(g)) continue;
        if (slot(h, slot(g, f)) != slot(slot(h, g), f)) {
          violate("associativity",
                  {cat.arrows_[h].id, cat.arrows_[g].id, cat.arrows_[f].id},
                  "(" + cat.arrows_[h].id + "∘" + cat.arrows_[g].id + ")∘" +
                      cat.arrows_[f].id + " != " + cat.arrows_[h].id + "∘(" +
                      cat.arrows_[g].id + "∘" + cat.arrows_[f].id + ")");
        }
      }
    }
  }
  if (!out.empty()) return result;

  cat.into_.assign(cat.objects_.size(), {});
  cat.from_.assign(cat.objects_.size(), {});
  for (int f = 0; f < n; ++f) {
    cat.into_[cat.cod(f)].push_back(f);
    cat.from_[cat.dom(f)].push_back(f);
  }
  result.category = std::move(cat);
  return result;
}

Category Category::build(const RawCategory& raw) {
  auto result = validate_category(raw);
  if (!result.ok()) {
    bool malformed = std::any_of(
        result.violations.begin(), result.violations.end(),
        [](const Violation& v) { return is_malformed_law(v.law); });
    throw ValidationError(
        malformed ? ErrorKind::MalformedInput : ErrorKind::LawViolation,
        std::move(result.violations));
  }
  return std::move(*result.category);
}

std::optional<int> Category::find_object(const std::string& id) const {
  auto it = object_index_.find(id);
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Category::find_morphism(const std::string& id) const {
  auto it = morphism_index_.find(id);
  if (it == morphism_index_.end()) return std::nullopt;
  return it->second;
}

int Category::object_index(const std::string& id) const {
  auto o = find_object(id);
  if (!o) throw Error(ErrorKind::UnknownObject, "unknown object '" + id + "'");
  return *o;
}

int Category::morphism_index(const std::string& id) const {
  auto f = find_morphism(id);
  if (!f) {
    throw Error(ErrorKind::MalformedInput, "unknown morphism '" + id + "'");
  }
  return *f;
}

std::vector<int> Category::hom(int a, int b) const {
  std::vector<int> out;
  for (int f : into_[b]) {
    if (dom(f) == a) out.push_back(f);
  }
  return out;
}

RawCategory Category::to_raw() const {
  RawCategory raw;
  raw.objects = objects_;
  for (const auto& a : arrows_) {
    raw.morphisms.push_back({a.id, objects_[a.dom], objects_[a.cod]});
  }
  for (int c = 0; c < num_objects(); ++c) {
    raw.identities[objects_[c]] = arrows_[identities_[c]].id;
  }
  for (int g = 0; g < num_morphisms(); ++g) {
    for (int f = 0; f < num_morphisms(); ++f) {
      int r = compose(g, f);
      if (r < 0 || is_identity(g) || is_identity(f)) continue;
      raw.composition.push_back({arrows_[g].id, arrows_[f].id, arrows_[r].id});
    }
  }
  return raw;
}

bool operator==(const Category& a, const Category& b) {
  if (a.objects_ != b.objects_ || a.identities_ != b.identities_ ||
      a.table_ != b.table_ || a.arrows_.size() != b.arrows_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.id != y.id || x.dom != y.dom || x.cod != y.cod) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Category& cat) {
  DisjointSets sets(cat.num_objects());
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    sets.unite(cat.dom(f), cat.cod(f));
  }
  std::map<int, std::vector<int>> by_root;
  for (int c = 0; c < cat.num_objects(); ++c) {
    by_root[sets.find(c)].push_back(c);
  }
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  // Roots are the least member, so map order is already by least object.
  return out;
}

OreResult is_right_ore(const Category& cat) {
  for (int c = 0; c < cat.num_objects(); ++c) {
    const auto& into = cat.arrows_into(c);
    for (int f : into) {
      for (int g : into) {
        bool completed = false;
        for (int p : cat.arrows_into(cat.dom(f))) {
          for (int q : cat.arrows_into(cat.dom(g))) {
            if (cat.dom(p) == cat.dom(q) &&
                cat.compose(f, p) == cat.compose(g, q)) {
              completed = true;
              break;
            }
          }
          if (completed) break;
        }
        if (!completed) return {false, CospanWitness{c, f, g}};
      }
    }
  }
  return {};
}

Category full_subcategory(const Category& cat,
                          const std::vector<int>& objects) {
  std::vector<bool> keep(cat.num_objects(), false);
  for (int o : objects) {
    if (o < 0 || o >= cat.num_objects()) {
      throw Error(ErrorKind::UnknownObject, "object index out of range");
    }
    keep[o] = true;
  }
  RawCategory raw;
  for (int o = 0; o < cat.num_objects(); ++o) {
    if (!keep[o]) continue;
    raw.objects.push_back(cat.object_id(o));
    raw.identities[cat.object_id(o)] = cat.morphism_id(cat.identity(o));
  }
  auto kept = [&](int f) { return keep[cat.dom(f)] && keep[cat.cod(f)]; };
  for (int f = 0; f < cat.num_morphisms(); ++f) {
    if (!kept(f)) continue;
    raw.morphisms.push_back({cat.morphism_id(f), cat.object_id(cat.dom(f)),
                             cat.object_id(cat.cod(f))});
    for (int g : cat.arrows_from(cat.cod(f))) {
      if (!kept(g)) continue;
      raw.composition.push_back({cat.morphism_id(g), cat.morphism_id(f),
                                 cat.morphism_id(cat.compose(g, f))});
    }
  }
  return Category::build(raw);
}

Category full_subcategory(const Category& cat,
                          const std::vector<std::string>& objects) {
  std::vector<int> idx;
  for (const auto& o : objects) idx.push_back(cat.object_index(o));
  return full_subcategory(cat, idx);
}

Category coproduct(const Category& a, const std::string& tag_a,
                   const Category& b, const std::string& tag_b) {
  RawCategory raw;
  auto add = [&raw](const Category& c, const std::string& tag) {
    RawCategory part = c.to_raw();
    for (auto& o : part.objects) raw.objects.push_back(tag + o);
    for (auto& m : part.morphisms) {
      raw.morphisms.push_back({tag + m.id, tag + m.dom, tag + m.cod});
    }
    for (auto& [o, m] : part.identities) raw.identities[tag + o] = tag + m;
    for (auto& e : part.composition) {
      raw.composition.push_back({tag + e[0], tag + e[1], tag + e[2]});
    }
  };
  add(a, tag_a);
  add(b, tag_b);
  return Category::build(raw);
}

Category rename_ids(const Category& cat,
                    const std::map<std::string, std::string>& rename) {
  auto r = [&rename](const std::string& id) {
    auto it = rename.find(id);
    return it == rename.end() ? id : it->second;
  };
  RawCategory raw = cat.to_raw();
  for (auto& o : raw.objects) o = r(o);
  for (auto& m : raw.morphisms) {
    m.id = r(m.id);
    m.dom = r(m.dom);
    m.cod = r(m.cod);
  }
  std::map<std::string, std::string> ids;
  for (auto& [o, m] : raw.identities) ids[r(o)] = r(m);
  raw.identities = std::move(ids);
  for (auto& e : raw.composition) {
    for (auto& s : e) s = r(s);
  }
  return Category::build(raw);
}

}  // namespace toposcalc
