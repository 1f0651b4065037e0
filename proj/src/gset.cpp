#include "toposcalc/gset.hpp"

#include <algorithm>
#include <set>

namespace toposcalc {

GSet GSet::build(std::shared_ptr<const PermGroup> group,
                 std::vector<std::string> carrier,
                 std::vector<std::vector<int>> action) {
  const int n = static_cast<int>(carrier.size());
  if (std::set<std::string>(carrier.begin(), carrier.end()).size() != carrier.size()) {
    throw Error(ErrorKind::MalformedInput, "repeated carrier element");
  }
  if (static_cast<int>(action.size()) != group->order()) {
    throw Error(ErrorKind::MalformedInput, "action must list every group element");
  }
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != n ||
        std::any_of(row.begin(), row.end(), [n](int y) { return y < 0 || y >= n; })) {
      throw Error(ErrorKind::MalformedInput, "action row is not a map on the carrier");
    }
  }
  for (int x = 0; x < n; ++x) {
    if (action[group->identity()][x] != x) {
      throw Error(ErrorKind::LawViolation, "identity moves '" + carrier[x] + "'");
    }
  }
  for (int g = 0; g < group->order(); ++g) {
    for (int h = 0; h < group->order(); ++h) {
      int gh = group->multiply(g, h);
      for (int x = 0; x < n; ++x) {
        if (action[gh][x] != action[g][action[h][x]]) {
          throw Error(ErrorKind::LawViolation,
                      "action does not respect composition of elements " +
                          std::to_string(g) + " and " + std::to_string(h));
        }
      }
    }
  }
  GSet s;
  s.group_ = std::move(group);
  s.carrier_ = std::move(carrier);
  s.action_ = std::move(action);
  return s;
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::set<int> orbit;
    for (int g = 0; g < group_->order(); ++g) orbit.insert(act(g, x));
    for (int y : orbit) seen[y] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

GSet coset_gset(const std::shared_ptr<const PermGroup>& group, const Subgroup& h) {
  const PermGroup& g = *group;
  std::vector<int> coset_of(g.order(), -1);
  std::vector<std::string> names;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(names.size());
    names.push_back("c" + std::to_string(id));
    for (int y : h) coset_of[g.multiply(x, y)] = id;
  }
  // representative of each coset = its least element
  std::vector<int> rep(names.size(), -1);
  for (int x = g.order() - 1; x >= 0; --x) rep[coset_of[x]] = x;
  std::vector<std::vector<int>> action(g.order(), std::vector<int>(names.size()));
  for (int a = 0; a < g.order(); ++a) {
    for (std::size_t c = 0; c < names.size(); ++c) {
      action[a][c] = coset_of[g.multiply(a, rep[c])];
    }
  }
  return GSet::build(group, std::move(names), std::move(action));
}

std::vector<GSet> transitive_gsets(const std::shared_ptr<const PermGroup>& group,
                                   int bound) {
  std::vector<GSet> out;
  for (const auto& cls : subgroup_conjugacy_classes(*group, bound)) {
    out.push_back(coset_gset(group, cls.front()));
  }
  return out;
}

namespace {

std::string element_id(const PermGroup& g, int i) {
  std::string digits = std::to_string(i);
  std::size_t width = std::to_string(std::max(g.order() - 1, 0)).size();
  return "g" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

Category group_category(const PermGroup& group) {
  RawCategory raw;
  raw.objects = {"*"};
  for (int i = 0; i < group.order(); ++i) {
    raw.morphisms.push_back({element_id(group, i), "*", "*"});
  }
  raw.identities["*"] = element_id(group, group.identity());
  for (int i = 0; i < group.order(); ++i) {
    for (int j = 0; j < group.order(); ++j) {
      raw.composition.push_back({element_id(group, i), element_id(group, j),
                                 element_id(group, group.multiply(i, j))});
    }
  }
  return Category::build(raw);
}

std::pair<CategoryPtr, Presheaf> gset_as_presheaf(const GSet& x) {
  const PermGroup& g = x.group();
  auto cat = std::make_shared<const Category>(group_category(g));
  std::vector<std::vector<int>> actions(cat->num_morphisms());
  for (int i = 0; i < g.order(); ++i) {
    int f = cat->morphism_index(element_id(g, i));
    std::vector<int> row(x.size());
    for (int e = 0; e < x.size(); ++e) row[e] = x.act(g.invert(i), e);
    actions[f] = std::move(row);
  }
  Presheaf p = Presheaf::build(cat, {x.carrier()}, std::move(actions));
  return {cat, std::move(p)};
}

}  // namespace toposcalc
