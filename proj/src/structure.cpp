#include "toposcalc/structure.hpp"

#include <algorithm>

namespace toposcalc {

void Signature::validate() const {
  std::set<std::string> names;
  for (const auto& [name, arity] : relations) {
    if (arity < 1) {
      throw Error(ErrorKind::MalformedInput,
                  "relation '" + name + "' must have arity >= 1");
    }
    names.insert(name);
  }
  for (const auto& c : constants) {
    if (!names.insert(c).second) {
      throw Error(ErrorKind::MalformedInput, "symbol '" + c + "' declared twice");
    }
  }
}

Structure Structure::build(
    Signature signature, std::vector<std::string> universe,
    const std::map<std::string, std::vector<std::vector<std::string>>>& relations,
    const std::map<std::string, std::string>& constants) {
  signature.validate();
  Structure s;
  s.signature_ = std::move(signature);
  s.universe_ = std::move(universe);
  std::set<std::string> seen;
  for (const auto& e : s.universe_) {
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::MalformedInput, "element '" + e + "' listed twice");
    }
  }
  for (const auto& [name, arity] : s.signature_.relations) {
    s.relations_[name];
  }
  for (const auto& [name, tuples] : relations) {
    auto sym = s.signature_.relations.find(name);
    if (sym == s.signature_.relations.end()) {
      throw Error(ErrorKind::MalformedInput,
                  "relation '" + name + "' is not in the signature");
    }
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != sym->second) {
        throw Error(ErrorKind::ArityMismatch,
                    "tuple of wrong length in relation '" + name + "'");
      }
      Tuple idx;
      for (const auto& e : t) idx.push_back(s.element_index(e));
      s.relations_[name].insert(std::move(idx));
    }
  }
  for (const auto& c : s.signature_.constants) {
    auto it = constants.find(c);
    if (it == constants.end()) {
      throw Error(ErrorKind::MalformedInput, "constant '" + c + "' has no value");
    }
    s.constants_[c] = s.element_index(it->second);
  }
  for (const auto& [c, v] : constants) {
    if (!s.constants_.count(c)) {
      throw Error(ErrorKind::MalformedInput,
                  "constant '" + c + "' is not in the signature");
    }
  }
  return s;
}

std::optional<int> Structure::find_element(const std::string& name) const {
  auto it = std::find(universe_.begin(), universe_.end(), name);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<int>(it - universe_.begin());
}

int Structure::element_index(const std::string& name) const {
  auto i = find_element(name);
  if (!i) throw Error(ErrorKind::UnknownElement, "unknown element '" + name + "'");
  return *i;
}

const std::set<Tuple>& Structure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) {
    throw Error(ErrorKind::MalformedInput, "unknown relation '" + name + "'");
  }
  return it->second;
}

bool Structure::holds(const std::string& name, const Tuple& args) const {
  return relation(name).count(args) > 0;
}

int Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) {
    throw Error(ErrorKind::MalformedInput, "unknown constant '" + name + "'");
  }
  return it->second;
}

}  // namespace toposcalc
