#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toposcalc/error.hpp"

namespace toposcalc {

/// One-sorted relational signature with constants.
struct Signature {
  std::map<std::string, int> relations;  // name -> arity
  std::vector<std::string> constants;

  /// Throws MalformedInput on arity < 1 or repeated names.
  void validate() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using Tuple = std::vector<int>;

/// A finite structure. Elements are addressed by their position in the
/// universe, which also fixes the search order of the isomorphism engine.
class Structure {
 public:
  /// Throws MalformedInput / UnknownElement / ArityMismatch.
  static Structure build(
      Signature signature, std::vector<std::string> universe,
      const std::map<std::string, std::vector<std::vector<std::string>>>& relations,
      const std::map<std::string, std::string>& constants);

  const Signature& signature() const { return signature_; }
  int size() const { return static_cast<int>(universe_.size()); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::string& element(int i) const { return universe_[i]; }
  std::optional<int> find_element(const std::string& name) const;
  int element_index(const std::string& name) const;  // throws UnknownElement

  const std::set<Tuple>& relation(const std::string& name) const;
  bool holds(const std::string& name, const Tuple& args) const;
  int constant(const std::string& name) const;
  const std::map<std::string, int>& constants() const { return constants_; }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  Structure() = default;

  Signature signature_;
  std::vector<std::string> universe_;
  std::map<std::string, std::set<Tuple>> relations_;
  std::map<std::string, int> constants_;
};

}  // namespace toposcalc
