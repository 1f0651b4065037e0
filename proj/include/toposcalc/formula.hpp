#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toposcalc/structure.hpp"

namespace toposcalc {

/// Finite geometric formulas, plus primitive negated equality.
///
/// Terms are names: a name bound by the context or an enclosing quantifier
/// is a variable, otherwise it must be a constant of the signature.
struct Formula {
  enum class Kind { True, False, Eq, Neq, Rel, And, Or, Exists };

  Kind kind = Kind::True;
  std::string relation;
  std::vector<std::string> terms;
  std::vector<Formula> children;
  std::vector<std::string> bound;

  static Formula top() { return {}; }
  static Formula bottom() { return {Kind::False, {}, {}, {}, {}}; }
  static Formula eq(std::string a, std::string b) {
    return {Kind::Eq, {}, {std::move(a), std::move(b)}, {}, {}};
  }
  static Formula neq(std::string a, std::string b) {
    return {Kind::Neq, {}, {std::move(a), std::move(b)}, {}, {}};
  }
  static Formula rel(std::string name, std::vector<std::string> args) {
    return {Kind::Rel, std::move(name), std::move(args), {}, {}};
  }
  static Formula conj(std::vector<Formula> parts) {
    return {Kind::And, {}, {}, std::move(parts), {}};
  }
  static Formula disj(std::vector<Formula> parts) {
    return {Kind::Or, {}, {}, std::move(parts), {}};
  }
  static Formula exists(std::vector<std::string> vars, Formula body) {
    return {Kind::Exists, {}, {}, {std::move(body)}, std::move(vars)};
  }

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Names occurring free that are not constants of the signature.
std::set<std::string> free_variables(const Formula& phi, const Signature& sig);

/// Checks arities and that every relation is in the signature.
void check_well_formed(const Formula& phi, const Signature& sig);

using Assignment = std::map<std::string, int>;

/// Throws UnboundVariable, ArityMismatch.
bool eval(const Structure& m, const Formula& phi, const Assignment& assignment);

struct Sequent {
  std::vector<std::string> context;
  Formula lhs;
  Formula rhs;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Throws UnboundVariable if a free variable is missing from the context.
void check_well_formed(const Sequent& sigma, const Signature& sig);

struct SequentCheck {
  bool ok = true;
  /// Element indices for the context variables, in context order.
  std::optional<std::vector<int>> counterexample;
};

/// Tries assignments in lexicographic order over the universe order.
SequentCheck satisfies_sequent(const Structure& m, const Sequent& sigma);

/// The pair of sequents satisfied exactly by structures with n elements.
std::pair<Sequent, Sequent> cardinality_sequents(int n, const Signature& sig);

}  // namespace toposcalc
