#include "toposcalc/formula.hpp"

#include <algorithm>
#include <functional>

namespace toposcalc {

namespace {

bool is_constant(const Signature& sig, const std::string& name) {
  return std::find(sig.constants.begin(), sig.constants.end(), name) !=
         sig.constants.end();
}

void collect_free(const Formula& phi, const Signature& sig,
                  std::vector<std::string>& scope, std::set<std::string>& out) {
  auto term = [&](const std::string& t) {
    if (std::find(scope.begin(), scope.end(), t) != scope.end()) return;
    if (is_constant(sig, t)) return;
    out.insert(t);
  };
  switch (phi.kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return;
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
    case Formula::Kind::Rel:
      for (const auto& t : phi.terms) term(t);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const auto& c : phi.children) collect_free(c, sig, scope, out);
      return;
    case Formula::Kind::Exists: {
      std::size_t mark = scope.size();
      scope.insert(scope.end(), phi.bound.begin(), phi.bound.end());
      collect_free(phi.children.at(0), sig, scope, out);
      scope.resize(mark);
      return;
    }
  }
}

class Evaluator {
 public:
  Evaluator(const Structure& m, Assignment env) : m_(m), env_(std::move(env)) {}

  bool eval(const Formula& phi) {
    switch (phi.kind) {
      case Formula::Kind::True:
        return true;
      case Formula::Kind::False:
        return false;
      case Formula::Kind::Eq:
        return value(phi.terms.at(0)) == value(phi.terms.at(1));
      case Formula::Kind::Neq:
        return value(phi.terms.at(0)) != value(phi.terms.at(1));
      case Formula::Kind::Rel: {
        Tuple args;
        for (const auto& t : phi.terms) args.push_back(value(t));
        return m_.holds(phi.relation, args);
      }
      case Formula::Kind::And:
        return std::all_of(phi.children.begin(), phi.children.end(),
                           [this](const Formula& c) { return eval(c); });
      case Formula::Kind::Or:
        return std::any_of(phi.children.begin(), phi.children.end(),
                           [this](const Formula& c) { return eval(c); });
      case Formula::Kind::Exists:
        return exists(phi.bound, 0, phi.children.at(0));
    }
    return false;
  }

 private:
  int value(const std::string& term) const {
    auto it = env_.find(term);
    if (it != env_.end()) return it->second;
    const auto& consts = m_.constants();
    auto c = consts.find(term);
    if (c != consts.end()) return c->second;
    throw Error(ErrorKind::UnboundVariable, "unbound variable '" + term + "'");
  }

  bool exists(const std::vector<std::string>& vars, std::size_t i,
              const Formula& body) {
    if (i == vars.size()) return eval(body);
    const std::string& v = vars[i];
    auto saved = env_.find(v);
    std::optional<int> old;
    if (saved != env_.end()) old = saved->second;
    bool found = false;
    for (int e = 0; e < m_.size() && !found; ++e) {
      env_[v] = e;
      found = exists(vars, i + 1, body);
    }
    if (old) {
      env_[v] = *old;
    } else {
      env_.erase(v);
    }
    return found;
  }

  const Structure& m_;
  Assignment env_;
};

}  // namespace

std::set<std::string> free_variables(const Formula& phi, const Signature& sig) {
  std::vector<std::string> scope;
  std::set<std::string> out;
  collect_free(phi, sig, scope, out);
  return out;
}

void check_well_formed(const Formula& phi, const Signature& sig) {
  switch (phi.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Neq:
      if (phi.terms.size() != 2) {
        throw Error(ErrorKind::ArityMismatch, "equality takes two terms");
      }
      return;
    case Formula::Kind::Rel: {
      auto it = sig.relations.find(phi.relation);
      if (it == sig.relations.end()) {
        throw Error(ErrorKind::ArityMismatch,
                    "relation '" + phi.relation + "' is not in the signature");
      }
      if (static_cast<int>(phi.terms.size()) != it->second) {
        throw Error(ErrorKind::ArityMismatch,
                    "relation '" + phi.relation + "' expects " +
                        std::to_string(it->second) + " terms");
      }
      return;
    }
    case Formula::Kind::Exists:
      if (phi.children.size() != 1) {
        throw Error(ErrorKind::MalformedInput, "exists takes one body");
      }
      [[fallthrough]];
    case Formula::Kind::And:
    case Formula::Kind::Or:
      for (const auto& c : phi.children) check_well_formed(c, sig);
      return;
    default:
      return;
  }
}

bool eval(const Structure& m, const Formula& phi, const Assignment& assignment) {
  check_well_formed(phi, m.signature());
  return Evaluator(m, assignment).eval(phi);
}

void check_well_formed(const Sequent& sigma, const Signature& sig) {
  check_well_formed(sigma.lhs, sig);
  check_well_formed(sigma.rhs, sig);
  for (const auto* side : {&sigma.lhs, &sigma.rhs}) {
    for (const auto& v : free_variables(*side, sig)) {
      if (std::find(sigma.context.begin(), sigma.context.end(), v) ==
          sigma.context.end()) {
        throw Error(ErrorKind::UnboundVariable,
                    "variable '" + v + "' is not in the sequent context");
      }
    }
  }
}

SequentCheck satisfies_sequent(const Structure& m, const Sequent& sigma) {
  check_well_formed(sigma, m.signature());
  SequentCheck result;
  const std::size_t k = sigma.context.size();
  std::vector<int> values(k, 0);
  if (k > 0 && m.size() == 0) return result;
  while (true) {
    Assignment a;
    for (std::size_t i = 0; i < k; ++i) a[sigma.context[i]] = values[i];
    Evaluator ev(m, a);
    if (ev.eval(sigma.lhs) && !Evaluator(m, a).eval(sigma.rhs)) {
      result.ok = false;
      result.counterexample = values;
      return result;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++values[i] < m.size()) break;
      values[i] = 0;
      if (i == 0) return result;
    }
    if (k == 0) return result;
  }
}

std::pair<Sequent, Sequent> cardinality_sequents(int n, const Signature& sig) {
  (void)sig;
  if (n < 1) {
    throw Error(ErrorKind::MalformedInput, "cardinality must be positive");
  }
  std::vector<std::string> xs;
  for (int i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
  std::vector<Formula> distinct;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) distinct.push_back(Formula::neq(xs[i], xs[j]));
  }
  Formula all_distinct = Formula::conj(distinct);

  Sequent at_least{{}, Formula::top(), Formula::exists(xs, all_distinct)};

  std::vector<std::string> context = xs;
  context.push_back("y");
  std::vector<Formula> hits;
  for (const auto& x : xs) hits.push_back(Formula::eq("y", x));
  Sequent at_most{context, all_distinct, Formula::disj(hits)};
  return {at_least, at_most};
}

}  // namespace toposcalc
