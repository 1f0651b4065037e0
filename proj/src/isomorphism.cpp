#include "toposcalc/isomorphism.hpp"

#include <algorithm>

namespace toposcalc {

namespace {

void require_same_signature(const Structure& m, const Structure& n) {
  if (!(m.signature() == n.signature())) {
    throw Error(ErrorKind::SignatureMismatch, "structures have different signatures");
  }
}

// Partial bijection between two universes, extended one pair at a time.
class Matching {
 public:
  Matching(const Structure& m, const Structure& n)
      : m_(m), n_(n), fwd_(m.size(), -1), bwd_(n.size(), -1) {}

  int image(int a) const { return fwd_[a]; }
  int preimage(int b) const { return bwd_[b]; }

  /// Adds (a, b) if that keeps a partial isomorphism. A pair already present
  /// is accepted as is.
  bool extend(int a, int b) {
    if (fwd_[a] == b && bwd_[b] == a) {
      trail_.push_back(-1);
      return true;
    }
    if (fwd_[a] != -1 || bwd_[b] != -1) return false;
    fwd_[a] = b;
    bwd_[b] = a;
    trail_.push_back(a);
    if (!consistent(a, b)) {
      retract();
      return false;
    }
    return true;
  }

  void retract() {
    int a = trail_.back();
    trail_.pop_back();
    if (a < 0) return;
    bwd_[fwd_[a]] = -1;
    fwd_[a] = -1;
  }

  Isomorphism table() const { return fwd_; }

 private:
  bool consistent(int a, int b) const {
    for (const auto& [name, value] : m_.constants()) {
      int other = n_.constant(name);
      if ((value == a) != (other == b)) return false;
    }
    for (const auto& [name, arity] : m_.signature().relations) {
      const auto& rm = m_.relation(name);
      const auto& rn = n_.relation(name);
      for (const auto& t : rm) {
        if (std::find(t.begin(), t.end(), a) == t.end()) continue;
        Tuple img;
        for (int x : t) {
          if (fwd_[x] < 0) break;
          img.push_back(fwd_[x]);
        }
        if (img.size() == t.size() && !rn.count(img)) return false;
      }
      for (const auto& u : rn) {
        if (std::find(u.begin(), u.end(), b) == u.end()) continue;
        Tuple pre;
        for (int y : u) {
          if (bwd_[y] < 0) break;
          pre.push_back(bwd_[y]);
        }
        if (pre.size() == u.size() && !rm.count(pre)) return false;
      }
    }
    return true;
  }

  const Structure& m_;
  const Structure& n_;
  std::vector<int> fwd_;
  std::vector<int> bwd_;
  std::vector<int> trail_;
};

bool alternate(Matching& match, const Structure& m, const Structure& n,
               bool m_turn) {
  auto next_m = [&] {
    for (int a = 0; a < m.size(); ++a) {
      if (match.image(a) < 0) return a;
    }
    return -1;
  };
  auto next_n = [&] {
    for (int b = 0; b < n.size(); ++b) {
      if (match.preimage(b) < 0) return b;
    }
    return -1;
  };
  int a = next_m();
  int b = next_n();
  if (a < 0 && b < 0) return true;
  if (a < 0 || b < 0) return false;
  if (m_turn) {
    for (int cand = 0; cand < n.size(); ++cand) {
      if (match.preimage(cand) >= 0 || !match.extend(a, cand)) continue;
      if (alternate(match, m, n, false)) return true;
      match.retract();
    }
  } else {
    for (int cand = 0; cand < m.size(); ++cand) {
      if (match.image(cand) >= 0 || !match.extend(cand, b)) continue;
      if (alternate(match, m, n, true)) return true;
      match.retract();
    }
  }
  return false;
}

void enumerate(Matching& match, const Structure& m, const Structure& n, int a,
               std::vector<Isomorphism>& out) {
  if (a == m.size()) {
    out.push_back(match.table());
    return;
  }
  for (int b = 0; b < n.size(); ++b) {
    if (match.preimage(b) >= 0 || !match.extend(a, b)) continue;
    enumerate(match, m, n, a + 1, out);
    match.retract();
  }
}

bool seed_into(Matching& match, const PartialIso& seed) {
  for (const auto& [a, b] : seed.pairs) {
    if (!match.extend(a, b)) return false;
  }
  return true;
}

// Calls visit on every injective map from `domain` into [0, size), in
// lexicographic order of images. Stops when visit returns true.
template <typename Visit>
bool for_each_injection(const std::vector<int>& domain, int size,
                        std::vector<int>& image, std::vector<bool>& used,
                        Visit&& visit) {
  if (image.size() == domain.size()) return visit();
  for (int b = 0; b < size; ++b) {
    if (used[b]) continue;
    used[b] = true;
    image.push_back(b);
    bool stop = for_each_injection(domain, size, image, used, visit);
    image.pop_back();
    used[b] = false;
    if (stop) return true;
  }
  return false;
}

}  // namespace

bool is_partial_iso(const Structure& m, const Structure& n, const PartialIso& p) {
  require_same_signature(m, n);
  for (const auto& [a, b] : p.pairs) {
    if (a < 0 || a >= m.size() || b < 0 || b >= n.size()) return false;
  }
  Matching match(m, n);
  return seed_into(match, p);
}

std::optional<Isomorphism> back_and_forth(const Structure& m, const Structure& n) {
  return back_and_forth(m, n, PartialIso{});
}

std::optional<Isomorphism> back_and_forth(const Structure& m, const Structure& n,
                                          const PartialIso& seed) {
  require_same_signature(m, n);
  if (m.size() != n.size()) return std::nullopt;
  if (!is_partial_iso(m, n, seed)) return std::nullopt;
  Matching match(m, n);
  seed_into(match, seed);
  if (!alternate(match, m, n, true)) return std::nullopt;
  return match.table();
}

std::vector<Isomorphism> all_isomorphisms(const Structure& m, const Structure& n) {
  require_same_signature(m, n);
  std::vector<Isomorphism> out;
  if (m.size() != n.size()) return out;
  Matching match(m, n);
  enumerate(match, m, n, 0, out);
  return out;
}

bool same_type(const Structure& m, const std::vector<int>& a,
               const Structure& n, const std::vector<int>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "tuples have different lengths");
  }
  require_same_signature(m, n);
  for (int x : a) {
    if (x < 0 || x >= m.size()) {
      throw Error(ErrorKind::UnknownElement, "tuple entry out of range");
    }
  }
  for (int y : b) {
    if (y < 0 || y >= n.size()) {
      throw Error(ErrorKind::UnknownElement, "tuple entry out of range");
    }
  }
  PartialIso seed;
  for (std::size_t i = 0; i < a.size(); ++i) seed.pairs.emplace_back(a[i], b[i]);
  return back_and_forth(m, n, seed).has_value();
}

HomogeneityCheck is_homogeneous(const Structure& m) {
  std::vector<bool> is_const(m.size(), false);
  for (const auto& [name, value] : m.constants()) is_const[value] = true;
  const int size = m.size();
  HomogeneityCheck result;
  for (int k = 0; k <= size; ++k) {
    // domains of size k in lexicographic order
    std::vector<bool> pick(size, false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      std::vector<int> domain;
      bool has_consts = true;
      for (int i = 0; i < size; ++i) {
        if (pick[i]) domain.push_back(i);
        else if (is_const[i]) has_consts = false;
      }
      if (!has_consts) continue;
      std::vector<int> image;
      std::vector<bool> used(size, false);
      bool found = for_each_injection(domain, size, image, used, [&] {
        PartialIso p;
        for (std::size_t i = 0; i < domain.size(); ++i) {
          p.pairs.emplace_back(domain[i], image[i]);
        }
        if (!is_partial_iso(m, m, p)) return false;
        if (back_and_forth(m, m, p)) return false;
        result.ok = false;
        result.witness = p;
        return true;
      });
      if (found) return result;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return result;
}

}  // namespace toposcalc
