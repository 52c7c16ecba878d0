#pragma once

#include <optional>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "root_datum.hpp"

namespace weylift {

struct WeylElem {
  Mat on_roots;    // action on root coordinates
  Mat on_coroots;  // action on coroot coordinates

  bool operator==(const WeylElem& o) const { return on_roots == o.on_roots; }
  bool operator!=(const WeylElem& o) const { return !(*this == o); }
  bool is_identity() const { return on_roots.is_identity(); }
  std::string key() const { return mat_key(on_roots); }
};

inline WeylElem weyl_identity(const RootDatum& rd) {
  return {Mat::identity(rd.rank), Mat::identity(rd.rank)};
}

inline WeylElem simple_reflection(const RootDatum& rd, int s) {
  if (s < 0 || s >= rd.rank) throw weylift_error("simple index out of range");
  return {rd.srefl_root[s], rd.srefl_coroot[s]};
}

inline WeylElem mul(const WeylElem& a, const WeylElem& b) {
  return {a.on_roots * b.on_roots, a.on_coroots * b.on_coroots};
}

inline int length(const RootDatum& rd, const WeylElem& w) {
  int n = 0;
  for (const Vec& r : rd.positive_roots)
    if (all_nonpos(w.on_roots.apply(r))) ++n;
  return n;
}

// Lowest i with |w s_i| < |w|, i.e. w(alpha_i) negative; -1 if w = 1.
inline int first_right_descent(const RootDatum& rd, const WeylElem& w) {
  for (int i = 0; i < rd.rank; ++i) {
    bool neg = true;
    for (int r = 0; r < rd.rank; ++r)
      if (w.on_roots.at(r, i) > 0) {
        neg = false;
        break;
      }
    if (neg) return i;
  }
  return -1;
}

inline std::vector<int> reduced_word(const RootDatum& rd, WeylElem w) {
  std::vector<int> rev;
  for (;;) {
    int i = first_right_descent(rd, w);
    if (i < 0) break;
    rev.push_back(i);
    w = mul(w, simple_reflection(rd, i));
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

inline WeylElem from_word(const RootDatum& rd, const std::vector<int>& word) {
  WeylElem w = weyl_identity(rd);
  for (int s : word) w = mul(w, simple_reflection(rd, s));
  return w;
}

inline WeylElem inv(const RootDatum& rd, const WeylElem& w) {
  auto word = reduced_word(rd, w);
  std::reverse(word.begin(), word.end());
  return from_word(rd, word);
}

inline bool is_involution(const WeylElem& w) { return mul(w, w).on_roots.is_identity(); }

// w(alpha_s) = -alpha_s?
inline bool negates_simple(const RootDatum& rd, const WeylElem& w, int s) {
  for (int r = 0; r < rd.rank; ++r)
    if (w.on_roots.at(r, s) != (r == s ? -1 : 0)) return false;
  return true;
}

// Longest element of the standard parabolic W_J.
inline WeylElem longest_element(const RootDatum& rd, const std::vector<int>& J) {
  WeylElem w = weyl_identity(rd);
  for (;;) {
    bool moved = false;
    for (int s : J) {
      Vec img = w.on_roots.apply([&] {
        Vec e(rd.rank, 0);
        e[s] = 1;
        return e;
      }());
      if (all_nonneg(img)) {
        w = mul(w, simple_reflection(rd, s));
        moved = true;
      }
    }
    if (!moved) return w;
  }
}

inline unsigned long long weyl_order(const std::string& label) {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  unsigned long long total = 1;
  size_t i = 0;
  while (i < label.size()) {
    char t = char(std::toupper(label[i++]));
    size_t j = i;
    while (j < label.size() && std::isdigit(label[j])) ++j;
    int l = std::stoi(label.substr(i, j - i));
    i = j;
    if (i < label.size()) ++i;  // 'x'
    switch (t) {
      case 'A': total *= fact(l + 1); break;
      case 'B':
      case 'C': total *= (fact(l) << l); break;
      case 'D': total *= (fact(l) << (l - 1)); break;
      case 'E': total *= (l == 6 ? 51840ULL : l == 7 ? 2903040ULL : 696729600ULL); break;
      case 'F': total *= 1152ULL; break;
      case 'G': total *= 12ULL; break;
      default: throw weylift_error("bad label");
    }
  }
  return total;
}

// Subsets J with w_J central in W_J (i.e. w_J(alpha_s) = -alpha_s for all s in J).
inline std::vector<std::pair<std::vector<int>, WeylElem>> central_parabolics(const RootDatum& rd) {
  std::vector<std::pair<std::vector<int>, WeylElem>> out;
  int l = rd.rank;
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    std::vector<int> J;
    for (int s = 0; s < l; ++s)
      if (mask & (1u << s)) J.push_back(s);
    WeylElem wJ = longest_element(rd, J);
    bool central = true;
    for (int s : J)
      if (!negates_simple(rd, wJ, s)) {
        central = false;
        break;
      }
    if (central) out.push_back({J, wJ});
  }
  return out;
}

// Full-group BFS; only for small groups.
inline std::vector<WeylElem> enumerate_group(const RootDatum& rd, unsigned long long cap = 1000000) {
  std::unordered_map<std::string, WeylElem> seen;
  WeylElem e = weyl_identity(rd);
  seen[e.key()] = e;
  std::vector<WeylElem> frontier{e};
  while (!frontier.empty()) {
    std::vector<WeylElem> next;
    for (const WeylElem& w : frontier)
      for (int s = 0; s < rd.rank; ++s) {
        WeylElem ws = mul(w, simple_reflection(rd, s));
        auto k = ws.key();
        if (!seen.count(k)) {
          seen[k] = ws;
          next.push_back(ws);
          if (seen.size() > cap) throw weylift_error("group enumeration exceeded cap");
        }
      }
    frontier = std::move(next);
  }
  std::vector<WeylElem> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

inline std::vector<WeylElem> involutions_brute(const RootDatum& rd) {
  std::vector<WeylElem> out;
  for (const WeylElem& w : enumerate_group(rd))
    if (is_involution(w)) out.push_back(w);
  return out;
}

// Exhaustive W_2: orbit closure of the central parabolic longest elements
// under w -> s w s (complete since every involution conjugates down to such a
// longest element). Includes the identity.
inline std::vector<WeylElem> involutions(const RootDatum& rd,
                                         unsigned long long budget = 100000) {
  if (weyl_order(rd.spec.label) > budget)
    throw weylift_error("exhaustive involution enumeration beyond budget for " + rd.spec.label);
  std::unordered_map<std::string, WeylElem> seen;
  std::vector<WeylElem> frontier;
  for (auto& [J, wJ] : central_parabolics(rd)) {
    auto k = wJ.key();
    if (!seen.count(k)) {
      seen[k] = wJ;
      frontier.push_back(wJ);
    }
  }
  while (!frontier.empty()) {
    std::vector<WeylElem> next;
    for (const WeylElem& w : frontier)
      for (int s = 0; s < rd.rank; ++s) {
        WeylElem c = mul(simple_reflection(rd, s), mul(w, simple_reflection(rd, s)));
        auto k = c.key();
        if (!seen.count(k)) {
          seen[k] = c;
          next.push_back(c);
        }
      }
    frontier = std::move(next);
  }
  std::vector<WeylElem> out;
  out.reserve(seen.size());
  for (auto& [k, w] : seen) out.push_back(w);
  std::sort(out.begin(), out.end(),
            [&](const WeylElem& a, const WeylElem& b) { return a.on_roots.a < b.on_roots.a; });
  return out;
}

// n random conjugates x w_J x^{-1} of random central parabolic longest elements.
inline std::vector<WeylElem> sample_involutions(const RootDatum& rd, int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  auto cps = central_parabolics(rd);
  std::vector<WeylElem> out;
  std::unordered_set<std::string> seen;
  int word_len = int(rd.positive_roots.size());
  while (int(out.size()) < n) {
    const auto& [J, wJ] = cps[rng() % cps.size()];
    std::vector<int> xw;
    int len = int(rng() % (2 * word_len + 1));
    for (int i = 0; i < len; ++i) xw.push_back(int(rng() % rd.rank));
    WeylElem x = from_word(rd, xw);
    WeylElem w = mul(x, mul(wJ, inv(rd, x)));
    if (seen.insert(w.key()).second) out.push_back(w);
  }
  return out;
}

// Every involution admits either a non-commuting descent s, or is the longest
// element of a central parabolic W_J.
struct Lemma14Result {
  std::optional<int> s;    // case (i)
  std::vector<int> J;      // case (ii)
};

inline Lemma14Result lemma14_decompose(const RootDatum& rd, const WeylElem& w) {
  if (!is_involution(w)) throw weylift_error("lemma14_decompose needs an involution");
  for (int s = 0; s < rd.rank; ++s) {
    // |sw| < |w| iff w^{-1}(alpha_s) = w(alpha_s) negative
    Vec e(rd.rank, 0);
    e[s] = 1;
    if (!all_nonpos(w.on_roots.apply(e))) continue;
    WeylElem sr = simple_reflection(rd, s);
    if (mul(sr, w) != mul(w, sr)) return {s, {}};
  }
  std::vector<int> J;
  for (int s = 0; s < rd.rank; ++s)
    if (negates_simple(rd, w, s)) J.push_back(s);
  // postcondition: w is the longest element of W_J
  if (longest_element(rd, J) != w) throw weylift_error("lemma14_decompose postcondition failed");
  return {std::nullopt, J};
}

// R_w = {alpha : w(alpha) = -alpha}, with positives and simple system.
struct EigenSubsystem {
  std::vector<int> positives;      // indices into rd.positive_roots
  std::vector<int> simple_system;  // subset of positives: Pi_w
};

inline EigenSubsystem eigen_subsystem(const RootDatum& rd, const WeylElem& w) {
  EigenSubsystem es;
  std::set<Vec> posset;
  for (size_t k = 0; k < rd.positive_roots.size(); ++k) {
    const Vec& r = rd.positive_roots[k];
    if (w.on_roots.apply(r) == -r) {
      es.positives.push_back(int(k));
      posset.insert(r);
    }
  }
  for (int k : es.positives) {
    const Vec& r = rd.positive_roots[k];
    bool is_sum = false;
    for (int k2 : es.positives) {
      Vec diff = r - rd.positive_roots[k2];
      if (!is_zero(diff) && posset.count(diff)) {
        is_sum = true;
        break;
      }
    }
    if (!is_sum) es.simple_system.push_back(k);
  }
  return es;
}

}  // namespace weylift
