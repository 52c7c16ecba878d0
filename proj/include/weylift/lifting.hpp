#pragma once

#include "cascade.hpp"

namespace weylift {

// S': one class of the 2-coloring of the Coxeter graph; both S' and its
// complement are pairwise commuting.  The class of the lowest index is chosen.
inline std::vector<int> canonical_halving(const RootDatum& rd) {
  int l = rd.rank;
  std::vector<int> color(l, -1);
  for (int start = 0; start < l; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::vector<int> st{start};
    while (!st.empty()) {
      int a = st.back();
      st.pop_back();
      for (int j = 0; j < l; ++j)
        if (j != a && rd.spec.A.at(a, j) != 0) {
          if (color[j] == -1) {
            color[j] = 1 - color[a];
            st.push_back(j);
          } else if (color[j] == color[a]) {
            throw weylift_error("Coxeter graph not bipartite");
          }
        }
    }
  }
  std::vector<int> out;
  for (int s = 0; s < l; ++s)
    if (color[s] == 0) out.push_back(s);
  return out;
}

inline std::vector<int> complement_halving(const RootDatum& rd, const std::vector<int>& h) {
  std::vector<bool> in(rd.rank, false);
  for (int s : h) in[s] = true;
  std::vector<int> out;
  for (int s = 0; s < rd.rank; ++s)
    if (!in[s]) out.push_back(s);
  return out;
}

inline bool is_halving(const RootDatum& rd, const std::vector<int>& h) {
  std::vector<bool> in(rd.rank, false);
  for (int s : h) in[s] = true;
  for (int a = 0; a < rd.rank; ++a)
    for (int b = a + 1; b < rd.rank; ++b)
      if (in[a] == in[b] && rd.spec.A.at(a, b) != 0) return false;
  return true;
}

using Memo = std::unordered_map<std::string, Vec>;

// r_w by the conjugation recursion; base value at central parabolics is the
// cascade sum.  Must coincide with r_from_cascade everywhere.
inline Vec r_recursive(const RootDatum& rd, const WeylElem& w, Memo& memo) {
  auto k = w.key();
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  Lemma14Result dec = lemma14_decompose(rd, w);
  Vec res;
  if (dec.s) {
    int s = *dec.s;
    WeylElem sr = simple_reflection(rd, s);
    res = sr.on_coroots.apply(r_recursive(rd, mul(sr, mul(w, sr)), memo));
  } else {
    res = r_from_cascade(rd, w);
  }
  memo[k] = res;
  return res;
}

inline Vec r_recursive(const RootDatum& rd, const WeylElem& w) {
  Memo memo;
  return r_recursive(rd, w, memo);
}

// The sign in r_{sw} = r_w + (w:s) coroot_s; requires sw = ws.
inline int colon(const RootDatum& rd, const WeylElem& w, int s, Memo& memo) {
  WeylElem sr = simple_reflection(rd, s);
  if (mul(sr, w) != mul(w, sr)) throw weylift_error("colon requires sw = ws");
  Vec diff = r_recursive(rd, mul(sr, w), memo) - r_recursive(rd, w, memo);
  int n = diff[s];
  Vec check(rd.rank, 0);
  check[s] = n;
  if (diff != check || n < -1 || n > 1)
    throw weylift_error("r_{sw} - r_w is not in {-1,0,1} * coroot_s");
  return n;
}

inline int colon(const RootDatum& rd, const WeylElem& w, int s) {
  Memo memo;
  return colon(rd, w, s, memo);
}

inline bool is_simply_laced(const RootDatum& rd) {
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j)
      if (i != j && rd.spec.A.at(i, j) < -1) return false;
  return true;
}

// Branch-parity rule for (w:s) in simply-laced types: m = number of nodes on
// the unique chain in the Dynkin diagram of the (-1)-eigensubsystem from
// coroot_s to the branch point (m = 1 for an A1 component); (w:s) = (-1)^m
// when |sw| < |w|, and (-1)^{m+1} via the chain taken in R_{sw} otherwise.
// Components with a branch point anchor with the opposite parity from A1
// components (checked exhaustively against the r-difference definition,
// which is authoritative).
inline int colon_branch_rule(const RootDatum& rd, const WeylElem& w, int s) {
  if (!is_simply_laced(rd)) throw weylift_error("branch rule needs a simply-laced datum");
  WeylElem sr = simple_reflection(rd, s);
  if (mul(sr, w) != mul(w, sr)) throw weylift_error("colon requires sw = ws");
  Vec as(rd.rank, 0);
  as[s] = 1;
  bool descent = w.on_roots.apply(as) == -as;  // |sw| < |w| for commuting s
  WeylElem u = descent ? w : mul(sr, w);
  EigenSubsystem es = eigen_subsystem(rd, u);
  int m = int(es.simple_system.size());
  // locate coroot_s in the simple system of R_u
  std::vector<Vec> pis;
  int start = -1;
  for (int i = 0; i < m; ++i) {
    pis.push_back(rd.positive_roots[es.simple_system[i]]);
    if (pis.back() == as) start = i;
  }
  if (start == -1) throw weylift_error("coroot_s not in the simple system of R_w");
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && rd.pairing(rd.coroot_of(pis[i]), pis[j]) != 0) adj[i].push_back(j);
  // BFS to the branch point of the component; chain length counts nodes
  std::vector<int> dist(m, -1);
  dist[start] = 1;
  std::vector<int> queue{start};
  int chain = -1, branch = -1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int a = queue[qi];
    if (adj[a].size() >= 3 || adj[start].empty()) {  // branch point, or A1 component
      chain = dist[a];
      branch = a;
      break;
    }
    for (int b : adj[a])
      if (dist[b] == -1) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
  }
  if (chain == -1)
    throw weylift_error("no branch point in the component (unexpected A_l, l > 1)");
  // components with a genuine branch point anchor with the opposite parity
  // from a bare chain count; A1 components (branch == start, no edges) do not
  if (!adj[branch].empty()) ++chain;
  return descent ? (chain % 2 ? -1 : 1) : (chain % 2 ? 1 : -1);
}

// b_w^{S'} by the uniqueness recursion.  descent_order permutes the scan over
// simple reflections, exercising choice-independence.
inline Vec b_recursive(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp,
                       Memo& memo, const std::vector<int>* descent_order = nullptr) {
  auto k = w.key();
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  if (!is_involution(w)) throw weylift_error("b_recursive needs an involution");
  int l = rd.rank;
  int len = length(rd, w);
  Vec res(l, 0);
  if (len == 0) {
    // zero
  } else if (len == 1) {
    int s = -1;
    for (int i = 0; i < l; ++i)
      if (w.on_roots == rd.srefl_root[i]) s = i;
    if (s == -1) throw weylift_error("length-1 element is not a simple reflection");
    for (int i : Sp)
      if (i == s) res[s] = 1;
  } else {
    std::vector<int> order;
    if (descent_order) order = *descent_order;
    else
      for (int i = 0; i < l; ++i) order.push_back(i);
    int found = -1;
    for (int s : order) {
      Vec as(l, 0);
      as[s] = 1;
      if (!all_nonpos(w.on_roots.apply(as))) continue;  // need |sw| < |w|
      WeylElem sr = simple_reflection(rd, s);
      if (mul(sr, w) != mul(w, sr)) {
        found = s;
        break;
      }
    }
    if (found >= 0) {
      WeylElem sr = simple_reflection(rd, found);
      Vec b = b_recursive(rd, mul(sr, mul(w, sr)), Sp, memo, descent_order);
      res = mod2(sr.on_coroots.apply(b));
      res[found] ^= 1;
    } else {
      // central parabolic longest element, |w| >= 2: splice coordinates from
      // two shorter involutions s1 w and s2 w
      std::vector<int> J;
      for (int s : order)
        if (negates_simple(rd, w, s)) J.push_back(s);
      if (J.size() < 2) throw weylift_error("central parabolic with |J| < 2 at length >= 2");
      int s1 = J[0], s2 = J[1];
      Vec b1 = b_recursive(rd, mul(simple_reflection(rd, s1), w), Sp, memo, descent_order);
      Vec b2 = b_recursive(rd, mul(simple_reflection(rd, s2), w), Sp, memo, descent_order);
      res = b1;
      res[s1] = b2[s1];
    }
  }
  memo[k] = res;
  return res;
}

inline Vec b_recursive(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp) {
  Memo memo;
  return b_recursive(rd, w, Sp, memo);
}

// Weak variant: only the squaring identity holds; central parabolics take 0.
inline Vec b_weak(const RootDatum& rd, const WeylElem& w, Memo& memo) {
  auto k = w.key();
  auto it = memo.find(k);
  if (it != memo.end()) return it->second;
  Lemma14Result dec = lemma14_decompose(rd, w);
  Vec res(rd.rank, 0);
  if (dec.s) {
    int s = *dec.s;
    WeylElem sr = simple_reflection(rd, s);
    Vec b = b_weak(rd, mul(sr, mul(w, sr)), memo);
    res = mod2(sr.on_coroots.apply(b));
    res[s] ^= 1;
  }
  memo[k] = res;
  return res;
}

inline Vec b_weak(const RootDatum& rd, const WeylElem& w) {
  Memo memo;
  return b_weak(rd, w, memo);
}

// Truncation of r_w to the S' coordinates, mod 2.
inline Vec r_truncated(const RootDatum& rd, const Vec& r, const std::vector<int>& Sp) {
  Vec out(rd.rank, 0);
  for (int s : Sp) out[s] = ((r[s] % 2) + 2) % 2;
  return out;
}

// Closed form for b_w in type D_l: r_w^{S'} plus, for every unordered pair of
// distinct blocks of the signed involution, the full overlap of their index
// intervals, plus, for every block made of two sign-changed fixed indices, the
// positions of matching parity inside its own interval.  Blocks: swap pairs,
// flip pairs, and consecutive pairs of the sorted sign-changed fixed indices.
inline Vec b_typeD_oracle(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp) {
  if (std::toupper(rd.spec.label[0]) != 'D') throw weylift_error("b_typeD_oracle needs type D");
  int l = rd.rank;
  std::vector<int> img = typeD_signed_perm(rd, w);
  struct Block {
    int i, j;    // 1-based interval [i, j]
    bool zpair;  // block of two sign-changed fixed indices
  };
  std::vector<Block> blocks;
  std::vector<int> zminus;
  for (int i = 1; i <= l; ++i) {
    int v = img[i - 1];
    if (v == -i) zminus.push_back(i);
    else if (v > i) blocks.push_back({i, v, false});
    else if (v < 0 && -v > i) blocks.push_back({i, -v, false});
  }
  for (size_t k = 0; k + 1 < zminus.size(); k += 2)
    blocks.push_back({zminus[k], zminus[k + 1], true});
  Memo memo;
  Vec b = r_truncated(rd, r_recursive(rd, w, memo), Sp);
  for (size_t x = 0; x < blocks.size(); ++x)
    for (size_t y = x + 1; y < blocks.size(); ++y) {
      int lo = std::max(blocks[x].i, blocks[y].i);
      int hi = std::min(blocks[x].j, blocks[y].j);
      for (int a = lo; a < hi; ++a) b[a - 1] ^= 1;  // chain coroot alpha_a
    }
  for (const Block& blk : blocks)
    if (blk.zpair)
      for (int a = blk.i; a < blk.j; ++a)
        if (a % 2 == l % 2) b[a - 1] ^= 1;
  return b;
}

// b with the complemented halving, via b_w^{S-S'} = b_w^{S'} + r_w mod 2.
inline Vec b_flip(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp) {
  Memo rm, bm;
  return mod2(b_recursive(rd, w, Sp, bm) + r_recursive(rd, w, rm));
}

}  // namespace weylift
