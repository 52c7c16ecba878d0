#pragma once

#include "lifting.hpp"

namespace weylift {

// Normal form w-dot * t(eps) with t in L/2L; eps = -1.
struct TitsElem {
  WeylElem w;
  Vec t;  // 0/1 vector, simple-coroot coordinates mod 2

  bool operator==(const TitsElem& o) const { return w == o.w && t == o.t; }
  bool operator!=(const TitsElem& o) const { return !(*this == o); }
};

inline TitsElem tits_identity(const RootDatum& rd) {
  return {weyl_identity(rd), Vec(rd.rank, 0)};
}

inline TitsElem tits_dot(const RootDatum& rd, const WeylElem& w) {
  return {w, Vec(rd.rank, 0)};
}

// (w, t) * s-dot: torus part conjugates through s; crossing a descent costs
// the 2-torsion correction coroot_s (from s-dot^2 = eps_s).
inline TitsElem tits_push(const RootDatum& rd, const TitsElem& a, int s) {
  Vec as(rd.rank, 0);
  as[s] = 1;
  bool up = all_nonneg(a.w.on_roots.apply(as));  // |ws| > |w|
  TitsElem r;
  r.w = mul(a.w, simple_reflection(rd, s));
  r.t = mod2(rd.srefl_coroot[s].apply(a.t));
  if (!up) r.t[s] ^= 1;
  return r;
}

inline TitsElem tits_mul(const RootDatum& rd, const TitsElem& a, const TitsElem& b) {
  TitsElem c = a;
  for (int s : reduced_word(rd, b.w)) c = tits_push(rd, c, s);
  c.t = mod2(c.t + b.t);
  return c;
}

inline TitsElem tits_from_word(const RootDatum& rd, const std::vector<int>& word) {
  TitsElem c = tits_identity(rd);
  for (int s : word) c = tits_push(rd, c, s);
  return c;
}

// Torus part of a*a; requires the Weyl part to be an involution.
inline Vec tits_square(const RootDatum& rd, const TitsElem& a) {
  if (!is_involution(a.w)) throw weylift_error("tits_square needs an involution Weyl part");
  TitsElem sq = tits_mul(rd, a, a);
  if (!sq.w.is_identity()) throw weylift_error("square has nontrivial Weyl part");
  return sq.t;
}

inline bool is_connected_subset(const RootDatum& rd, const std::vector<int>& J) {
  if (J.empty()) return false;
  std::vector<int> seen{J[0]};
  std::vector<int> st{J[0]};
  while (!st.empty()) {
    int a = st.back();
    st.pop_back();
    for (int b : J)
      if (rd.spec.A.at(a, b) != 0 && std::find(seen.begin(), seen.end(), b) == seen.end()) {
        seen.push_back(b);
        st.push_back(b);
      }
  }
  return seen.size() == J.size();
}

// For irreducible W_J with central longest element: w_J-dot^2 = r_{w_J}(eps),
// and for the reflection in the highest root alpha_J of W_J:
// s_alpha-dot^2 = r_{s_alpha}(eps) = coroot(alpha_J) mod 2.
inline bool verify_lemma21(const RootDatum& rd, const std::vector<int>& J) {
  if (!is_connected_subset(rd, J)) throw weylift_error("W_J must be irreducible");
  WeylElem wJ = longest_element(rd, J);
  for (int s : J)
    if (!negates_simple(rd, wJ, s))
      throw weylift_error("longest element of W_J is not central");
  Memo memo;
  if (tits_square(rd, tits_dot(rd, wJ)) != mod2(r_recursive(rd, wJ, memo))) return false;
  // highest root of the J-subsystem
  Vec alpha;
  int best = -1;
  for (const Vec& r : rd.positive_roots) {
    bool supported = true;
    for (int i = 0; i < rd.rank; ++i)
      if (r[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) supported = false;
    if (supported && height(r) > best) {
      best = height(r);
      alpha = r;
    }
  }
  auto [mr, mc] = rd.reflection(alpha, rd.coroot_of(alpha));
  WeylElem salpha{mr, mc};
  if (tits_square(rd, tits_dot(rd, salpha)) != mod2(rd.coroot_of(alpha))) return false;
  return tits_square(rd, tits_dot(rd, salpha)) == mod2(r_recursive(rd, salpha, memo));
}

// Square identity for the distinguished lift: (w-dot b_w(eps))^2 = r_w(eps).
inline bool verify_property_v(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp,
                              Memo& rmemo, Memo& bmemo) {
  TitsElem n{w, b_recursive(rd, w, Sp, bmemo)};
  return tits_square(rd, n) == mod2(r_recursive(rd, w, rmemo));
}

inline bool verify_property_v(const RootDatum& rd, const WeylElem& w, const std::vector<int>& Sp) {
  Memo rm, bm;
  return verify_property_v(rd, w, Sp, rm, bm);
}

}  // namespace weylift
