#pragma once

#include "finite_field.hpp"
#include "tits.hpp"

namespace weylift {

// w-dot * t with t = prod_i coroot_i(u_i) a torus point over F_{p^2}
// (simply connected convention: torus = (k*)^l in the simple-coroot basis).
struct NormPoint {
  WeylElem w;
  std::vector<Fp2> t;
};

inline bool norm_eq(const NormPoint& a, const NormPoint& b) {
  return a.w == b.w && a.t == b.t;
}

inline std::vector<Fp2> torus_identity(const FieldCtx& f, int l) {
  return std::vector<Fp2>(l, fp2(f, 1));
}

// prod_i coroot_i(c)^{y_i}, as a coordinate vector.
inline std::vector<Fp2> torus_eval(const FieldCtx& f, const Vec& y, const Fp2& c) {
  if (is_zero(f, c)) throw weylift_error("torus_eval needs c != 0");
  std::vector<Fp2> t;
  t.reserve(y.size());
  for (int e : y) t.push_back(pow(f, c, e));
  return t;
}

inline std::vector<Fp2> torus_mul(const FieldCtx& f, const std::vector<Fp2>& a,
                                  const std::vector<Fp2>& b) {
  std::vector<Fp2> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul(f, a[i], b[i]);
  return r;
}

// Action of a Weyl element on torus coordinates: exponent matrix on coroots.
inline std::vector<Fp2> torus_act(const FieldCtx& f, const Mat& mc, const std::vector<Fp2>& u) {
  int l = mc.n;
  std::vector<Fp2> r(l, fp2(f, 1));
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < l; ++i)
      if (mc.at(j, i) != 0) r[j] = mul(f, r[j], pow(f, u[i], mc.at(j, i)));
  return r;
}

// (w, u) * s-dot, the Tits cocycle with full torus coordinates.
inline NormPoint norm_push(const RootDatum& rd, const FieldCtx& f, const NormPoint& a, int s) {
  Vec as(rd.rank, 0);
  as[s] = 1;
  bool up = all_nonneg(a.w.on_roots.apply(as));
  NormPoint r;
  r.w = mul(a.w, simple_reflection(rd, s));
  r.t = torus_act(f, rd.srefl_coroot[s], a.t);
  if (!up) r.t[s] = mul(f, r.t[s], eps(f));
  return r;
}

inline NormPoint normalizer_mul(const RootDatum& rd, const FieldCtx& f, const NormPoint& a,
                                const NormPoint& b) {
  NormPoint c = a;
  for (int s : reduced_word(rd, b.w)) c = norm_push(rd, f, c, s);
  c.t = torus_mul(f, c.t, b.t);
  return c;
}

inline bool is_norm_identity(const RootDatum& rd, const FieldCtx& f, const NormPoint& n) {
  if (!n.w.is_identity()) return false;
  for (const Fp2& x : n.t)
    if (x != fp2(f, 1)) return false;
  return true;
}

// n_{w,c,S'} = w-dot r_w(c) b_w^{S'}(eps).
inline NormPoint build_lift(const RootDatum& rd, const FieldCtx& f, const WeylElem& w,
                            const Fp2& c, const std::vector<int>& Sp, Memo& rmemo, Memo& bmemo) {
  Vec r = r_recursive(rd, w, rmemo);
  Vec b = b_recursive(rd, w, Sp, bmemo);
  return {w, torus_mul(f, torus_eval(f, r, c), torus_eval(f, b, eps(f)))};
}

inline NormPoint build_lift(const RootDatum& rd, const FieldCtx& f, const WeylElem& w,
                            const Fp2& c, const std::vector<int>& Sp) {
  Memo rm, bm;
  return build_lift(rd, f, w, c, Sp, rm, bm);
}

// phi raises torus coordinates to the p-th power and fixes the Tits section.
inline NormPoint frobenius(const FieldCtx& f, const NormPoint& n) {
  NormPoint r = n;
  for (Fp2& x : r.t) x = frobenius(f, x);
  return r;
}

// phi'(n_{w,c,S'}) = n_{w,phi'(c),S'}, checked as phi(n) * n_{w,-phi(c),S'} = 1.
inline bool verify_theorem05(const RootDatum& rd, const FieldCtx& f, const WeylElem& w,
                             const Fp2& c, const std::vector<int>& Sp, Memo& rmemo, Memo& bmemo) {
  NormPoint n = build_lift(rd, f, w, c, Sp, rmemo, bmemo);
  Fp2 cc = neg(f, frobenius(f, c));
  NormPoint m = build_lift(rd, f, w, cc, Sp, rmemo, bmemo);
  return is_norm_identity(rd, f, normalizer_mul(rd, f, frobenius(f, n), m));
}

inline bool verify_theorem05(const RootDatum& rd, const FieldCtx& f, const WeylElem& w,
                             const Fp2& c, const std::vector<int>& Sp) {
  Memo rm, bm;
  return verify_theorem05(rd, f, w, c, Sp, rm, bm);
}

// Twisted Frobenius on the torus: phi_w(t) = w(phi(t)).
inline std::vector<Fp2> twisted_frobenius(const RootDatum& rd, const FieldCtx& f,
                                          const WeylElem& w, const std::vector<Fp2>& t) {
  std::vector<Fp2> ft(t);
  for (Fp2& x : ft) x = frobenius(f, x);
  return torus_act(f, w.on_coroots, ft);
}

// Count t in T(F_{p^2}) with phi_w(t) * t = 1, by brute force; rank <= 2, p <= 5.
inline long long count_antifixed_torus(const RootDatum& rd, const FieldCtx& f, const WeylElem& w) {
  int l = rd.rank;
  if (l > 2 || f.p > 5) throw weylift_error("count_antifixed_torus budget: rank <= 2, p <= 5");
  std::vector<Fp2> nz;
  for (const Fp2& x : all_elements(f))
    if (!is_zero(f, x)) nz.push_back(x);
  long long count = 0;
  std::vector<int> idx(l, 0);
  for (;;) {
    std::vector<Fp2> t(l);
    for (int i = 0; i < l; ++i) t[i] = nz[idx[i]];
    std::vector<Fp2> prod = torus_mul(f, twisted_frobenius(rd, f, w, t), t);
    bool ok = true;
    for (const Fp2& x : prod)
      if (x != fp2(f, 1)) ok = false;
    if (ok) ++count;
    int i = 0;
    while (i < l && ++idx[i] == int(nz.size())) idx[i++] = 0;
    if (i == l) break;
  }
  return count;
}

// Count t with phi_w(t) = t (same brute force), for the quotient prediction.
inline long long count_fixed_torus(const RootDatum& rd, const FieldCtx& f, const WeylElem& w) {
  int l = rd.rank;
  if (l > 2 || f.p > 5) throw weylift_error("count_fixed_torus budget: rank <= 2, p <= 5");
  std::vector<Fp2> nz;
  for (const Fp2& x : all_elements(f))
    if (!is_zero(f, x)) nz.push_back(x);
  long long count = 0;
  std::vector<int> idx(l, 0);
  for (;;) {
    std::vector<Fp2> t(l);
    for (int i = 0; i < l; ++i) t[i] = nz[idx[i]];
    if (twisted_frobenius(rd, f, w, t) == t) ++count;
    int i = 0;
    while (i < l && ++idx[i] == int(nz.size())) idx[i++] = 0;
    if (i == l) break;
  }
  return count;
}

}  // namespace weylift
