#pragma once

#include "weyl.hpp"

namespace weylift {

// Kostant cascade of a (sub)system: layers of pairwise-orthogonal positive
// roots obtained by repeatedly taking highest roots of irreducible components
// and restricting to their orthogonal complement.
struct Cascade {
  std::vector<std::vector<Vec>> layers;  // roots, in simple-root coords
  std::vector<Vec> flat;                 // union of layers
  std::vector<Vec> coroot_set;           // aligned duals
};

namespace detail {

// Simple system of a closed positive subset: elements not a sum of two others.
inline std::vector<Vec> simple_of(const std::vector<Vec>& pos) {
  std::set<Vec> pset(pos.begin(), pos.end());
  std::vector<Vec> simple;
  for (const Vec& r : pos) {
    bool is_sum = false;
    for (const Vec& r2 : pos) {
      Vec diff = r - r2;
      if (!is_zero(diff) && pset.count(diff)) {
        is_sum = true;
        break;
      }
    }
    if (!is_sum) simple.push_back(r);
  }
  return simple;
}

}  // namespace detail

// pos: positive roots of a subsystem, coordinates in the ambient simple basis.
inline Cascade kostant_cascade(const RootDatum& rd, std::vector<Vec> pos) {
  Cascade cas;
  std::sort(pos.begin(), pos.end());
  while (!pos.empty()) {
    std::set<Vec> pset(pos.begin(), pos.end());
    std::vector<Vec> simple = detail::simple_of(pos);
    int m = int(simple.size());
    // components of the simple system under the non-orthogonality graph
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int i = 0; i < m; ++i) {
      if (comp[i] != -1) continue;
      comp[i] = ncomp;
      std::vector<int> st{i};
      while (!st.empty()) {
        int a = st.back();
        st.pop_back();
        for (int j = 0; j < m; ++j)
          if (comp[j] == -1 && rd.pairing(rd.coroot_of(simple[a]), simple[j]) != 0) {
            comp[j] = ncomp;
            st.push_back(j);
          }
      }
      ++ncomp;
    }
    // highest root of each component: close the component simples under its
    // own reflections inside pos, take the maximal-height element
    std::vector<Vec> layer;
    for (int c = 0; c < ncomp; ++c) {
      std::set<Vec> roots;
      std::vector<Vec> csimple;
      for (int i = 0; i < m; ++i)
        if (comp[i] == c) {
          roots.insert(simple[i]);
          csimple.push_back(simple[i]);
        }
      bool changed = true;
      while (changed) {
        changed = false;
        for (const Vec& r : std::vector<Vec>(roots.begin(), roots.end()))
          for (const Vec& b : csimple) {
            Vec r2 = r - [&] {
              int k = rd.pairing(rd.coroot_of(b), r);
              Vec sb(b.size());
              for (size_t t = 0; t < b.size(); ++t) sb[t] = k * b[t];
              return sb;
            }();
            if (!all_nonneg(r2)) r2 = -r2;
            if (pset.count(r2) && !roots.count(r2)) {
              roots.insert(r2);
              changed = true;
            }
          }
      }
      Vec theta = *std::max_element(roots.begin(), roots.end(), [](const Vec& a, const Vec& b) {
        int ha = height(a), hb = height(b);
        return ha != hb ? ha < hb : a < b;
      });
      layer.push_back(theta);
    }
    std::sort(layer.begin(), layer.end());
    for (const Vec& t : layer) {
      cas.flat.push_back(t);
      cas.coroot_set.push_back(rd.coroot_of(t));
    }
    cas.layers.push_back(layer);
    // restrict to the orthogonal complement of everything chosen so far
    std::vector<Vec> next;
    for (const Vec& r : pos) {
      bool keep = true;
      for (const Vec& t : cas.flat)
        if (r == t || rd.pairing(rd.coroot_of(t), r) != 0) {
          keep = false;
          break;
        }
      if (keep) next.push_back(r);
    }
    pos = std::move(next);
  }
  return cas;
}

// Check that the product of cascade reflections acts as -1 on the subsystem
// (equivalently -1 lies in its Weyl group); the cascade recursion needs it.
inline bool cascade_is_minus_one(const RootDatum& rd, const Cascade& cas,
                                 const std::vector<Vec>& pos) {
  Mat prod = Mat::identity(rd.rank);
  for (const Vec& t : cas.flat) prod = prod * rd.reflection(t, rd.coroot_of(t)).first;
  for (const Vec& r : pos)
    if (prod.apply(r) != -r) return false;
  return true;
}

inline Cascade kostant_cascade_checked(const RootDatum& rd, const std::vector<Vec>& pos) {
  Cascade cas = kostant_cascade(rd, pos);
  if (!cascade_is_minus_one(rd, cas, pos))
    throw weylift_error("subsystem's longest element is not -1; cascade shape not guaranteed");
  return cas;
}

inline std::vector<Vec> eigen_positive_roots(const RootDatum& rd, const WeylElem& w) {
  std::vector<Vec> pos;
  for (const Vec& r : rd.positive_roots)
    if (w.on_roots.apply(r) == -r) pos.push_back(r);
  return pos;
}

inline Cascade cascade_of(const RootDatum& rd, const WeylElem& w) {
  return kostant_cascade(rd, eigen_positive_roots(rd, w));
}

inline Vec r_from_cascade(const RootDatum& rd, const WeylElem& w) {
  if (!is_involution(w)) throw weylift_error("r_from_cascade needs an involution");
  Vec r(rd.rank, 0);
  for (const Vec& c : cascade_of(rd, w).coroot_set) r = r + c;
  return r;
}

inline WeylElem cascade_reflection_product(const RootDatum& rd, const WeylElem& w) {
  Cascade cas = cascade_of(rd, w);
  WeylElem p = weyl_identity(rd);
  for (const Vec& t : cas.flat) {
    auto [mr, mc] = rd.reflection(t, rd.coroot_of(t));
    p = mul(p, WeylElem{mr, mc});
  }
  return p;
}

// ---- type D signed-permutation model ----
// e-basis: coroot_j = e_j - e_{j+1} for j = 1..l-1, coroot_l = e_{l-1} + e_l
// (1-based).  Coroot-lattice vectors have even e-coordinate sum.

// coroot coords -> e coords
inline Vec typeD_to_e(int l, const Vec& c) {
  Vec v(l, 0);
  for (int j = 0; j + 1 < l; ++j) {
    v[j] += c[j];
    v[j + 1] -= c[j];
  }
  v[l - 2] += c[l - 1];
  v[l - 1] += c[l - 1];
  return v;
}

// e coords -> coroot coords (exact; throws if not in the lattice)
inline Vec typeD_from_e(int l, const Vec& v) {
  Vec c(l, 0);
  c[0] = v[0];
  for (int i = 1; i <= l - 3; ++i) c[i] = v[i] + c[i - 1];
  int prev = l >= 3 ? c[l - 3] : 0;
  int sum = v[l - 2] + prev + v[l - 1];
  if (sum % 2 != 0) throw weylift_error("vector not in the D_l coroot lattice");
  c[l - 1] = sum / 2;
  c[l - 2] = c[l - 1] - v[l - 1];
  return c;
}

// Signed-permutation images: result[i] = +-j (1-based) meaning w(e_i) = +-e_j.
inline std::vector<int> typeD_signed_perm(const RootDatum& rd, const WeylElem& w) {
  int l = rd.rank;
  std::vector<int> img(l, 0);
  for (int i = 0; i < l; ++i) {
    Vec two_e(l, 0);
    two_e[i] = 2;
    Vec image = typeD_to_e(l, w.on_coroots.apply(typeD_from_e(l, two_e)));
    int j = -1, d = 0;
    for (int k = 0; k < l; ++k) {
      if (image[k] == 0) continue;
      if (j != -1 || image[k] % 2 != 0) throw weylift_error("not a signed permutation");
      j = k;
      d = image[k] / 2;
    }
    if (j == -1 || (d != 1 && d != -1)) throw weylift_error("not a signed permutation");
    img[i] = (j + 1) * d;
  }
  return img;
}

// The explicit coordinate cascade of a type-D involution: e_i - e_j for swap
// pairs, e_i + e_j for flip pairs, both for consecutive pairs of the set of
// indices negated by w.  Errors on an odd number of sign changes.
inline std::vector<Vec> typeD_cascade_oracle(const std::vector<int>& img, int l) {
  int flips = 0;
  for (int i = 0; i < l; ++i)
    if (img[i] < 0) ++flips;
  if (flips % 2 != 0) throw weylift_error("odd number of sign changes: not in W(D_l)");
  std::vector<Vec> out;
  auto emit = [&](int i, int j, int sign) {  // 1-based, e_i + sign*e_j
    Vec v(l, 0);
    v[i - 1] = 1;
    v[j - 1] = sign;
    out.push_back(typeD_from_e(l, v));
  };
  std::vector<int> zminus;
  for (int i = 1; i <= l; ++i) {
    int v = img[i - 1];
    if (v == -i) zminus.push_back(i);
    else if (v > i) emit(i, v, -1);
    else if (v < 0 && -v > i) emit(i, -v, +1);
    else if (v != i && std::abs(v) < i) continue;  // seen from the smaller index
  }
  for (size_t k = 0; k + 1 < zminus.size(); k += 2) {
    emit(zminus[k], zminus[k + 1], -1);
    emit(zminus[k], zminus[k + 1], +1);
  }
  return out;
}

inline std::vector<Vec> typeD_cascade_oracle(const RootDatum& rd, const WeylElem& w) {
  return typeD_cascade_oracle(typeD_signed_perm(rd, w), rd.rank);
}

}  // namespace weylift
