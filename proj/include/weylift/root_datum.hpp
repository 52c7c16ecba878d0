#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "core.hpp"

namespace weylift {

// Cartan matrix convention: A.at(i,j) = <coroot_i, root_j>, Bourbaki numbering.
struct CartanSpec {
  std::string label;
  int rank = 0;
  Mat A;
};

namespace detail {

inline Mat cartan_matrix(char type, int l) {
  Mat A(l);
  auto chain = [&](int i, int j) {  // single edge i--j
    A.at(i, j) = -1;
    A.at(j, i) = -1;
  };
  for (int i = 0; i < l; ++i) A.at(i, i) = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_l short
      if (l < 2) throw weylift_error("B_l needs l >= 2");
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      A.at(l - 2, l - 1) = -1;
      A.at(l - 1, l - 2) = -2;
      break;
    case 'C':  // alpha_l long
      if (l < 2) throw weylift_error("C_l needs l >= 2");
      for (int i = 0; i + 1 < l; ++i) chain(i, i + 1);
      A.at(l - 2, l - 1) = -2;
      A.at(l - 1, l - 2) = -1;
      break;
    case 'D':
      if (l < 3) throw weylift_error("D_l needs l >= 3");
      for (int i = 0; i + 2 < l; ++i) chain(i, i + 1);
      chain(l - 3, l - 1);
      break;
    case 'E': {
      if (l < 6 || l > 8) throw weylift_error("E_l needs l in {6,7,8}");
      // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
      chain(0, 2);
      chain(2, 3);
      chain(3, 4);
      chain(4, 5);
      if (l >= 7) chain(5, 6);
      if (l == 8) chain(6, 7);
      chain(1, 3);
      break;
    }
    case 'F':
      if (l != 4) throw weylift_error("F_l needs l = 4");
      chain(0, 1);
      chain(2, 3);
      A.at(1, 2) = -1;
      A.at(2, 1) = -2;
      break;
    case 'G':  // alpha_1 short
      if (l != 2) throw weylift_error("G_l needs l = 2");
      A.at(0, 1) = -3;
      A.at(1, 0) = -1;
      break;
    default:
      throw weylift_error(std::string("unknown type ") + type);
  }
  return A;
}

// Symmetrizer d with d_i A_ij = d_j A_ji; exists for any generalized Cartan
// matrix whose Coxeter graph is a forest (all finite types).
inline std::vector<long long> symmetrizer(const Mat& A) {
  int n = A.n;
  std::vector<long long> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || A.at(i, j) == 0 || d[j] != 0) continue;
        // d_j = d_i * A_ij / A_ji (keep integral by scaling the component)
        long long num = d[i] * A.at(i, j);
        long long den = A.at(j, i);
        if (num % den != 0) {
          long long f = std::abs(den);
          for (auto& x : d)
            if (x) x *= f;
          num = d[i] * A.at(i, j);
        }
        d[j] = num / den;
        stack.push_back(j);
      }
    }
  }
  return d;
}

// Positive-definiteness of the symmetrized matrix via Bareiss leading minors.
inline bool symmetrization_positive_definite(const Mat& A) {
  int n = A.n;
  auto d = symmetrizer(A);
  for (auto x : d)
    if (x <= 0) return false;
  std::vector<std::vector<long long>> B(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B[i][j] = d[i] * A.at(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (B[i][j] != B[j][i]) return false;
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    if (B[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        B[i][j] = (B[i][j] * B[k][k] - B[i][k] * B[k][j]) / prev;
    prev = B[k][k];
  }
  return true;
}

}  // namespace detail

// Parse labels like "A3", "B2", "E8", or products "A1xA1", "B2xG2".
inline CartanSpec cartan_spec(const std::string& label) {
  std::vector<std::pair<char, int>> parts;
  size_t i = 0;
  while (i < label.size()) {
    char t = char(std::toupper(label[i++]));
    if (t < 'A' || t > 'G') throw weylift_error("bad type label: " + label);
    size_t j = i;
    while (j < label.size() && std::isdigit(label[j])) ++j;
    if (j == i) throw weylift_error("bad type label: " + label);
    int l = std::stoi(label.substr(i, j - i));
    parts.push_back({t, l});
    i = j;
    if (i < label.size()) {
      if (label[i] != 'x' && label[i] != 'X') throw weylift_error("bad type label: " + label);
      ++i;
    }
  }
  if (parts.empty()) throw weylift_error("empty type label");
  int rank = 0;
  for (auto& [t, l] : parts) rank += l;
  Mat A(rank);
  int off = 0;
  for (auto& [t, l] : parts) {
    Mat blk = detail::cartan_matrix(t, l);
    for (int r = 0; r < l; ++r)
      for (int c = 0; c < l; ++c) A.at(off + r, off + c) = blk.at(r, c);
    off += l;
  }
  CartanSpec spec;
  spec.label = label;
  spec.rank = rank;
  spec.A = A;
  return spec;
}

inline void validate_cartan(const Mat& A) {
  int n = A.n;
  for (int i = 0; i < n; ++i) {
    if (A.at(i, i) != 2) throw weylift_error("Cartan diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (A.at(i, j) > 0) throw weylift_error("positive off-diagonal Cartan entry");
      if ((A.at(i, j) == 0) != (A.at(j, i) == 0))
        throw weylift_error("asymmetric zero pattern in Cartan matrix");
    }
  }
  if (!detail::symmetrization_positive_definite(A))
    throw weylift_error("Cartan matrix is not of finite type");
}

struct RootDatum {
  CartanSpec spec;
  int rank = 0;
  std::vector<Vec> positive_roots;    // coords in simple-root basis, sorted by (height, lex)
  std::vector<Vec> positive_coroots;  // aligned: positive_coroots[k] = dual of positive_roots[k]
  std::vector<Mat> srefl_root;        // s_i on root coordinates
  std::vector<Mat> srefl_coroot;      // s_i on coroot coordinates
  std::map<Vec, int> root_index;      // positive root -> index
  std::map<Vec, int> coroot_index;

  // <c, r> with c in coroot coords, r in root coords: c^T A r.
  int pairing(const Vec& c, const Vec& r) const {
    long long acc = 0;
    for (int i = 0; i < rank; ++i) {
      if (c[i] == 0) continue;
      long long row = 0;
      for (int j = 0; j < rank; ++j) row += (long long)spec.A.at(i, j) * r[j];
      acc += (long long)c[i] * row;
    }
    return int(acc);
  }

  bool is_root(const Vec& r) const {
    return root_index.count(r) || root_index.count(-r);
  }

  // Dual coroot of an arbitrary root (given in root coords).
  Vec coroot_of(const Vec& r) const {
    auto it = root_index.find(r);
    if (it != root_index.end()) return positive_coroots[it->second];
    it = root_index.find(-r);
    if (it != root_index.end()) return -positive_coroots[it->second];
    throw weylift_error("not a root");
  }

  // Reflection s_beta as a pair of matrices (on roots, on coroots).
  std::pair<Mat, Mat> reflection(const Vec& root, const Vec& coroot) const {
    Mat mr = Mat::identity(rank), mc = Mat::identity(rank);
    // x -> x - <beta_check, x> beta  : subtract root[i] * (coroot^T A)_j
    // c -> c - <c, beta> beta_check  : subtract coroot[i] * (A root)_j
    Vec ca(rank, 0), ar(rank, 0);
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) {
        ca[j] += coroot[k] * spec.A.at(k, j);
        ar[j] += spec.A.at(j, k) * root[k];
      }
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        mr.at(i, j) -= root[i] * ca[j];
        mc.at(i, j) -= coroot[i] * ar[j];
      }
    return {mr, mc};
  }
};

inline RootDatum build_root_datum(const CartanSpec& spec) {
  validate_cartan(spec.A);
  RootDatum rd;
  rd.spec = spec;
  rd.rank = spec.rank;
  int l = spec.rank;
  for (int i = 0; i < l; ++i) {
    Mat mr = Mat::identity(l), mc = Mat::identity(l);
    for (int j = 0; j < l; ++j) {
      mr.at(i, j) -= spec.A.at(i, j);
      mc.at(i, j) -= spec.A.at(j, i);
    }
    rd.srefl_root.push_back(mr);
    rd.srefl_coroot.push_back(mc);
  }
  // Closure from the simple roots; coroots follow the same orbits.
  std::map<Vec, Vec> pairs;  // root -> coroot
  std::vector<Vec> frontier;
  for (int i = 0; i < l; ++i) {
    Vec e(l, 0);
    e[i] = 1;
    pairs[e] = e;
    frontier.push_back(e);
  }
  const size_t cap = 100000;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& r : frontier) {
      Vec c = pairs[r];
      for (int i = 0; i < l; ++i) {
        Vec r2 = rd.srefl_root[i].apply(r);
        if (!pairs.count(r2)) {
          pairs[r2] = rd.srefl_coroot[i].apply(c);
          next.push_back(r2);
        }
      }
    }
    frontier = std::move(next);
    if (pairs.size() > cap) throw weylift_error("root closure exceeded cap; not finite type?");
  }
  for (auto& [r, c] : pairs)
    if (all_nonneg(r)) rd.positive_roots.push_back(r);
  std::sort(rd.positive_roots.begin(), rd.positive_roots.end(), [](const Vec& a, const Vec& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  for (size_t k = 0; k < rd.positive_roots.size(); ++k) {
    rd.positive_coroots.push_back(pairs[rd.positive_roots[k]]);
    rd.root_index[rd.positive_roots[k]] = int(k);
    rd.coroot_index[rd.positive_coroots[k]] = int(k);
  }
  return rd;
}

inline RootDatum build_root_datum(const std::string& label) {
  return build_root_datum(cartan_spec(label));
}

}  // namespace weylift
