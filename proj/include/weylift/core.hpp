#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylift {

using Vec = std::vector<int>;

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline int height(const Vec& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline bool all_nonneg(const Vec& v) {
  for (int x : v)
    if (x < 0) return false;
  return true;
}

inline bool all_nonpos(const Vec& v) {
  for (int x : v)
    if (x > 0) return false;
  return true;
}

inline Vec mod2(const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % 2) + 2) % 2;
  return r;
}

inline bool is_zero(const Vec& v) {
  for (int x : v)
    if (x != 0) return false;
  return true;
}

// Small dense integer matrix, row-major.
struct Mat {
  int n = 0;
  std::vector<int> a;

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(size_t(n_) * n_, 0) {}

  static Mat identity(int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int& at(int r, int c) { return a[size_t(r) * n + c]; }
  int at(int r, int c) const { return a[size_t(r) * n + c]; }

  Mat operator*(const Mat& o) const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        int x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }

  Vec apply(const Vec& v) const {
    Vec r(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  Mat transpose() const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool is_identity() const { return *this == identity(n); }
};

// Canonical byte key for hashing/memoization.
inline std::string mat_key(const Mat& m) {
  std::string k;
  k.reserve(m.a.size() * 2);
  for (int x : m.a) {
    k.push_back(char(x & 0xff));
    k.push_back(char((x >> 8) & 0xff));
  }
  return k;
}

struct weylift_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact coefficients of v as an integral combination of the basis vectors
// (fraction-free elimination; throws if inconsistent, dependent, or
// non-integral).
inline Vec coeffs_in_basis(const std::vector<Vec>& basis, const Vec& v) {
  int n = int(v.size());
  int m = int(basis.size());
  std::vector<std::vector<long long>> M(n, std::vector<long long>(m + 1, 0));
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i) M[i][k] = basis[k][i];
  for (int i = 0; i < n; ++i) M[i][m] = v[i];
  std::vector<int> pivot_col;
  long long prev = 1;
  int row = 0;
  for (int col = 0; col < m && row < n; ++col) {
    int piv = -1;
    for (int i = row; i < n; ++i)
      if (M[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[row]);
    for (int i = row + 1; i < n; ++i) {
      for (int j = col + 1; j <= m; ++j)
        M[i][j] = (__int128(M[i][j]) * M[row][col] - __int128(M[i][col]) * M[row][j]) / prev;
      M[i][col] = 0;
    }
    prev = M[row][col];
    pivot_col.push_back(col);
    ++row;
  }
  if (int(pivot_col.size()) != m) throw weylift_error("coeffs_in_basis: dependent basis");
  for (int i = row; i < n; ++i)
    if (M[i][m] != 0) throw weylift_error("coeffs_in_basis: vector outside the span");
  Vec x(m, 0);
  for (int r = m - 1; r >= 0; --r) {
    long long rhs = M[r][m];
    for (int c = pivot_col[r] + 1; c < m; ++c) rhs -= M[r][c] * x[c];
    if (rhs % M[r][pivot_col[r]] != 0) throw weylift_error("coeffs_in_basis: non-integral");
    x[pivot_col[r]] = int(rhs / M[r][pivot_col[r]]);
  }
  return x;
}

}  // namespace weylift
