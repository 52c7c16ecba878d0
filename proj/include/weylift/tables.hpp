#pragma once

#include "cascade.hpp"

namespace weylift {

// Closed-form expected cascades (coroot sets, as unordered lists) and r
// vectors for the types where -1 lies in the Weyl group, plus the r of the
// longest element for the remaining families.  All vectors use 0-based
// simple-coroot coordinates in Bourbaki numbering.

namespace tables {

inline Vec unit(int l, int i) {  // 1-based i
  Vec v(l, 0);
  v[i - 1] = 1;
  return v;
}

// B_l: for odd i, the chain with coefficient 1 at i, 2 at i+1..l-1, and 1 at l
// (degenerating appropriately near the end), plus singletons at odd positions.
inline std::vector<Vec> cascade_B(int l) {
  std::vector<Vec> out;
  if (l % 2 == 1) {  // B_{2n+1}
    for (int i = 1; i <= l - 2; i += 2) {
      Vec v(l, 0);
      v[i - 1] = 1;
      for (int a = i + 1; a <= l - 1; ++a) v[a - 1] = 2;
      v[l - 1] = 1;
      out.push_back(v);
    }
    for (int i = 1; i <= l; i += 2) out.push_back(unit(l, i));
  } else {  // B_{2n}
    for (int i = 1; i <= l - 1; i += 2) {
      Vec v(l, 0);
      v[i - 1] = 1;
      for (int a = i + 1; a <= l - 1; ++a) v[a - 1] = 2;
      v[l - 1] = 1;  // for i = l-1 the chain degenerates to alpha_{l-1} + alpha_l
      out.push_back(v);
    }
    for (int i = 1; i <= l - 1; i += 2) out.push_back(unit(l, i));
  }
  return out;
}

// C_l: suffix sums alpha_i + ... + alpha_l.
inline std::vector<Vec> cascade_C(int l) {
  std::vector<Vec> out;
  for (int i = 1; i <= l; ++i) {
    Vec v(l, 0);
    for (int a = i; a <= l; ++a) v[a - 1] = 1;
    out.push_back(v);
  }
  return out;
}

// D_{2n}: chains 1 at i, 2 at i+1..l-2, 1 at l-1 and l, for odd i <= l-3,
// plus singletons at odd positions up to l-3 and at l-1, l.
inline std::vector<Vec> cascade_D_even(int l) {
  std::vector<Vec> out;
  for (int i = 1; i <= l - 3; i += 2) {
    Vec v(l, 0);
    v[i - 1] = 1;
    for (int a = i + 1; a <= l - 2; ++a) v[a - 1] = 2;
    v[l - 2] = 1;
    v[l - 1] = 1;
    out.push_back(v);
  }
  for (int i = 1; i <= l - 3; i += 2) out.push_back(unit(l, i));
  out.push_back(unit(l, l - 1));
  out.push_back(unit(l, l));
  return out;
}

inline std::vector<Vec> cascade_E7() {
  return {{2, 2, 3, 4, 3, 2, 1}, {0, 1, 1, 2, 2, 2, 1}, {0, 1, 1, 2, 1, 0, 0},
          unit(7, 7),            unit(7, 2),            unit(7, 3),
          unit(7, 5)};
}

inline std::vector<Vec> cascade_E8() {
  std::vector<Vec> out{{2, 3, 4, 6, 5, 4, 3, 2}};
  for (const Vec& v : cascade_E7()) {
    Vec w(8, 0);
    for (int i = 0; i < 7; ++i) w[i] = v[i];
    out.push_back(w);
  }
  return out;
}

inline std::vector<Vec> cascade_F4() {
  return {{2, 3, 2, 1}, {0, 1, 1, 1}, {0, 1, 1, 0}, {0, 1, 0, 0}};
}

inline std::vector<Vec> cascade_G2() { return {{1, 2}, {1, 0}}; }

inline std::vector<Vec> cascade_A1() { return {{1}}; }

inline std::vector<Vec> expected_cascade(const std::string& label) {
  char t = char(std::toupper(label[0]));
  int l = std::stoi(label.substr(1));
  switch (t) {
    case 'A':
      if (l == 1) return cascade_A1();
      break;
    case 'B': return cascade_B(l);
    case 'C': return cascade_C(l);
    case 'D':
      if (l % 2 == 0 && l >= 4) return cascade_D_even(l);
      break;
    case 'E':
      if (l == 7) return cascade_E7();
      if (l == 8) return cascade_E8();
      break;
    case 'F': return cascade_F4();
    case 'G': return cascade_G2();
  }
  throw weylift_error("no expected cascade for " + label);
}

// r of the longest element (types with -1 in W are listed first; A_l, D_odd,
// E6 are the longest-element values even though -1 is absent there).
inline Vec expected_r(const std::string& label) {
  char t = char(std::toupper(label[0]));
  int l = std::stoi(label.substr(1));
  Vec r(l, 0);
  switch (t) {
    case 'A': {
      // 1, 2, ..., ceil(l/2), ..., 2, 1 (both parities)
      for (int i = 1; i <= l; ++i) r[i - 1] = std::min(i, l + 1 - i);
      return r;
    }
    case 'B': {
      if (l % 2 == 1) {  // 2,2,4,4,...,2n,2n,(n+1)
        int n = (l - 1) / 2;
        for (int i = 1; i <= l - 1; ++i) r[i - 1] = 2 * ((i + 1) / 2);
        r[l - 1] = n + 1;
      } else {  // 2,2,4,4,...,2(n-1),2(n-1),2n,n
        int n = l / 2;
        for (int i = 1; i <= l - 2; ++i) r[i - 1] = 2 * ((i + 1) / 2);
        r[l - 2] = 2 * n;
        r[l - 1] = n;
      }
      return r;
    }
    case 'C': {
      for (int i = 1; i <= l; ++i) r[i - 1] = i;
      return r;
    }
    case 'D': {
      if (l % 2 == 0) {  // 2,2,4,4,...,(2n-2),(2n-2),n,n
        int n = l / 2;
        for (int i = 1; i <= l - 2; ++i) r[i - 1] = 2 * ((i + 1) / 2);
        r[l - 2] = n;
        r[l - 1] = n;
      } else {  // 2,2,4,4,...,(2n-2),(2n-2),2n,n,n
        int n = (l - 1) / 2;
        for (int i = 1; i <= l - 3; ++i) r[i - 1] = 2 * ((i + 1) / 2);
        r[l - 3] = 2 * n;
        r[l - 2] = n;
        r[l - 1] = n;
      }
      return r;
    }
    case 'E': {
      if (l == 6) return {2, 2, 4, 6, 4, 2};
      if (l == 7) return {2, 5, 6, 8, 7, 4, 3};
      if (l == 8) return {4, 8, 10, 14, 12, 8, 6, 2};
      break;
    }
    case 'F': return {2, 6, 4, 2};
    case 'G': return {2, 2};
  }
  throw weylift_error("no expected r for " + label);
}

// E6 longest-element cascade (backs the tables --section 1.8 output).
inline std::vector<Vec> cascade_E6_w0() {
  return {{1, 2, 2, 3, 2, 1}, {1, 0, 1, 1, 1, 1}, {0, 0, 1, 1, 1, 0}, unit(6, 4)};
}

// Involution counts including the identity, frozen from brute-force runs.
inline long long involution_count(const std::string& label) {
  static const std::map<std::string, long long> counts = {
      {"A1", 2},  {"A2", 4},  {"A3", 10}, {"A4", 26}, {"A5", 76},  {"B2", 6},
      {"B3", 20}, {"B4", 76}, {"C2", 6},  {"C3", 20}, {"C4", 76},  {"D4", 44},
      {"D5", 156}, {"D6", 752}, {"F4", 140}, {"G2", 8}, {"E6", 892}};
  auto it = counts.find(label);
  if (it == counts.end()) throw weylift_error("no frozen involution count for " + label);
  return it->second;
}

}  // namespace tables
}  // namespace weylift
