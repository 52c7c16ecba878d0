#pragma once

#include "core.hpp"

namespace weylift {

// F_{p^2} = F_p(delta), delta^2 = d a quadratic non-residue; p an odd prime.
struct FieldCtx {
  int p = 0;
  int d = 0;

  explicit FieldCtx(int p_) : p(p_) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw weylift_error("p must be an odd prime");
    std::vector<bool> sq(p, false);
    for (int x = 1; x < p; ++x) sq[x * x % p] = true;
    for (int x = 2; x < p; ++x)
      if (!sq[x]) {
        d = x;
        break;
      }
    if (d == 0) throw weylift_error("no quadratic non-residue found");
  }

  static bool is_prime(int n) {
    if (n < 2) return false;
    for (int k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return true;
  }
};

// a + b*delta
struct Fp2 {
  int a = 0, b = 0;
};

inline Fp2 fp2(const FieldCtx& f, int a, int b = 0) {
  return {((a % f.p) + f.p) % f.p, ((b % f.p) + f.p) % f.p};
}

inline bool operator==(const Fp2& x, const Fp2& y) { return x.a == y.a && x.b == y.b; }
inline bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

inline Fp2 add(const FieldCtx& f, const Fp2& x, const Fp2& y) {
  return {(x.a + y.a) % f.p, (x.b + y.b) % f.p};
}

inline Fp2 neg(const FieldCtx& f, const Fp2& x) {
  return {(f.p - x.a) % f.p, (f.p - x.b) % f.p};
}

inline Fp2 mul(const FieldCtx& f, const Fp2& x, const Fp2& y) {
  return {(x.a * y.a + x.b * y.b % f.p * f.d) % f.p, (x.a * y.b + x.b * y.a) % f.p};
}

inline bool is_zero(const FieldCtx&, const Fp2& x) { return x.a == 0 && x.b == 0; }

inline Fp2 inverse(const FieldCtx& f, const Fp2& x) {
  // (a + b delta)^{-1} = (a - b delta) / (a^2 - b^2 d)
  int norm = ((x.a * x.a - x.b * x.b % f.p * f.d) % f.p + f.p) % f.p;
  if (norm == 0) throw weylift_error("division by zero in F_{p^2}");
  int ninv = 0;
  for (int t = 1; t < f.p; ++t)
    if (norm * t % f.p == 1) {
      ninv = t;
      break;
    }
  return {x.a * ninv % f.p, (f.p - x.b) * ninv % f.p};
}

inline Fp2 pow(const FieldCtx& f, Fp2 x, long long e) {
  if (e < 0) {
    x = inverse(f, x);
    e = -e;
  }
  Fp2 r = fp2(f, 1);
  while (e) {
    if (e & 1) r = mul(f, r, x);
    x = mul(f, x, x);
    e >>= 1;
  }
  return r;
}

// Frobenius x -> x^p; delta^p = -delta since d is a non-residue.
inline Fp2 frobenius(const FieldCtx& f, const Fp2& x) {
  return {x.a, (f.p - x.b) % f.p};
}

inline Fp2 eps(const FieldCtx& f) { return fp2(f, -1); }

inline std::vector<Fp2> all_elements(const FieldCtx& f) {
  std::vector<Fp2> out;
  for (int a = 0; a < f.p; ++a)
    for (int b = 0; b < f.p; ++b) out.push_back({a, b});
  return out;
}

// Nonzero c with c^p = -c, i.e. a point of k^{phi'} (phi'(x) = -x^p).
inline Fp2 special_c(const FieldCtx& f) {
  for (const Fp2& c : all_elements(f))
    if (!is_zero(f, c) && pow(f, c, f.p) == neg(f, c)) return c;
  throw weylift_error("no special c found");
}

inline std::vector<Fp2> antifixed_elements(const FieldCtx& f) {
  std::vector<Fp2> out;
  for (const Fp2& c : all_elements(f))
    if (!is_zero(f, c) && pow(f, c, f.p) == neg(f, c)) out.push_back(c);
  return out;
}

}  // namespace weylift
