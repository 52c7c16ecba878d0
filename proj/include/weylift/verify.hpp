#pragma once

#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "rational_points.hpp"
#include "tables.hpp"

namespace weylift {

struct FailureWitness {
  std::vector<int> word;  // reduced word of the failing involution, 0-based
  std::string check;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string suite;
  std::string type;
  long long checked = 0;
  long long passed = 0;
  long long failed = 0;
  std::vector<FailureWitness> witnesses;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

inline std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

namespace detail {

inline void fan_out(size_t n, int threads, const std::function<void(size_t, size_t)>& work) {
  if (n == 0) return;
  size_t nt = threads > 0 ? size_t(threads) : std::max(1u, std::thread::hardware_concurrency());
  nt = std::min(nt, n);
  if (nt <= 1) {
    work(0, n);
    return;
  }
  std::vector<std::thread> pool;
  for (size_t t = 0; t < nt; ++t) {
    size_t b = n * t / nt, e = n * (t + 1) / nt;
    if (b < e) pool.emplace_back(work, b, e);
  }
  for (auto& th : pool) th.join();
}

// Deterministic merge of the per-involution witness lists.
inline void finish_report(const RootDatum& rd, VerificationReport& rep,
                          const std::vector<WeylElem>& pop,
                          std::vector<std::vector<FailureWitness>>& fails,
                          std::chrono::steady_clock::time_point t0) {
  rep.checked = (long long)pop.size();
  for (size_t i = 0; i < pop.size(); ++i) {
    if (fails[i].empty()) ++rep.passed;
    else {
      ++rep.failed;
      for (FailureWitness& f : fails[i]) {
        f.word = reduced_word(rd, pop[i]);
        rep.witnesses.push_back(std::move(f));
      }
    }
  }
  std::sort(rep.witnesses.begin(), rep.witnesses.end(),
            [](const FailureWitness& a, const FailureWitness& b) {
              return a.word != b.word ? a.word < b.word : a.check < b.check;
            });
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace detail

// Exhaustive involutions when the group fits the budget, seeded samples otherwise.
inline std::vector<WeylElem> involution_population(const RootDatum& rd, unsigned long long budget,
                                                  int samples, unsigned seed) {
  if (weyl_order(rd.spec.label) <= budget) return involutions(rd, budget);
  return sample_involutions(rd, samples, seed);
}

// r-map suite: conjugation equivariance, the {-1,0,1} commuting difference
// (nonzero in simply-laced types), ascent fixedness, w(r_w) = -r_w, and
// agreement between the recursion and the cascade construction.
inline VerificationReport suite_r(const RootDatum& rd, const std::vector<WeylElem>& pop,
                                  int threads = 0) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep{"r", rd.spec.label};
  std::vector<std::vector<FailureWitness>> fails(pop.size());
  bool laced = is_simply_laced(rd);
  detail::fan_out(pop.size(), threads, [&](size_t lo, size_t hi) {
    Memo memo;
    for (size_t i = lo; i < hi; ++i) {
      const WeylElem& w = pop[i];
      auto& out = fails[i];
      Vec rw = r_recursive(rd, w, memo);
      Vec rc = r_from_cascade(rd, w);
      if (rw != rc) out.push_back({{}, "recursion==cascade", vec_str(rc), vec_str(rw)});
      if (w.on_coroots.apply(rw) != -rw)
        out.push_back({{}, "w(r_w)=-r_w", vec_str(-rw), vec_str(w.on_coroots.apply(rw))});
      for (int s = 0; s < rd.rank; ++s) {
        WeylElem sr = simple_reflection(rd, s);
        if (mul(sr, w) != mul(w, sr)) {
          Vec lhs = sr.on_coroots.apply(rw);
          Vec rhs = r_recursive(rd, mul(sr, mul(w, sr)), memo);
          if (lhs != rhs)
            out.push_back({{}, "s(r_w)=r_{sws} s=" + std::to_string(s + 1), vec_str(rhs),
                           vec_str(lhs)});
        } else {
          Vec diff = r_recursive(rd, mul(sr, w), memo) - rw;
          Vec expect(rd.rank, 0);
          expect[s] = diff[s];
          bool range = diff[s] >= -1 && diff[s] <= 1 && (!laced || diff[s] != 0);
          if (diff != expect || !range)
            out.push_back({{}, "r_{sw}-r_w in {-1,0,1}a_s s=" + std::to_string(s + 1),
                           "multiple of coroot " + std::to_string(s + 1), vec_str(diff)});
          Vec as(rd.rank, 0);
          as[s] = 1;
          if (w.on_roots.apply(as) == as) {  // ascent: |sw| > |w|
            Vec fixed = sr.on_coroots.apply(rw);
            if (fixed != rw)
              out.push_back({{}, "ascent s(r_w)=r_w s=" + std::to_string(s + 1), vec_str(rw),
                             vec_str(fixed)});
          }
        }
      }
    }
  });
  detail::finish_report(rd, rep, pop, fails, t0);
  return rep;
}

// b-map suite: base values, both recursion clauses, the (N+1) reflection
// identity, independence of the descent scan order, and the halving flip
// b^{S-S'} = b^{S'} + r together with its normalizer form
// n_{w,c,S-S'} = n_{w,eps c,S'}.
inline VerificationReport suite_b(const RootDatum& rd, const std::vector<WeylElem>& pop,
                                  const std::vector<int>& Sp, unsigned seed = 1,
                                  int threads = 0) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep{"b", rd.spec.label};
  if (!is_halving(rd, Sp)) throw weylift_error("S' is not a halving");
  std::vector<int> Sc = complement_halving(rd, Sp);
  std::vector<std::vector<FailureWitness>> fails(pop.size());
  FieldCtx f3(3);
  Fp2 c0 = special_c(f3);
  detail::fan_out(pop.size(), threads, [&](size_t lo, size_t hi) {
    Memo bmemo, cmemo, rmemo;
    for (size_t i = lo; i < hi; ++i) {
      const WeylElem& w = pop[i];
      auto& out = fails[i];
      Vec bw = b_recursive(rd, w, Sp, bmemo);
      if (w.is_identity() && !is_zero(bw))
        out.push_back({{}, "b_1=0", vec_str(Vec(rd.rank, 0)), vec_str(bw)});
      for (int s = 0; s < rd.rank; ++s) {
        WeylElem sr = simple_reflection(rd, s);
        Vec as(rd.rank, 0);
        as[s] = 1;
        if (mul(sr, w) != mul(w, sr)) {
          Vec lhs = mod2(sr.on_coroots.apply(bw));
          Vec rhs = b_recursive(rd, mul(sr, mul(w, sr)), Sp, bmemo);
          rhs[s] ^= 1;
          if (lhs != rhs)
            out.push_back({{}, "s(b_w)=b_{sws}+a_s s=" + std::to_string(s + 1), vec_str(rhs),
                           vec_str(lhs)});
        } else {
          Vec diff = mod2(b_recursive(rd, mul(sr, w), Sp, bmemo) - bw);
          Vec expect(rd.rank, 0);
          expect[s] = diff[s];
          if (diff != expect)
            out.push_back({{}, "b_{sw}-b_w in {0,1}a_s s=" + std::to_string(s + 1),
                           "multiple of coroot " + std::to_string(s + 1), vec_str(diff)});
          try {
            int n = colon(rd, w, s, rmemo);
            Vec rhs = bw;
            rhs[s] = (rhs[s] + n + 1) % 2;
            Vec lhs = mod2(sr.on_coroots.apply(bw));
            if (lhs != rhs)
              out.push_back({{}, "s(b_w)=b_w+(N+1)a_s s=" + std::to_string(s + 1), vec_str(rhs),
                             vec_str(lhs)});
          } catch (const weylift_error& e) {
            out.push_back({{}, "s(b_w)=b_w+(N+1)a_s s=" + std::to_string(s + 1),
                           "well-defined N", e.what()});
          }
        }
      }
      // scan-order independence: 5 seeded shuffles, fresh memos
      std::mt19937_64 rng(seed + 1000003ULL * (unsigned long long)i);
      std::vector<int> order(rd.rank);
      for (int k = 0; k < rd.rank; ++k) order[k] = k;
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(order.begin(), order.end(), rng);
        Memo one;
        Vec alt = b_recursive(rd, w, Sp, one, &order);
        if (alt != bw) {
          out.push_back({{}, "descent-order independence", vec_str(bw), vec_str(alt)});
          break;
        }
      }
      // halving flip, mod-2 and normalizer forms
      Vec rw = r_recursive(rd, w, rmemo);
      Vec bflip = b_recursive(rd, w, Sc, cmemo);
      if (bflip != mod2(bw + rw))
        out.push_back({{}, "b^{S-S'}=b^{S'}+r", vec_str(mod2(bw + rw)), vec_str(bflip)});
      NormPoint na = build_lift(rd, f3, w, c0, Sc);
      NormPoint nb = build_lift(rd, f3, w, mul(f3, eps(f3), c0), Sp);
      if (!norm_eq(na, nb))
        out.push_back({{}, "n_{w,c,S-S'}=n_{w,eps c,S'}", "equal lifts", "unequal lifts"});
    }
  });
  detail::finish_report(rd, rep, pop, fails, t0);
  return rep;
}

// Tits-group suite: the squaring identity over the whole population, plus
// the parabolic square checks for every irreducible central parabolic.
inline VerificationReport suite_tits(const RootDatum& rd, const std::vector<WeylElem>& pop,
                                     const std::vector<int>& Sp, int threads = 0) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep{"tits", rd.spec.label};
  std::vector<std::vector<FailureWitness>> fails(pop.size());
  detail::fan_out(pop.size(), threads, [&](size_t lo, size_t hi) {
    Memo rmemo, bmemo;
    for (size_t i = lo; i < hi; ++i) {
      if (!verify_property_v(rd, pop[i], Sp, rmemo, bmemo))
        fails[i].push_back({{}, "(w-dot b_w(eps))^2 = r_w(eps)", "equal", "unequal"});
    }
  });
  detail::finish_report(rd, rep, pop, fails, t0);
  for (auto& [J, wJ] : central_parabolics(rd)) {
    if (J.empty() || !is_connected_subset(rd, J)) continue;
    ++rep.checked;
    if (verify_lemma21(rd, J)) ++rep.passed;
    else {
      ++rep.failed;
      rep.witnesses.push_back(
          {reduced_word(rd, wJ), "parabolic square identities", "equal", "unequal"});
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

// Frobenius suite: phi(n_{w,c,S'}) n_{w,-phi(c),S'} = 1 over F_{p^2} for
// seeded random special c.
inline VerificationReport suite_frobenius(const RootDatum& rd, const std::vector<WeylElem>& pop,
                                          int p, int num_c = 5, unsigned seed = 1,
                                          int threads = 0) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep{"frobenius", rd.spec.label};
  FieldCtx f(p);
  std::vector<Fp2> cs = antifixed_elements(f);
  std::vector<int> Sp = canonical_halving(rd);
  std::vector<std::vector<FailureWitness>> fails(pop.size());
  detail::fan_out(pop.size(), threads, [&](size_t lo, size_t hi) {
    Memo rmemo, bmemo;
    for (size_t i = lo; i < hi; ++i) {
      std::mt19937_64 rng(seed + 2000003ULL * (unsigned long long)i + 17ULL * unsigned(p));
      for (int k = 0; k < num_c; ++k) {
        Fp2 c = cs[rng() % cs.size()];
        if (!verify_theorem05(rd, f, pop[i], c, Sp, rmemo, bmemo)) {
          fails[i].push_back({{},
                              "phi(n) n_{w,-phi(c),S'} = 1 p=" + std::to_string(p),
                              "identity",
                              "c=" + std::to_string(c.a) + "+" + std::to_string(c.b) + "d"});
          break;
        }
      }
    }
  });
  detail::finish_report(rd, rep, pop, fails, t0);
  return rep;
}

inline std::vector<VerificationReport> suite_all(const RootDatum& rd,
                                                 const std::vector<WeylElem>& pop, int prime = 3,
                                                 int num_c = 2, unsigned seed = 1,
                                                 int threads = 0) {
  std::vector<int> Sp = canonical_halving(rd);
  std::vector<VerificationReport> reps;
  reps.push_back(suite_r(rd, pop, threads));
  reps.push_back(suite_b(rd, pop, Sp, seed, threads));
  reps.push_back(suite_tits(rd, pop, Sp, threads));
  reps.push_back(suite_frobenius(rd, pop, prime, num_c, seed, threads));
  return reps;
}

}  // namespace weylift
