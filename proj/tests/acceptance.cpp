// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Populations follow the per-criterion budgets; all sampled runs are
// seeded and deterministic.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>

#include "fixture.hpp"
#include "weylift/verify.hpp"

using namespace weylift;

namespace {

std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

WeylElem w0_of(const RootDatum& rd) {
  std::vector<int> all;
  for (int i = 0; i < rd.rank; ++i) all.push_back(i);
  return longest_element(rd, all);
}

struct Gate {
  bool all_ok = true;

  bool report(int k, const std::string& what, bool ok, double secs) {
    printf("criterion %2d: %s  %s (%.1fs)\n", k, ok ? "PASS" : "FAIL", what.c_str(), secs);
    fflush(stdout);
    all_ok = all_ok && ok;
    return ok;
  }
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// exhaustive populations for criteria 4-7
const std::vector<std::string> kExhaustive = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                              "C2", "C3", "C4", "D4", "D5", "F4", "G2", "E6"};

}  // namespace

int main() {
  Gate gate;

  // 1: cascade tables
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::string> labels{"E7", "E8", "F4", "G2", "D4", "D6", "D8"};
    for (int l = 2; l <= 9; ++l) labels.push_back("B" + std::to_string(l));
    for (int l = 2; l <= 8; ++l) labels.push_back("C" + std::to_string(l));
    for (const std::string& label : labels) {
      RootDatum rd = build_root_datum(label);
      Cascade cas = kostant_cascade_checked(rd, rd.positive_roots);
      if (sorted(cas.coroot_set) != sorted(tables::expected_cascade(label))) {
        ok = false;
        fprintf(stderr, "  cascade mismatch for %s\n", label.c_str());
      }
    }
    gate.report(1, "cascade tables B2-B9, C2-C8, D4/D6/D8, E7, E8, F4, G2", ok, secs_since(t0));
  }

  // 2: r tables and the internal coefficient-sum identity
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::string> central{"A1", "G2", "F4", "E7", "E8", "D4", "D6", "D8"};
    for (int l = 2; l <= 6; ++l) central.push_back("B" + std::to_string(l));
    for (int l = 2; l <= 6; ++l) central.push_back("C" + std::to_string(l));
    std::vector<std::string> longest{"A4", "A5", "D5", "E6"};
    for (const std::string& label : central) {
      RootDatum rd = build_root_datum(label);
      if (r_recursive(rd, w0_of(rd)) != tables::expected_r(label)) {
        ok = false;
        fprintf(stderr, "  r mismatch for %s\n", label.c_str());
      }
    }
    for (const std::string& label : longest) {
      RootDatum rd = build_root_datum(label);
      if (r_recursive(rd, w0_of(rd)) != tables::expected_r(label)) {
        ok = false;
        fprintf(stderr, "  longest-element r mismatch for %s\n", label.c_str());
      }
    }
    std::vector<std::string> sum_types{"D4", "D5", "D6", "E6", "F4", "G2"};
    for (int l = 1; l <= 6; ++l) sum_types.push_back("A" + std::to_string(l));
    for (int l = 2; l <= 6; ++l) sum_types.push_back("B" + std::to_string(l));
    for (int l = 2; l <= 6; ++l) sum_types.push_back("C" + std::to_string(l));
    for (const std::string& label : sum_types) {
      RootDatum rd = build_root_datum(label);
      Memo memo;
      for (const WeylElem& w : involutions(rd)) {
        EigenSubsystem es = eigen_subsystem(rd, w);
        if (es.simple_system.empty()) continue;
        std::vector<Vec> basis;
        for (int k : es.simple_system) basis.push_back(rd.coroot_of(rd.positive_roots[k]));
        Vec x = coeffs_in_basis(basis, r_recursive(rd, w, memo));
        if (2 * height(x) != int(es.positives.size() + es.simple_system.size())) {
          ok = false;
          fprintf(stderr, "  coefficient-sum failure in %s\n", label.c_str());
        }
      }
    }
    gate.report(2, "r tables and internal coefficient-sum identity (rank <= 6)", ok,
                secs_since(t0));
  }

  // 3: E8/E7 sign tables
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto fx = load_fixture("signs.json");
    for (const std::string& label : {"E8", "E7"}) {
      RootDatum rd = build_root_datum(label);
      WeylElem w0 = w0_of(rd);
      Memo memo;
      Vec expect = fx[label]["signs"].get<Vec>();
      for (int s = 0; s < rd.rank; ++s)
        if (colon(rd, w0, s, memo) != expect[s]) {
          ok = false;
          fprintf(stderr, "  sign mismatch %s s%d\n", label.c_str(), s + 1);
        }
      // the simple system next to s1, row checked element-for-element
      EigenSubsystem es = eigen_subsystem(rd, mul(simple_reflection(rd, 0), w0));
      std::vector<Vec> pis;
      for (int k : es.simple_system) pis.push_back(rd.coroot_of(rd.positive_roots[k]));
      if (sorted(pis) != sorted(fx[label]["pi_s1"].get<std::vector<Vec>>())) {
        ok = false;
        fprintf(stderr, "  pi_s1 mismatch for %s\n", label.c_str());
      }
    }
    gate.report(3, "sign tables for the E8 and E7 longest elements", ok, secs_since(t0));
  }

  // 4-7 share populations
  std::map<std::string, std::vector<WeylElem>> pops;
  for (const std::string& label : kExhaustive)
    pops[label] = involutions(build_root_datum(label));
  {
    pops["E7"] = sample_involutions(build_root_datum("E7"), 1000, 20260823);
    pops["E8"] = sample_involutions(build_root_datum("E8"), 1000, 20260823);
  }

  // 4 + 5: r-map properties and recursion==cascade
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok4 = true, ok5 = true;
    for (auto& [label, pop] : pops) {
      VerificationReport rep = suite_r(build_root_datum(label), pop);
      for (const FailureWitness& w : rep.witnesses) {
        bool cascade = w.check == "recursion==cascade";
        (cascade ? ok5 : ok4) = false;
        fprintf(stderr, "  [%s] %s\n", label.c_str(), w.check.c_str());
      }
    }
    double el = secs_since(t0);
    gate.report(4, "conjugation/difference/ascent/negation properties of r", ok4, el);
    gate.report(5, "r recursion agrees with the cascade construction", ok5, el);
  }

  // 6: b-map properties, order independence, halving flip
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (auto& [label, pop] : pops) {
      RootDatum rd = build_root_datum(label);
      VerificationReport rep = suite_b(rd, pop, canonical_halving(rd), 11);
      if (!rep.ok()) {
        ok = false;
        fprintf(stderr, "  [%s] %lld b failures\n", label.c_str(), rep.failed);
      }
    }
    gate.report(6, "b-map recursion, order independence, and halving flip", ok, secs_since(t0));
  }

  // 7: section words, parabolic squares, squaring identity
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    auto fx = load_fixture("tits_words.json");
    {
      RootDatum rd = build_root_datum("A2");
      WeylElem w121 = from_word(rd, {0, 1, 0});
      Vec sq = tits_square(rd, tits_dot(rd, w121));
      Vec r = r_recursive(rd, w121);
      ok = ok && sq == fx["A2"]["square_torus"].get<Vec>() &&
           r == fx["A2"]["r_121"].get<Vec>() && mod2(r) != sq;
    }
    for (const std::string& label : {"E7", "E8"}) {
      RootDatum rd = build_root_datum(label);
      const Vec& theta = rd.positive_roots.back();
      auto [mr, mc] = rd.reflection(theta, rd.coroot_of(theta));
      Vec sq = tits_square(rd, tits_dot(rd, WeylElem{mr, mc}));
      ok = ok && sq == fx[label]["highest_root_square"].get<Vec>();
    }
    for (auto& [label, pop] : pops) {
      RootDatum rd = build_root_datum(label);
      VerificationReport rep = suite_tits(rd, pop, canonical_halving(rd));
      if (!rep.ok()) {
        ok = false;
        fprintf(stderr, "  [%s] %lld tits failures\n", label.c_str(), rep.failed);
      }
    }
    gate.report(7, "section-word squares, parabolic squares, lift squaring identity", ok,
                secs_since(t0));
  }

  // 8: Frobenius-twisted identity over F_{p^2}
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::string> small{"A1", "A2", "A3", "A4", "B2", "B3", "B4",
                                   "C2", "C3", "C4", "D4", "F4", "G2"};
    std::map<std::string, std::vector<WeylElem>> fpops;
    for (const std::string& label : small)
      fpops[label] = involutions(build_root_datum(label));
    for (const std::string& label : {"E6", "E7", "E8"})
      fpops[label] = sample_involutions(build_root_datum(label), 200, 8088);
    for (int p : {3, 5, 7})
      for (auto& [label, pop] : fpops) {
        VerificationReport rep = suite_frobenius(build_root_datum(label), pop, p, 5, 31 + p);
        if (!rep.ok()) {
          ok = false;
          fprintf(stderr, "  [%s] p=%d %lld failures\n", label.c_str(), p, rep.failed);
        }
      }
    gate.report(8, "Frobenius-twisted lift identity, p in {3,5,7}", ok, secs_since(t0));
  }

  // 9: type D closed form for b
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int l : {4, 5, 6}) {
      RootDatum rd = build_root_datum("D" + std::to_string(l));
      auto invs = involutions(rd);
      for (auto& Sp : {canonical_halving(rd), complement_halving(rd, canonical_halving(rd))}) {
        Memo memo;
        for (const WeylElem& w : invs)
          if (b_typeD_oracle(rd, w, Sp) != b_recursive(rd, w, Sp, memo)) {
            ok = false;
            fprintf(stderr, "  b_typeD_oracle mismatch in D%d\n", l);
          }
      }
    }
    gate.report(9, "type D block closed form for b (D4-D6, both halvings)", ok, secs_since(t0));
  }

  // 10: micro-scale brute-force equivalences
  {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const std::string& label : {"A1", "A2", "A3", "B2"}) {
      RootDatum rd = build_root_datum(label);
      if (involutions(rd).size() != involutions_brute(rd).size()) {
        ok = false;
        fprintf(stderr, "  involution count mismatch for %s\n", label.c_str());
      }
    }
    std::vector<std::string> small{"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2"};
    for (const std::string& label : small) {
      RootDatum rd = build_root_datum(label);
      std::mt19937_64 rng(99);
      auto rand_elem = [&] {
        std::vector<int> word;
        int len = int(rng() % (2 * rd.positive_roots.size() + 1));
        for (int i = 0; i < len; ++i) word.push_back(int(rng() % rd.rank));
        TitsElem t = tits_from_word(rd, word);
        for (int i = 0; i < rd.rank; ++i) t.t[i] ^= int(rng() % 2);
        return t;
      };
      for (int k = 0; k < 10000; ++k) {
        TitsElem a = rand_elem(), b = rand_elem(), c = rand_elem();
        if (tits_mul(rd, tits_mul(rd, a, b), c) != tits_mul(rd, a, tits_mul(rd, b, c))) {
          ok = false;
          fprintf(stderr, "  associativity failure in %s\n", label.c_str());
          break;
        }
      }
      // normalizer product vs the mod-2 model on +-1 torus parts, exhaustively
      FieldCtx f(3);
      auto to_norm = [&](const TitsElem& t) {
        NormPoint n{t.w, torus_identity(f, rd.rank)};
        for (int i = 0; i < rd.rank; ++i)
          if (t.t[i]) n.t[i] = eps(f);
        return n;
      };
      auto group = enumerate_group(rd);
      std::vector<TitsElem> elems;
      for (const WeylElem& w : group)
        for (unsigned mask = 0; mask < (1u << rd.rank); ++mask) {
          TitsElem t{w, Vec(rd.rank, 0)};
          for (int i = 0; i < rd.rank; ++i) t.t[i] = int((mask >> i) & 1);
          elems.push_back(t);
        }
      for (const TitsElem& a : elems)
        for (const TitsElem& b : elems) {
          if (!norm_eq(normalizer_mul(rd, f, to_norm(a), to_norm(b)),
                       to_norm(tits_mul(rd, a, b)))) {
            ok = false;
            fprintf(stderr, "  normalizer/cocycle mismatch in %s\n", label.c_str());
            goto done_pairs;
          }
        }
    done_pairs:;
    }
    gate.report(10, "brute-force equivalences: counts, associativity, normalizer product", ok,
                secs_since(t0));
  }

  printf("%s\n", gate.all_ok ? "acceptance: ALL PASS" : "acceptance: FAILURES");
  return gate.all_ok ? 0 : 1;
}
