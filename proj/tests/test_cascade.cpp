#include <catch2/catch_amalgamated.hpp>

#include "fixture.hpp"
#include "weylift/tables.hpp"

using namespace weylift;

namespace {
std::vector<Vec> sorted(std::vector<Vec> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_CASE("full-system cascades match goldens") {
  auto j = load_fixture("cascades.json");
  for (auto& [label, rows] : j.items()) {
    RootDatum rd = build_root_datum(label);
    Cascade cas = kostant_cascade_checked(rd, rd.positive_roots);
    CHECK(sorted(cas.coroot_set) == sorted(rows.get<std::vector<Vec>>()));
  }
}

TEST_CASE("cascade elements are pairwise orthogonal roots") {
  for (const std::string& label : {"B4", "C4", "D4", "F4", "E6", "E7"}) {
    RootDatum rd = build_root_datum(label);
    Cascade cas = kostant_cascade(rd, rd.positive_roots);
    for (size_t i = 0; i < cas.flat.size(); ++i) {
      CHECK(rd.is_root(cas.flat[i]));
      for (size_t k = i + 1; k < cas.flat.size(); ++k)
        CHECK(rd.pairing(rd.coroot_of(cas.flat[i]), cas.flat[k]) == 0);
    }
  }
}

TEST_CASE("closed-form cascade tables agree with computation") {
  for (const std::string& label :
       {"B3", "B4", "B5", "B6", "C3", "C4", "C5", "D4", "D6", "E7", "E8", "F4", "G2"}) {
    RootDatum rd = build_root_datum(label);
    Cascade cas = kostant_cascade_checked(rd, rd.positive_roots);
    CHECK(sorted(cas.coroot_set) == sorted(tables::expected_cascade(label)));
  }
}

TEST_CASE("cascade reflections compose to -1 on the subsystem") {
  RootDatum rd = build_root_datum("D5");
  for (const WeylElem& w : involutions(rd)) {
    WeylElem p = cascade_reflection_product(rd, w);
    for (const Vec& r : eigen_positive_roots(rd, w)) CHECK(p.on_roots.apply(r) == -r);
  }
}

TEST_CASE("type D signed-permutation model") {
  RootDatum rd = build_root_datum("D4");
  std::vector<int> all{0, 1, 2, 3};
  WeylElem w0 = longest_element(rd, all);
  CHECK(typeD_signed_perm(rd, w0) == std::vector<int>{-1, -2, -3, -4});
  for (int l : {4, 5}) {
    RootDatum d = build_root_datum("D" + std::to_string(l));
    for (const WeylElem& w : involutions(d)) {
      Cascade cas = cascade_of(d, w);
      CHECK(sorted(cas.flat) == sorted(typeD_cascade_oracle(d, w)));
    }
  }
  // e-coordinate round trip
  for (int l : {4, 5, 6}) {
    for (int i = 0; i < l; ++i) {
      Vec c(l, 0);
      c[i] = 1;
      CHECK(typeD_from_e(l, typeD_to_e(l, c)) == c);
    }
  }
}

TEST_CASE("r from cascade matches longest-element tables") {
  auto j = load_fixture("r_tables.json");
  for (auto& [label, r] : j.items()) {
    RootDatum rd = build_root_datum(label);
    std::vector<int> all;
    for (int i = 0; i < rd.rank; ++i) all.push_back(i);
    CHECK(r_from_cascade(rd, longest_element(rd, all)) == r.get<Vec>());
  }
}
