// weylift: tables, single-element queries, and verification suites for
// distinguished involution lifts in the torus normalizer.

#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylift/verify.hpp"

using nlohmann::json;
using namespace weylift;

namespace {

std::vector<int> parse_word(const RootDatum& rd, const std::string& word) {
  std::vector<int> out;
  for (char ch : word) {
    if (ch == ' ' || ch == ',') continue;
    if (!std::isdigit((unsigned char)ch)) throw weylift_error("word must be 1-based digits");
    int s = ch - '0';
    if (s < 1 || s > rd.rank) throw weylift_error("letter out of range in word");
    out.push_back(s - 1);
  }
  return out;
}

std::string word_str(const std::vector<int>& word) {
  std::string s;
  for (int x : word) s += std::to_string(x + 1);
  return s;
}

json vec_json(const Vec& v) { return json(v); }

json report_json(const VerificationReport& r) {
  json j{{"suite", r.suite}, {"type", r.type},    {"checked", r.checked},
         {"passed", r.passed}, {"failed", r.failed}, {"seconds", r.seconds}};
  j["witnesses"] = json::array();
  for (const FailureWitness& w : r.witnesses)
    j["witnesses"].push_back({{"word", word_str(w.word)},
                              {"check", w.check},
                              {"expected", w.expected},
                              {"actual", w.actual}});
  return j;
}

void print_report(const VerificationReport& r, bool as_json) {
  if (as_json) {
    printf("%s\n", report_json(r).dump().c_str());
    return;
  }
  printf("%-10s %-4s checked %6lld  passed %6lld  failed %6lld  (%.2fs)\n", r.suite.c_str(),
         r.type.c_str(), r.checked, r.passed, r.failed, r.seconds);
  for (const FailureWitness& w : r.witnesses)
    printf("  FAIL w=%s %s: expected %s, got %s\n", word_str(w.word).c_str(), w.check.c_str(),
           w.expected.c_str(), w.actual.c_str());
}

int cmd_tables(const std::string& section, const std::string& type) {
  RootDatum rd = build_root_datum(type);
  json out{{"section", section}, {"type", type}};
  std::vector<int> all;
  for (int i = 0; i < rd.rank; ++i) all.push_back(i);
  if (section == "1.1") {
    Cascade cas = kostant_cascade_checked(rd, rd.positive_roots);
    json rows = json::array();
    for (const Vec& c : cas.coroot_set) rows.push_back(vec_json(c));
    out["cascade_coroots"] = rows;
  } else if (section == "1.2" || section == "1.8") {
    WeylElem w0 = longest_element(rd, all);
    bool central = true;
    for (int s = 0; s < rd.rank; ++s)
      if (!negates_simple(rd, w0, s)) central = false;
    if (section == "1.2" && !central)
      throw weylift_error("longest element is not central for " + type);
    if (section == "1.8" && central)
      throw weylift_error("use section 1.2 for " + type);
    out["r"] = vec_json(r_recursive(rd, w0));
  } else if (section == "1.11" || section == "1.12") {
    if ((section == "1.11") != (type == "E8") || (section == "1.12") != (type == "E7"))
      throw weylift_error("section " + section + " is only defined for " +
                          (section == "1.11" ? std::string("E8") : std::string("E7")));
    WeylElem w0 = longest_element(rd, all);
    Memo memo;
    json rows = json::array();
    for (int s = 0; s < rd.rank; ++s) {
      WeylElem u = mul(simple_reflection(rd, s), w0);
      EigenSubsystem es = eigen_subsystem(rd, u);
      json pis = json::array();
      for (int k : es.simple_system) pis.push_back(vec_json(rd.coroot_of(rd.positive_roots[k])));
      rows.push_back({{"s", s + 1}, {"pi", pis}, {"sign", colon(rd, w0, s, memo)}});
    }
    out["rows"] = rows;
  } else {
    throw weylift_error("unknown section " + section);
  }
  printf("%s\n", out.dump(2).c_str());
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& type, int prime, int samples,
               unsigned seed, unsigned long long budget, int threads, bool as_json) {
  RootDatum rd = build_root_datum(type);
  std::vector<WeylElem> pop = involution_population(rd, budget, samples, seed);
  std::vector<int> Sp = canonical_halving(rd);
  std::vector<VerificationReport> reps;
  if (suite == "r") reps.push_back(suite_r(rd, pop, threads));
  else if (suite == "b") reps.push_back(suite_b(rd, pop, Sp, seed, threads));
  else if (suite == "tits") reps.push_back(suite_tits(rd, pop, Sp, threads));
  else if (suite == "frobenius") reps.push_back(suite_frobenius(rd, pop, prime, 5, seed, threads));
  else if (suite == "all") reps = suite_all(rd, pop, prime, 5, seed, threads);
  else throw weylift_error("unknown suite " + suite);
  bool failed = false;
  for (const VerificationReport& r : reps) {
    print_report(r, as_json);
    failed = failed || !r.ok();
  }
  return failed ? 1 : 0;
}

int cmd_element(const std::string& type, const std::string& word, const std::string& what,
                const std::string& halving, bool as_json) {
  RootDatum rd = build_root_datum(type);
  std::vector<int> letters = parse_word(rd, word);
  WeylElem w = from_word(rd, letters);
  if (!is_involution(w)) {
    std::vector<int> sq = reduced_word(rd, mul(w, w));
    fprintf(stderr, "error: word %s is not an involution; w^2 = %s\n", word.c_str(),
            word_str(sq).c_str());
    return 2;
  }
  std::vector<int> Sp = halving.empty() ? canonical_halving(rd) : parse_word(rd, halving);
  if (!is_halving(rd, Sp)) throw weylift_error("given set is not a halving");
  json out{{"type", type}, {"word", word_str(reduced_word(rd, w))}};
  Memo rm, bm;
  if (what == "rw") out["r"] = vec_json(r_recursive(rd, w, rm));
  else if (what == "bw") out["b"] = vec_json(b_recursive(rd, w, Sp, bm));
  else if (what == "lift") {
    json hv = json::array();
    for (int s : Sp) hv.push_back(s + 1);
    out["halving"] = hv;
    out["r"] = vec_json(r_recursive(rd, w, rm));
    out["b"] = vec_json(b_recursive(rd, w, Sp, bm));
  } else {
    throw weylift_error("unknown query " + what);
  }
  if (as_json) printf("%s\n", out.dump().c_str());
  else printf("%s\n", out.dump(2).c_str());
  return 0;
}

int cmd_involutions(const std::string& type, int samples, unsigned seed,
                    unsigned long long budget) {
  RootDatum rd = build_root_datum(type);
  bool exhaustive = weyl_order(type) <= budget;
  auto pop = exhaustive ? involutions(rd, budget) : sample_involutions(rd, samples, seed);
  for (const WeylElem& w : pop)
    printf("%s %zx\n", word_str(reduced_word(rd, w)).c_str(), std::hash<std::string>{}(w.key()));
  fprintf(stderr, "%zu involutions (%s)\n", pop.size(), exhaustive ? "exhaustive" : "sampled");
  return 0;
}

int cmd_colon(const std::string& type, const std::string& word, int s, bool as_json) {
  RootDatum rd = build_root_datum(type);
  WeylElem w = from_word(rd, parse_word(rd, word));
  if (!is_involution(w)) throw weylift_error("word is not an involution");
  if (s < 1 || s > rd.rank) throw weylift_error("s out of range");
  int n = colon(rd, w, s - 1);
  if (as_json)
    printf("%s\n",
           json{{"type", type}, {"word", word_str(reduced_word(rd, w))}, {"s", s}, {"n", n}}
               .dump()
               .c_str());
  else printf("%d\n", n);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distinguished involution lifts in the torus normalizer"};
  app.require_subcommand(1);

  std::string type, section = "1.2", suite = "all", word, what = "rw", halving;
  int prime = 3, samples = 1000, s_index = 1, threads = 0;
  unsigned seed = 1;
  unsigned long long budget = 100000;
  bool as_json = false;

  auto* tables = app.add_subcommand("tables", "emit a computed table as JSON");
  tables->add_option("--section", section, "table id: 1.1, 1.2, 1.8, 1.11, 1.12")->required();
  tables->add_option("--type", type, "Cartan label, e.g. B3")->required();
  tables->add_flag("--json", as_json, "machine output (tables always emit JSON)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "r, b, tits, frobenius, or all");
  verify->add_option("--type", type, "Cartan label")->required();
  verify->add_option("--prime", prime, "odd prime for the frobenius suite");
  verify->add_option("--samples", samples, "sample count beyond the exhaustive budget");
  verify->add_option("--seed", seed, "sampling seed");
  verify->add_option("--budget", budget, "largest group order enumerated exhaustively");
  verify->add_option("--threads", threads, "worker threads (0 = hardware)");
  verify->add_flag("--json", as_json, "one JSON report per suite");

  auto* element = app.add_subcommand("element", "query a single involution");
  element->add_option("--type", type, "Cartan label")->required();
  element->add_option("--word", word, "1-based reduced word, e.g. 121")->required();
  element->add_option("--what", what, "rw, bw, or lift");
  element->add_option("--halving", halving, "1-based halving indices, e.g. 13");
  element->add_flag("--json", as_json, "compact JSON");

  auto* invs = app.add_subcommand("involutions", "stream involutions as word + matrix hash");
  invs->add_option("--type", type, "Cartan label")->required();
  invs->add_option("--samples", samples, "sample count beyond the exhaustive budget");
  invs->add_option("--seed", seed, "sampling seed");
  invs->add_option("--budget", budget, "largest group order enumerated exhaustively");

  auto* colon_cmd = app.add_subcommand("colon", "the sign N in r_{sw} = r_w + N coroot_s");
  colon_cmd->add_option("--type", type, "Cartan label")->required();
  colon_cmd->add_option("--word", word, "1-based reduced word of w")->required();
  colon_cmd->add_option("--s", s_index, "1-based commuting simple reflection")->required();
  colon_cmd->add_flag("--json", as_json, "compact JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (tables->parsed()) return cmd_tables(section, type);
    if (verify->parsed())
      return cmd_verify(suite, type, prime, samples, seed, budget, threads, as_json);
    if (element->parsed()) return cmd_element(type, word, what, halving, as_json);
    if (invs->parsed()) return cmd_involutions(type, samples, seed, budget);
    if (colon_cmd->parsed()) return cmd_colon(type, word, s_index, as_json);
  } catch (const weylift_error& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
