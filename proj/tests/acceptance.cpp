// Acceptance gate: one line per criterion, nonzero exit when any criterion
// fails. Criterion numbers can be passed as arguments to run a subset.
// BURNGAME_LONG=1 additionally runs the flagged long parts (the order-8
// both-connected corpus).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "burn/checks.hpp"
#include "burn/classical.hpp"
#include "burn/closed_forms.hpp"
#include "burn/corpus.hpp"
#include "burn/engine.hpp"
#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/graph6.hpp"
#include "burn/suite.hpp"

using namespace burn;

namespace {

Graph fam(FamilyKind k, int s) { return family({k, s}); }

bool long_mode() {
  const char* env = std::getenv("BURNGAME_LONG");
  return env != nullptr && std::strcmp(env, "1") == 0;
}

struct Outcome {
  bool ok = true;
  std::string summary;
  std::vector<std::string> details;
  double budget_seconds = 0;  // 0 = no stated budget

  void fail(const std::string& what) {
    ok = false;
    details.push_back(what);
  }
  void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

int suite_failures(const std::vector<std::string>& selection, int lo, int hi, bool connected,
                   bool both, Report* out = nullptr) {
  SuiteOptions opt;
  opt.selection = selection;
  opt.n_lo = lo;
  opt.n_hi = hi;
  opt.connected_only = connected;
  opt.both_connected = both;
  Report rep = run_suite(opt);
  int fails = rep.summary.fail;
  if (out) *out = std::move(rep);
  return fails;
}

void criterion1(Outcome& o) {
  o.budget_seconds = 1.0;
  for (int n = 2; n <= 8; ++n) {
    Graph kn = fam(FamilyKind::Complete, n);
    o.expect(game_value(kn, {}, Player::Burner) == 2, "complete graph burner-start value");
    o.expect(game_value(kn, {}, Player::Staller) == 2, "complete graph staller-start value");
  }
  for (int n = 3; n <= 8; ++n) {
    Graph st = fam(FamilyKind::Star, n);
    o.expect(game_value(st, {}, Player::Burner) == 2, "star burner-start value");
    o.expect(game_value(st, {}, Player::Staller) == 3, "star staller-start value");
  }
  o.summary = "complete graphs (2..8) and stars (3..8) reproduce their stated values";
}

void criterion2(Outcome& o) {
  o.budget_seconds = 300.0;
  for (int d = 1; d <= 4; ++d) {
    Graph q = fam(FamilyKind::Hypercube, d);
    int want_bg = closed_forms("hypercube-bg", d).lower;
    int want_bgp = closed_forms("hypercube-bg'", d).lower;
    o.expect(game_value(q, {}, Player::Burner) == want_bg, "hypercube burner-start value");
    o.expect(game_value(q, {}, Player::Staller) == want_bgp, "hypercube staller-start value");
  }
  o.expect(game_value(fam(FamilyKind::Hypercube, 4), {}, Player::Burner) == 4, "Q_4 value 4");
  o.expect(game_value(fam(FamilyKind::Hypercube, 4), {}, Player::Staller) == 3, "Q_4 value 3");
  o.summary = "hypercubes d = 1..4 match the closed forms exactly (Q_4: 4 and 3)";
}

void criterion3(Outcome& o) {
  o.budget_seconds = 1800.0;
  for (const CheckResult& r : family_sweep("path", 1, 22))
    o.expect(r.status == CheckStatus::Pass, "path window at " + params_to_string(r.params));
  for (const CheckResult& r : family_sweep("cycle", 3, 22))
    o.expect(r.status == CheckStatus::Pass, "cycle window at " + params_to_string(r.params));
  o.expect(game_value(fam(FamilyKind::Path, 6), {}, Player::Burner) == 3,
           "coinciding bounds at P_6");
  o.summary = "paths and cycles n <= 22 sit inside their windows, equality where bounds meet";
}

void criterion4(Outcome& o) {
  o.budget_seconds = 3600.0;
  int f43 = suite_failures({"prop-4.3"}, 4, 7, false, false);
  o.expect(f43 == 0, "product bound violations over all classes n = 4..7");
  int f47 = suite_failures({"prop-4.7"}, 6, 7, false, true);
  o.expect(f47 == 0, "staller product bound violations, both-connected n = 6..7");
  if (long_mode()) {
    int f48 = suite_failures({"prop-4.7"}, 8, 8, false, true);
    o.expect(f48 == 0, "staller product bound violations, both-connected n = 8");
    o.summary = "both computer checks reproduce with 0 violations (n = 8 included)";
  } else {
    o.summary =
        "both computer checks reproduce with 0 violations "
        "(n = 8 is long-running; rerun with BURNGAME_LONG=1)";
  }
}

void criterion5(Outcome& o) {
  std::vector<std::string> props{"prop-2.1", "prop-2.2",  "prop-2.3", "prop-2.6", "prop-2.9",
                                 "prop-2.10", "prop-2.11", "prop-4.1", "prop-4.4", "prop-4.5",
                                 "prop-4.6", "cor-4.x",   "cor-4.y"};
  o.expect(suite_failures(props, 1, 7, true, false) == 0,
           "proposition suite violations on connected classes n <= 7");
  // the disconnected-graph lemma needs unfiltered corpora to ever apply
  Report rep42;
  o.expect(suite_failures({"lemma-4.2"}, 1, 7, false, false, &rep42) == 0,
           "component-bound violations");
  o.expect(rep42.summary.pass > 0, "component bound never applicable");

  o.expect(suite_failures({"thm-2.7"}, 1, 6, true, false) == 0,
           "edge-removal window violations on connected classes n <= 6");
  std::set<int> gaps;
  for (int n = 2; n <= 6; ++n) {
    CorpusSpec spec;
    spec.n = n;
    spec.connected_only = true;
    spec.dedup = true;
    enumerate_corpus(spec, [&](const Graph& g) {
      for (auto [e, gap] : edge_removal_gaps(g, Player::Burner)) gaps.insert(gap);
    });
  }
  o.expect(gaps.count(0) == 1, "no edge removal with gap 0 found");
  o.expect(gaps.count(1) == 1, "no edge removal with gap 1 found");
  o.summary = "proposition suite clean on connected classes n <= 7; edge-removal gaps 0 and 1 "
              "both witnessed";
}

void criterion6(Outcome& o) {
  Report rep;
  o.expect(suite_failures({"thm-2.4", "lemma-2.12"}, 1, 6, false, false, &rep) == 0,
           "monotonicity violations");
  bool exhaustive = false, seeded = false;
  for (const CheckResult& r : rep.results) {
    std::string p = params_to_string(r.params);
    if (p.find("mode=exhaustive") != std::string::npos) exhaustive = true;
    if (p.find("mode=seeded") != std::string::npos) seeded = true;
  }
  o.expect(exhaustive, "exhaustive sampling mode missing");
  o.expect(seeded, "seeded sampling mode missing");
  o.summary = "continuation and spanning-subgraph monotonicity hold (exhaustive n <= 4, "
              "seeded n = 5..6)";
}

void criterion7(Outcome& o) {
  for (const CheckResult& r : check_example_5_2())
    o.expect(r.status == CheckStatus::Pass,
             "11-vertex example part " + params_to_string(r.params));

  bool script_five = false, caveat = false;
  for (const CheckResult& r : check_example_2_8(false)) {
    if (params_to_string(r.params).find("part=script") != std::string::npos)
      script_five = r.status == CheckStatus::Pass && r.lhs == 5;
    if (r.status == CheckStatus::Skip &&
        r.note.find("beyond full desk-scale verification") != std::string::npos)
      caveat = true;
  }
  o.expect(script_five, "scripted strategy on the 52-vertex gadget is not exactly 5");
  o.expect(caveat, "report does not state the verification caveat for the values 5 and 7");

  // the horizon-6 refutation happens to be desk-fast here; exercise the gated path too
  for (const CheckResult& r : check_example_2_8(true))
    o.expect(r.status == CheckStatus::Pass,
             "gated example part " + params_to_string(r.params));
  o.summary = "both examples reproduce; the report flags that the exact values 5 and 7 need "
              "the long-running search";
}

void criterion8(Outcome& o) {
  o.budget_seconds = 3600.0;
  auto rows = product_sweep();
  int fails = 0;
  bool all_lower_no_universal = true, witnesses_replay = true;
  for (const CheckResult& r : rows) {
    if (r.status != CheckStatus::Fail) continue;
    ++fails;
    std::string p = params_to_string(r.params);
    if (r.check_id != "prop-6.4" || p.find("branch=no-universal") == std::string::npos ||
        p.find("-lower") == std::string::npos)
      all_lower_no_universal = false;
    if (!r.witness || !replay_witness(*r.witness)) witnesses_replay = false;
  }
  if (fails == 0) {
    o.summary = "product sweep clean";
    return;
  }
  o.ok = false;
  o.summary = "product sweep finds " + std::to_string(fails) +
              " violations of the stated lexicographic lower bound";
  o.details = {
      "every violation is the no-universal-vertex lower bound on a lexicographic product;",
      "props 6.1 and 6.3 and all upper bounds hold on the whole sweep.",
      "smallest case: the join of two copies of P_4 (K_2 with inner factor P_4, 8 vertices)",
      "has Burner-start value 2, but twice the burning number of the outer factor's square",
      "is 4. Opening on a P_4-interior vertex burns its whole closed neighborhood, i.e. all",
      "of the other copy, by the round-2 spread; only one endpoint survives, and any reply",
      "finishes the graph. The accounting argument behind the bound assumes fire reaches",
      "the other copy only through selections, but one burned vertex ignites every adjacent",
      "copy wholesale during the spread phase.",
      std::string("witnesses attached to all failing rows replay: ") +
          (witnesses_replay ? "yes" : "NO"),
      std::string("failures confined to that bound: ") +
          (all_lower_no_universal ? "yes" : "NO"),
  };
}

void criterion9(Outcome& o) {
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_trees(n))
      for (const CheckResult& r : run_checks_on_graph(t, {"lemma-5.5-inner"}))
        o.expect(r.status == CheckStatus::Pass, "tree square inequality on " + emit_graph6(t));
  o.summary = "the tree-square inequality holds for every tree n <= 9";
}

void criterion10(Outcome& o) {
  for (int n = 1; n <= 6; ++n) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) edges.emplace_back(u, v);
      Graph g(n, edges);
      if (!(parse_graph6(emit_graph6(g)) == g)) {
        o.fail("graph6 round trip at order " + std::to_string(n));
        return;
      }
    }
  }

  std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CorpusSpec spec;
    spec.n = n;
    spec.dedup = true;
    o.expect(corpus_vector(spec).size() == all[n - 1], "class count at order " +
                                                           std::to_string(n));
    spec.connected_only = true;
    o.expect(corpus_vector(spec).size() == connected[n - 1],
             "connected class count at order " + std::to_string(n));
  }

  SuiteOptions a;
  a.selection = {"prop-2.6", "prop-2.1"};
  a.n_hi = 5;
  a.connected_only = true;
  SuiteOptions b = a;
  a.jobs = 1;
  b.jobs = 8;
  o.expect(report_json(run_suite(a)) == report_json(run_suite(b)),
           "reports differ between 1 and 8 workers");
  o.summary = "graph6 round trip exhaustive n <= 6, corpus counts frozen, reports identical "
              "across worker counts";
}

using CriterionFn = void (*)(Outcome&);
CriterionFn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                          criterion6, criterion7, criterion8, criterion9, criterion10};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    int k = std::atoi(argv[i]);
    if (k < 1 || k > 10) {
      std::cerr << "usage: acceptance [criterion numbers 1..10]\n";
      return 2;
    }
    which.push_back(k);
  }
  if (which.empty())
    for (int k = 1; k <= 10; ++k) which.push_back(k);

  bool all_ok = true;
  for (int k : which) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[k - 1](o);
    } catch (const std::exception& e) {
      o.fail(std::string("unexpected error: ") + e.what());
      if (o.summary.empty()) o.summary = "aborted";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.budget_seconds > 0 && secs > o.budget_seconds)
      o.fail("runtime budget exceeded: " + std::to_string(secs) + "s");
    char timing[32];
    std::snprintf(timing, sizeof timing, " (%.2fs)", secs);
    std::cout << "criterion " << k << ": " << (o.ok ? "PASS" : "FAIL") << " - " << o.summary
              << timing << "\n";
    for (const std::string& d : o.details) std::cout << "    " << d << "\n";
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
