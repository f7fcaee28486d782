#include <algorithm>
#include <climits>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "burn/canonical.hpp"
#include "burn/checks.hpp"
#include "burn/classical.hpp"
#include "burn/closed_forms.hpp"
#include "burn/corpus.hpp"
#include "burn/distance.hpp"
#include "burn/engine.hpp"
#include "burn/families.hpp"
#include "burn/graph6.hpp"
#include "burn/suite.hpp"
#include "burn/trace.hpp"

namespace {

using burn::Graph;
using burn::Player;
using burn::VertexSet;
using json = nlohmann::ordered_json;

// Exact game search is exponential in the worst case; this matches the cap
// the interactive mode uses before falling back to heuristics.
constexpr int kExactCap = 20;

// Accepts {"flag": value} objects, with one nested object per subcommand.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App*, bool, bool, std::string) const override {
    return "{}\n";
  }
  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    json j = json::parse(input);
    std::vector<CLI::ConfigItem> items;
    collect(j, {}, items);
    return items;
  }

 private:
  static std::string to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
  }
  static void collect(const json& j, std::vector<std::string> parents,
                      std::vector<CLI::ConfigItem>& items) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object()) {
        std::vector<std::string> down = parents;
        down.push_back(it.key());
        collect(it.value(), std::move(down), items);
      } else {
        CLI::ConfigItem item;
        item.parents = parents;
        item.name = it.key();
        if (it.value().is_array())
          for (const json& e : it.value()) item.inputs.push_back(to_text(e));
        else
          item.inputs.push_back(to_text(it.value()));
        items.push_back(std::move(item));
      }
    }
  }
};

json trace_to_json(const burn::PlayTrace& t) {
  json j;
  json initial = json::array();
  for (int v : t.initial) initial.push_back(v);
  j["initial"] = std::move(initial);
  j["starter"] = burn::player_name(t.starter);
  j["alternating"] = t.alternating;
  j["ends_after_spread"] = t.ends_after_spread;
  json rounds = json::array();
  for (const burn::TraceRound& r : t.rounds) {
    json jr;
    json spread = json::array();
    for (int v : r.spread_delta) spread.push_back(v);
    jr["spread"] = std::move(spread);
    if (r.selection) {
      jr["actor"] = burn::player_name(r.selection->first);
      jr["vertex"] = r.selection->second;
    }
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  return j;
}

struct GraphSource {
  std::string family, graph6, g6_file, edges_file;

  void add_flags(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family,
                              "family spec, e.g. path:9 or corona(cycle:4,complete:2)");
    auto* g = cmd->add_option("--graph6", graph6, "graph6 line");
    auto* gf = cmd->add_option("--g6-file", g6_file, "file with one graph6 line");
    auto* ef = cmd->add_option("--edges-file", edges_file, "edge list file: 'n m' then 'u v' lines");
    f->excludes(g)->excludes(gf)->excludes(ef);
    g->excludes(gf)->excludes(ef);
    gf->excludes(ef);
  }

  Graph resolve() const {
    if (!family.empty()) return burn::parse_family(family);
    if (!graph6.empty()) return burn::parse_graph6(graph6);
    if (!g6_file.empty()) {
      std::ifstream in(g6_file);
      if (!in) throw CLI::ValidationError("--g6-file", "cannot open " + g6_file);
      std::string line;
      while (std::getline(in, line))
        if (!line.empty()) return burn::parse_graph6(line);
      throw CLI::ValidationError("--g6-file", g6_file + " has no graph6 line");
    }
    if (!edges_file.empty()) {
      std::ifstream in(edges_file);
      if (!in) throw CLI::ValidationError("--edges-file", "cannot open " + edges_file);
      std::stringstream buf;
      buf << in.rdbuf();
      return burn::parse_edge_list(buf.str());
    }
    throw CLI::ValidationError("graph source",
                               "one of --family/--graph6/--g6-file/--edges-file is required");
  }
};

Player parse_player(const std::string& name) {
  if (name == "burner") return Player::Burner;
  if (name == "staller") return Player::Staller;
  throw CLI::ValidationError("player", "expected burner or staller, got " + name);
}

void require_exact_size(const Graph& g, const std::string& what) {
  if (g.order() > kExactCap)
    throw CLI::ValidationError(what, "exact game search is capped at " +
                                         std::to_string(kExactCap) + " vertices, graph has " +
                                         std::to_string(g.order()));
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int n = std::stoi(text);
    return {n, n};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

// ---- compute ----

struct ComputeOptions {
  GraphSource source;
  std::string quantity = "bg";
  std::vector<int> burned;
  std::string starter = "burner";
  int k = 1;
  bool trace = false;
  std::string format = "text";
};

int cmd_compute(const ComputeOptions& opt) {
  Graph g = opt.source.resolve();
  long long value = 0;
  std::optional<burn::PlayTrace> trace;
  std::vector<int> sources;

  auto game = [&](VertexSet b0, Player starter) {
    require_exact_size(g, "--quantity " + opt.quantity);
    burn::Solver s(g);
    if (opt.trace) {
      auto [v, t] = s.principal_variation(b0, starter);
      value = v;
      trace = std::move(t);
    } else {
      value = s.game_value(b0, starter);
    }
  };

  if (opt.quantity == "bg") {
    game({}, Player::Burner);
  } else if (opt.quantity == "bg-prime") {
    game({}, Player::Staller);
  } else if (opt.quantity == "relative") {
    VertexSet b0;
    for (int v : opt.burned) {
      if (v < 0 || v >= g.order())
        throw CLI::ValidationError("--burned", "vertex out of range: " + std::to_string(v));
      b0 |= VertexSet::single(v);
    }
    game(b0, parse_player(opt.starter));
  } else if (opt.quantity == "b") {
    burn::BurningResult res = burn::burning_number(g);
    value = res.value;
    sources = res.sequence.sources;
  } else if (opt.quantity == "cl" || opt.quantity == "burner-only") {
    require_exact_size(g, "--quantity " + opt.quantity);
    burn::Solver s(g);
    value = opt.quantity == "cl" ? s.staller_only_value({}) : s.burner_only_value({});
  } else if (opt.quantity == "gamma") {
    if (opt.k < 1) throw CLI::ValidationError("--k", "k must be >= 1");
    value = burn::gamma_k(g, opt.k);
  } else {
    throw CLI::ValidationError("--quantity", "unknown quantity " + opt.quantity);
  }

  if (opt.format == "json") {
    json j;
    j["graph6"] = burn::emit_graph6(g);
    j["quantity"] = opt.quantity;
    if (opt.quantity == "gamma") j["k"] = opt.k;
    j["value"] = value;
    if (trace) j["trace"] = trace_to_json(*trace);
    if (!sources.empty() && opt.trace) j["sources"] = sources;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
    if (trace) std::cout << burn::format_trace(*trace);
    if (!sources.empty() && opt.trace) {
      std::cout << "sources:";
      for (int v : sources) std::cout << ' ' << v;
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- corpus ----

struct CorpusOptions {
  int n = 1;
  bool connected = false;
  bool both_connected = false;
  bool dedup = false;
  std::string out;
};

int cmd_corpus(const CorpusOptions& opt) {
  burn::CorpusSpec spec;
  spec.n = opt.n;
  spec.connected_only = opt.connected;
  spec.both_connected = opt.both_connected;
  spec.dedup = opt.dedup;
  burn::stream_to_file(spec, opt.out);
  return 0;
}

// ---- verify ----

struct VerifyOptions {
  std::vector<std::string> suites;
  std::string range;
  int max_n = 0;
  bool connected = false;
  bool both_connected = false;
  bool dedup = true;
  int jobs = 1;
  std::string format = "json";
  std::string out;
  bool include_long_running = false;
  std::vector<std::string> graph6;
  std::string g6_file;
};

std::string canonical_suite_name(const std::string& name) {
  if (name.rfind("example-", 0) == 0) return "ex-" + name.substr(8);
  return name;
}

int cmd_verify(const VerifyOptions& opt) {
  burn::SuiteOptions so;
  for (const std::string& s : opt.suites) so.selection.push_back(canonical_suite_name(s));
  if (!opt.range.empty() && opt.max_n > 0)
    throw CLI::ValidationError("--n", "give either --n or --max-n, not both");
  if (!opt.range.empty()) {
    auto [lo, hi] = parse_range(opt.range);
    so.n_lo = lo;
    so.n_hi = hi;
  } else if (opt.max_n > 0) {
    so.n_lo = 1;
    so.n_hi = opt.max_n;
  }
  so.connected_only = opt.connected;
  so.both_connected = opt.both_connected;
  so.dedup = opt.dedup;
  so.jobs = opt.jobs;
  so.include_long_running = opt.include_long_running;
  for (const std::string& g6 : opt.graph6) so.explicit_graphs.push_back(burn::parse_graph6(g6));
  if (!opt.g6_file.empty())
    for (const Graph& g : burn::load_corpus(opt.g6_file)) so.explicit_graphs.push_back(g);

  if (so.explicit_graphs.empty() && so.n_hi >= 8 && !opt.include_long_running)
    throw CLI::ValidationError(
        "--n", "order-8 corpora are long-running (minutes to hours); pass --include-long-running");

  burn::Report rep = burn::run_suite(so);
  std::string text = opt.format == "csv" ? burn::report_csv(rep) : burn::report_json(rep);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out);
    if (!f) throw CLI::ValidationError("--out", "cannot write " + opt.out);
    f << text;
  }
  std::cerr << "checks: " << rep.summary.pass << " passed, " << rep.summary.fail << " failed, "
            << rep.summary.skip << " skipped\n";
  return rep.summary.fail == 0 ? 0 : 1;
}

// ---- sweep ----

struct SweepOptions {
  std::string family;
  std::string range;
  bool products = false;
  bool tree_gap = false;
  int max_n = 6;
};

int cmd_sweep(const SweepOptions& opt) {
  if (opt.products) {
    for (const burn::CheckResult& r : burn::product_sweep()) {
      std::cout << r.check_id << " " << burn::params_to_string(r.params) << ": " << r.lhs << " "
                << r.relation << " " << r.rhs << " [" << burn::status_name(r.status) << "]\n";
    }
    return 0;
  }
  if (opt.tree_gap) {
    auto rows = burn::tree_gap_scan(opt.max_n);
    std::cout << "graphs where every spanning tree's Burner-start value exceeds the graph's (n <= "
              << opt.max_n << "):\n";
    int worst = 0;
    for (const burn::TreeGapRow& row : rows) {
      worst = std::max(worst, row.min_tree_bg - row.bg);
      std::cout << "  " << row.graph6 << "  bg=" << row.bg << "  min-tree-bg=" << row.min_tree_bg
                << "  gap=" << (row.min_tree_bg - row.bg) << "\n";
    }
    std::cout << rows.size() << " graphs with a gap; largest gap seen: " << worst << "\n";
    return 0;
  }
  if (opt.family.empty())
    throw CLI::ValidationError("sweep", "pick one of --family, --products, --tree-gap");

  if (opt.family != "path" && opt.family != "cycle" && opt.family != "hypercube")
    throw CLI::ValidationError("--family", "sweep families: path, cycle, hypercube");
  auto [lo, hi] = parse_range(opt.range.empty() ? "1..12" : opt.range);
  bool cube = opt.family == "hypercube";
  if (opt.family == "cycle") lo = std::max(lo, 3);
  if (cube) {
    lo = std::max(lo, 1);
    hi = std::min(hi, 6);
  }
  std::string key_bg = opt.family + "-bg";
  std::string key_bgp = opt.family + "-bg'";
  std::printf("%4s %22s %22s\n", cube ? "d" : "n", "bg [lower exact upper]",
              "bg' [lower exact upper]");
  for (int n = lo; n <= hi; ++n) {
    burn::BoundRow rbg = burn::closed_forms(key_bg, n);  // throws on bad family/range
    burn::BoundRow rbgp = burn::closed_forms(key_bgp, n);
    std::string ebg = "-", ebgp = "-";
    int order = cube ? 1 << n : n;
    if (order <= kExactCap) {
      Graph g = cube ? burn::family({burn::FamilyKind::Hypercube, n})
                     : burn::parse_family(opt.family + ":" + std::to_string(n));
      burn::Solver s(g);
      ebg = std::to_string(s.game_value({}, Player::Burner));
      ebgp = std::to_string(s.game_value({}, Player::Staller));
    }
    std::printf("%4d %8d %6s %6d %8d %6s %6d\n", n, rbg.lower, ebg.c_str(), rbg.upper, rbgp.lower,
                ebgp.c_str(), rbgp.upper);
  }
  return 0;
}

// ---- play ----

struct PlayOptions {
  GraphSource source;
  std::string side = "staller";
  std::string starter = "burner";
  std::string mode = "auto";
  std::string record_file;
  std::string replay_file;
};

struct MoveFeed {
  std::vector<int> moves;
  std::size_t next = 0;
};

int heuristic_move(const Graph& g, const burn::DistanceMatrix& dm, VertexSet burned,
                   Player actor) {
  VertexSet open = g.vertices() - burned;
  int best = open.lowest();
  if (actor == Player::Staller) {
    // stay as far from the fire as possible
    int best_d = -1;
    for (int v : open) {
      int d = burned.empty() ? 0 : dm.to_set(v, burned).value_or(g.order());
      if (d > best_d) {
        best_d = d;
        best = v;
      }
    }
  } else {
    // greedy cover: minimize the worst distance any unburned vertex has to
    // the fire after this selection
    int best_worst = INT_MAX;
    for (int v : open) {
      VertexSet after = burned.with(v);
      int worst = 0;
      for (int u : g.vertices() - after)
        worst = std::max(worst, dm.to_set(u, after).value_or(g.order()));
      if (worst < best_worst) {
        best_worst = worst;
        best = v;
      }
    }
  }
  return best;
}

int exact_move(burn::Solver& s, const Graph& g, VertexSet burned, Player actor) {
  VertexSet all = g.vertices();
  int best = -1, best_val = 0;
  for (int v : all - burned) {
    VertexSet after = burned.with(v);
    int val = after == all ? 1 : 1 + s.game_value(after, other(actor));
    if (best < 0 || (actor == Player::Burner ? val < best_val : val > best_val)) {
      best = v;
      best_val = val;
    }
  }
  return best;
}

int cmd_play(const PlayOptions& opt) {
  Graph g = opt.source.resolve();
  Player human = parse_player(opt.side);
  Player starter = parse_player(opt.starter);

  bool exact;
  if (opt.mode == "exact") {
    require_exact_size(g, "--mode exact");
    exact = true;
  } else if (opt.mode == "heuristic") {
    exact = false;
  } else if (opt.mode == "auto") {
    exact = g.order() <= kExactCap;
  } else {
    throw CLI::ValidationError("--mode", "expected exact, heuristic or auto");
  }

  std::optional<MoveFeed> feed;
  if (!opt.replay_file.empty()) {
    std::ifstream in(opt.replay_file);
    if (!in) throw CLI::ValidationError("--replay", "cannot open " + opt.replay_file);
    json j = json::parse(in);
    MoveFeed f;
    for (const json& m : j.at("selections")) f.moves.push_back(m.at("vertex").get<int>());
    feed = std::move(f);
  }

  std::unique_ptr<burn::Solver> solver;
  std::unique_ptr<burn::DistanceMatrix> dm;
  if (exact) solver = std::make_unique<burn::Solver>(g);
  else dm = std::make_unique<burn::DistanceMatrix>(g);

  std::cout << "burning game on " << burn::emit_graph6(g) << " (" << g.order() << " vertices), "
            << burn::player_name(human) << " is you, " << burn::player_name(starter)
            << " starts, engine is " << (exact ? "exact" : "heuristic (not optimal)") << "\n";

  json record;
  record["graph6"] = burn::emit_graph6(g);
  record["starter"] = burn::player_name(starter);
  record["human"] = burn::player_name(human);
  record["mode"] = exact ? "exact" : "heuristic";
  json selections = json::array();

  VertexSet burned;
  VertexSet all = g.vertices();
  Player turn = starter;
  int round = 0;
  while (burned != all) {
    ++round;
    if (round > 1) {
      VertexSet grown = burned;
      for (int v : burned) grown |= g.neighbors(v);
      std::cout << "round " << round << ": fire spreads to " << (grown - burned).to_string()
                << "\n";
      burned = grown;
      if (burned == all) break;
    } else {
      std::cout << "round 1: no spread\n";
    }

    int choice = -1;
    if (feed) {
      if (feed->next >= feed->moves.size())
        throw CLI::ValidationError("--replay", "transcript ended before the game did");
      choice = feed->moves[feed->next++];
      if (choice < 0 || choice >= g.order() || burned.contains(choice))
        throw CLI::ValidationError("--replay", "recorded move is illegal: " +
                                                   std::to_string(choice));
      if (turn == human) std::cout << "your move (unburned vertex): ";
    } else if (turn == human) {
      for (;;) {
        std::cout << "your move (unburned vertex): " << std::flush;
        std::string line;
        if (!std::getline(std::cin, line)) {
          std::cout << "\ninput closed; game aborted after " << (round - 1)
                    << " completed rounds\n";
          return 0;
        }
        try {
          choice = std::stoi(line);
        } catch (const std::exception&) {
          std::cout << "not a vertex number\n";
          continue;
        }
        if (choice < 0 || choice >= g.order()) {
          std::cout << "vertex out of range\n";
          continue;
        }
        if (burned.contains(choice)) {
          std::cout << "that vertex is already burned\n";
          continue;
        }
        break;
      }
    } else {
      choice = exact ? exact_move(*solver, g, burned, turn)
                     : heuristic_move(g, *dm, burned, turn);
    }
    std::cout << burn::player_name(turn) << (turn == human ? " (you)" : "") << " plays " << choice
              << "\n";
    selections.push_back({{"actor", burn::player_name(turn)}, {"vertex", choice}});
    burned = burned.with(choice);
    turn = other(turn);
  }
  std::cout << "all vertices burned; game over after " << round << " rounds\n";
  if (exact) {
    int optimal = solver->game_value({}, starter);
    std::cout << "optimal value for this start: " << optimal << "\n";
  }

  if (!opt.record_file.empty()) {
    record["selections"] = std::move(selections);
    record["rounds"] = round;
    std::ofstream f(opt.record_file);
    if (!f) throw CLI::ValidationError("--record", "cannot write " + opt.record_file);
    f << record.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and a verification suite for the graph burning game"};
  app.require_subcommand(1);
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "",
                 "JSON config file mirroring the flags; give it before the subcommand, "
                 "with one object per subcommand name");

  ComputeOptions copt;
  CLI::App* compute = app.add_subcommand("compute", "compute one quantity for one graph");
  copt.source.add_flags(compute);
  compute->add_option("--quantity", copt.quantity,
                      "bg | bg-prime | b | cl | burner-only | relative | gamma")
      ->capture_default_str();
  compute->add_option("--burned", copt.burned, "initially burned vertices (relative)")
      ->delimiter(',');
  compute->add_option("--starter", copt.starter, "burner | staller (relative)")
      ->capture_default_str();
  compute->add_option("--k", copt.k, "radius for gamma")->capture_default_str();
  compute->add_flag("--trace", copt.trace, "print an optimal line of play / source sequence");
  compute->add_option("--format", copt.format, "text | json")->capture_default_str();

  CorpusOptions oopt;
  CLI::App* corpus = app.add_subcommand("corpus", "enumerate graphs to a graph6 file");
  corpus->add_option("--n", oopt.n, "order")->required();
  corpus->add_flag("--connected", oopt.connected, "connected graphs only");
  corpus->add_flag("--both-connected", oopt.both_connected, "graph and complement connected");
  corpus->add_flag("--dedup", oopt.dedup, "one representative per isomorphism class");
  corpus->add_option("--out", oopt.out, "output file")->required();

  VerifyOptions vopt;
  vopt.jobs = [] {
    const char* env = std::getenv("BURNGAME_JOBS");
    return env ? std::max(1, std::atoi(env)) : 1;
  }();
  CLI::App* verify = app.add_subcommand("verify", "run checks over a corpus and report");
  verify->add_option("--suite", vopt.suites,
                     "check ids (repeatable or comma-separated); default all")
      ->delimiter(',');
  verify->add_option("--n", vopt.range, "order range A..B (or a single order)");
  verify->add_option("--max-n", vopt.max_n, "shorthand for --n 1..N");
  verify->add_flag("--connected", vopt.connected, "restrict corpus to connected graphs");
  verify->add_flag("--both-connected", vopt.both_connected,
                   "restrict corpus to graphs with connected complement too");
  verify->add_flag("--dedup,!--no-dedup", vopt.dedup,
                   "one representative per isomorphism class (default on)");
  verify->add_option("--jobs", vopt.jobs, "worker threads (env BURNGAME_JOBS)")
      ->capture_default_str();
  verify->add_option("--format", vopt.format, "json | csv")->capture_default_str();
  verify->add_option("--out", vopt.out, "write the report here instead of stdout");
  verify->add_flag("--include-long-running", vopt.include_long_running,
                   "enable the long-running parts (order-8 corpora, the horizon-6 refutation)");
  verify->add_option("--graph6", vopt.graph6, "run per-graph checks on these graphs instead")
      ->delimiter(',');
  verify->add_option("--g6-file", vopt.g6_file, "run per-graph checks on this graph6 file");

  SweepOptions sopt;
  CLI::App* sweep = app.add_subcommand("sweep", "bound tables and exploration scans");
  sweep->add_option("--family", sopt.family, "path | cycle | hypercube");
  sweep->add_option("--n", sopt.range, "range A..B (path/cycle orders, hypercube dimensions)");
  sweep->add_flag("--products", sopt.products, "print the product-proposition sweep");
  sweep->add_flag("--tree-gap", sopt.tree_gap,
                  "scan for graphs whose spanning trees all beat the graph's game value");
  sweep->add_option("--max-n", sopt.max_n, "tree-gap scan cap")->capture_default_str();

  PlayOptions popt;
  CLI::App* play = app.add_subcommand("play", "interactive game against the engine");
  popt.source.add_flags(play);
  play->add_option("--side", popt.side, "your side: burner | staller")->capture_default_str();
  play->add_option("--starter", popt.starter, "who selects first")->capture_default_str();
  play->add_option("--mode", popt.mode, "exact | heuristic | auto")->capture_default_str();
  play->add_option("--record", popt.record_file, "write a JSON transcript");
  play->add_option("--replay", popt.replay_file, "take moves from a JSON transcript");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return cmd_compute(copt);
    if (corpus->parsed()) return cmd_corpus(oopt);
    if (verify->parsed()) return cmd_verify(vopt);
    if (sweep->parsed()) return cmd_sweep(sopt);
    if (play->parsed()) return cmd_play(popt);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
