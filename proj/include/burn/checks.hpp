#ifndef BURN_CHECKS_HPP
#define BURN_CHECKS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burn/classical.hpp"
#include "burn/distance.hpp"
#include "burn/engine.hpp"
#include "burn/graph.hpp"
#include "burn/trace.hpp"

namespace burn {

enum class CheckStatus { Pass, Fail, Skip };

std::string status_name(CheckStatus s);

// One certified value inside a witness: a graph, the quantity claimed for it,
// and a certificate that replays to that value (a play trace for game
// quantities, a source sequence for the classical burning number).
struct WitnessItem {
  std::string label;
  std::string graph6;
  std::string quantity;  // bg | bg-prime | cl | burner-only | b
  int value = 0;
  std::optional<PlayTrace> trace;
  std::vector<int> sources;
};

struct Witness {
  std::vector<WitnessItem> items;
  std::string note;
};

// Re-derives every witness item from its graph6 string: traces are replayed
// through the rules, source sequences through the cover test. True iff every
// item reproduces its claimed value.
bool replay_witness(const Witness& w);

using Params = std::vector<std::pair<std::string, std::string>>;

std::string params_to_string(const Params& p);

// One evaluated comparison. `relation` is one of "<=", ">=", "==", "iff"
// (iff compares truth values of lhs and rhs).
struct CheckResult {
  std::string check_id;
  std::string graph6;
  Params params;
  long long lhs = 0;
  long long rhs = 0;
  std::string relation;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
  std::optional<Witness> witness;
};

// Lazily computed quantities for one graph, shared by every check evaluated
// on it. The complement context is materialized on first use.
class GraphCtx {
 public:
  explicit GraphCtx(Graph g);
  ~GraphCtx();
  GraphCtx(const GraphCtx&) = delete;
  GraphCtx& operator=(const GraphCtx&) = delete;

  const Graph& graph() const { return g_; }
  const std::string& g6();
  int n() const { return g_.order(); }
  bool connected();
  Solver& solver();
  const DistanceMatrix& dm();

  int bg();
  int bgp();
  int b();
  const BurningSequence& bseq();
  int bsq();  // classical burning number of the square
  int cl();
  int burner_only();
  int gamma(int k);
  std::optional<int> rad();
  std::optional<int> dia();
  GraphCtx& co();
  GraphCtx& sq();

  // Witness item for one of the quantity names accepted by WitnessItem,
  // certificate included.
  WitnessItem witness_item(const std::string& label, const std::string& quantity);

 private:
  Graph g_;
  std::optional<std::string> g6_;
  std::optional<bool> connected_;
  std::unique_ptr<Solver> solver_;
  std::unique_ptr<DistanceMatrix> dm_;
  std::optional<int> bg_, bgp_, cl_, burner_only_;
  std::optional<BurningResult> b_;
  std::vector<std::pair<int, int>> gamma_;
  std::unique_ptr<GraphCtx> co_, sq_;
};

// A named result with a graph-decidable applicability test. `evaluate` may
// append several rows (parts are distinguished through params); it is called
// only when `applicable` returns the empty string, otherwise the runner emits
// a single Skip row carrying the reason.
struct CheckDef {
  std::string id;
  std::string statement;
  std::string (*applicable)(GraphCtx&);
  void (*evaluate)(GraphCtx&, std::vector<CheckResult>&);
};

const std::vector<CheckDef>& per_graph_checks();

// Runs the selected per-graph checks (all of them when ids is empty) against
// one graph; unknown ids throw std::invalid_argument.
std::vector<CheckResult> run_checks_on_graph(const Graph& g,
                                             const std::vector<std::string>& ids = {});

// Closed-form windows against exact solver values. family is path, cycle or
// hypercube; rows carry check ids thm-5.3, thm-cycles, thm-6.2.
std::vector<CheckResult> family_sweep(const std::string& family, int lo, int hi);

// All ordered pairs from the fixed factor set {K_2, P_3, P_4, C_3, C_4,
// K_{1,3}} whose product stays within 20 vertices; evaluates prop-6.1,
// prop-6.3, prop-6.4.
std::vector<CheckResult> product_sweep();

// The 52-vertex edge-removal gadget: part (a) scripted upper bound (always),
// part (b) horizon-6 refutation on the graph minus the (v, w) edge (only
// with include_long_running, otherwise a Skip row).
std::vector<CheckResult> check_example_2_8(bool include_long_running);

// The 11-vertex graph whose game value beats every spanning tree's.
std::vector<CheckResult> check_example_5_2();

// Right-hand side of the prop-2.10 characterization: some v has every vertex
// outside N[v] adjacent to all but at most one vertex outside N_2[v].
bool characterize_3_hypothesis(const Graph& g);

// Per-edge gaps game_value(g - e) - game_value(g) for one starter, in edge
// order.
std::vector<std::pair<Edge, int>> edge_removal_gaps(const Graph& g, Player starter);

// Exploration data (reporting only, no pass/fail): how far the spanning-tree
// minimum sits above the game value.
struct TreeGapRow {
  std::string graph6;
  int bg = 0;
  int min_tree_bg = 0;
};
std::vector<TreeGapRow> tree_gap_scan(int max_n, std::uint64_t tree_cap = 200000);

// Every registered check id (per-graph, family, product, example).
std::vector<std::string> all_check_ids();

// Result coverage manifest and the mapping from its entries to registered
// check ids ("2.1" matches prop-2.1, "cycles" matches thm-cycles, ...).
std::vector<std::string> coverage_manifest();
bool manifest_entry_covered(const std::string& entry);

}  // namespace burn

#endif
