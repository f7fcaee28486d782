#ifndef BURN_SUITE_HPP
#define BURN_SUITE_HPP

#include <string>
#include <vector>

#include "burn/checks.hpp"
#include "burn/corpus.hpp"
#include "burn/graph.hpp"

namespace burn {

// What to verify and over which graphs. An empty selection (or one containing
// "all") runs every registered check; per-graph checks run over the
// enumerated corpus for each order in [n_lo, n_hi] (or over explicit_graphs
// when nonempty), the family, product and example checks run once.
struct SuiteOptions {
  std::vector<std::string> selection;
  int n_lo = 1;
  int n_hi = 6;
  bool connected_only = false;
  bool both_connected = false;
  bool dedup = true;
  int jobs = 1;
  bool include_long_running = false;
  std::vector<Graph> explicit_graphs;
};

struct SuiteSummary {
  long long pass = 0;
  long long fail = 0;
  long long skip = 0;
};

struct Report {
  int schema_version = 1;
  std::string suite;
  std::string corpus;
  std::vector<CheckResult> results;
  SuiteSummary summary;
};

// Runs the selected checks; results are sorted by (check id, graph6, params)
// and are identical for every jobs value. Unknown selection entries and
// non-per-graph selections combined with explicit graphs throw
// std::invalid_argument.
Report run_suite(const SuiteOptions& options);

std::string report_json(const Report& report);
std::string report_csv(const Report& report);

}  // namespace burn

#endif
