#include "burn/suite.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "burn/trace.hpp"

namespace burn {

namespace {

using ojson = nlohmann::ordered_json;

bool is_per_graph(const std::string& id) {
  const auto& defs = per_graph_checks();
  return std::any_of(defs.begin(), defs.end(), [&](const CheckDef& d) { return d.id == id; });
}

ojson set_to_json(VertexSet s) {
  ojson a = ojson::array();
  for (int v : s) a.push_back(v);
  return a;
}

ojson trace_to_json(const PlayTrace& t) {
  ojson j;
  j["initial"] = set_to_json(t.initial);
  j["starter"] = player_name(t.starter);
  j["alternating"] = t.alternating;
  j["ends_after_spread"] = t.ends_after_spread;
  ojson rounds = ojson::array();
  for (const TraceRound& r : t.rounds) {
    ojson jr;
    jr["spread"] = set_to_json(r.spread_delta);
    if (r.selection) {
      jr["actor"] = player_name(r.selection->first);
      jr["vertex"] = r.selection->second;
    }
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  return j;
}

ojson witness_to_json(const Witness& w) {
  ojson j;
  if (!w.note.empty()) j["note"] = w.note;
  ojson items = ojson::array();
  for (const WitnessItem& it : w.items) {
    ojson ji;
    ji["label"] = it.label;
    ji["graph6"] = it.graph6;
    ji["quantity"] = it.quantity;
    ji["value"] = it.value;
    if (it.trace) ji["trace"] = trace_to_json(*it.trace);
    if (!it.sources.empty()) ji["sources"] = it.sources;
    items.push_back(std::move(ji));
  }
  j["items"] = std::move(items);
  return j;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

}  // namespace

Report run_suite(const SuiteOptions& options) {
  const std::vector<std::string> known = all_check_ids();
  bool run_all = options.selection.empty();
  std::vector<std::string> selected;
  for (const std::string& s : options.selection) {
    if (s == "all") {
      run_all = true;
      continue;
    }
    if (std::find(known.begin(), known.end(), s) == known.end())
      throw std::invalid_argument("unknown check id: " + s);
    if (!options.explicit_graphs.empty() && !is_per_graph(s))
      throw std::invalid_argument("check " + s + " is not a per-graph check and cannot run on explicit graphs");
    selected.push_back(s);
  }
  if (run_all) selected = known;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<std::string> per_graph_ids;
  bool want_path = false, want_cycle = false, want_cube = false, want_products = false;
  bool want_ex28 = false, want_ex52 = false;
  for (const std::string& id : selected) {
    if (is_per_graph(id)) per_graph_ids.push_back(id);
    else if (id == "thm-5.3") want_path = true;
    else if (id == "thm-cycles") want_cycle = true;
    else if (id == "thm-6.2") want_cube = true;
    else if (id == "prop-6.1" || id == "prop-6.3" || id == "prop-6.4") want_products = true;
    else if (id == "ex-2.8") want_ex28 = true;
    else if (id == "ex-5.2") want_ex52 = true;
  }
  if (!options.explicit_graphs.empty())
    want_path = want_cycle = want_cube = want_products = want_ex28 = want_ex52 = false;

  Report rep;
  rep.suite = options.selection.empty() ? "all" : join(options.selection, ',');
  if (!options.explicit_graphs.empty()) {
    rep.corpus = "explicit";
  } else {
    rep.corpus = "n=" + std::to_string(options.n_lo) + ".." + std::to_string(options.n_hi);
    if (options.connected_only) rep.corpus += ";connected";
    if (options.both_connected) rep.corpus += ";both-connected";
    if (options.dedup) rep.corpus += ";dedup";
  }

  if (!per_graph_ids.empty()) {
    std::vector<Graph> graphs = options.explicit_graphs;
    if (graphs.empty()) {
      for (int n = options.n_lo; n <= options.n_hi; ++n) {
        CorpusSpec cs;
        cs.n = n;
        cs.connected_only = options.connected_only;
        cs.both_connected = options.both_connected;
        cs.dedup = options.dedup;
        enumerate_corpus(cs, [&](const Graph& g) { graphs.push_back(g); });
      }
    }
    // Per-graph buckets keep the output independent of scheduling; the seeded
    // checks derive their randomness from the graph alone.
    std::vector<std::vector<CheckResult>> buckets(graphs.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1 || graphs.size() <= 1) {
      for (std::size_t i = 0; i < graphs.size(); ++i)
        buckets[i] = run_checks_on_graph(graphs[i], per_graph_ids);
    } else {
      std::atomic<std::size_t> next{0};
      std::exception_ptr error;
      std::mutex error_mutex;
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
          for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= graphs.size()) return;
            try {
              buckets[i] = run_checks_on_graph(graphs[i], per_graph_ids);
            } catch (...) {
              std::lock_guard<std::mutex> lock(error_mutex);
              if (!error) error = std::current_exception();
              return;
            }
          }
        });
      }
      for (std::thread& th : pool) th.join();
      if (error) std::rethrow_exception(error);
    }
    for (auto& bucket : buckets)
      for (CheckResult& r : bucket) rep.results.push_back(std::move(r));
  }

  auto append = [&](std::vector<CheckResult> rows) {
    for (CheckResult& r : rows) rep.results.push_back(std::move(r));
  };
  if (want_path) append(family_sweep("path", 1, 22));
  if (want_cycle) append(family_sweep("cycle", 3, 22));
  if (want_cube) append(family_sweep("hypercube", 1, 4));
  if (want_products) {
    for (CheckResult& r : product_sweep())
      if (std::find(selected.begin(), selected.end(), r.check_id) != selected.end())
        rep.results.push_back(std::move(r));
  }
  if (want_ex28) append(check_example_2_8(options.include_long_running));
  if (want_ex52) append(check_example_5_2());

  std::sort(rep.results.begin(), rep.results.end(),
            [](const CheckResult& a, const CheckResult& b) {
              if (a.check_id != b.check_id) return a.check_id < b.check_id;
              if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
              return params_to_string(a.params) < params_to_string(b.params);
            });

  for (const CheckResult& r : rep.results) {
    if (r.status == CheckStatus::Pass) ++rep.summary.pass;
    else if (r.status == CheckStatus::Fail) ++rep.summary.fail;
    else ++rep.summary.skip;
  }
  return rep;
}

std::string report_json(const Report& report) {
  ojson j;
  j["schema_version"] = report.schema_version;
  j["suite"] = report.suite;
  j["corpus"] = report.corpus;
  ojson results = ojson::array();
  for (const CheckResult& r : report.results) {
    ojson jr;
    jr["check_id"] = r.check_id;
    jr["graph6"] = r.graph6;
    ojson params = ojson::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    jr["params"] = std::move(params);
    if (r.status == CheckStatus::Skip) {
      jr["holds"] = nullptr;
    } else {
      jr["lhs"] = r.lhs;
      jr["relation"] = r.relation;
      jr["rhs"] = r.rhs;
      jr["holds"] = r.status == CheckStatus::Pass;
    }
    jr["status"] = status_name(r.status);
    if (!r.note.empty()) jr["note"] = r.note;
    if (r.witness) jr["witness"] = witness_to_json(*r.witness);
    results.push_back(std::move(jr));
  }
  j["results"] = std::move(results);
  j["summary"] = {{"pass", report.summary.pass},
                  {"fail", report.summary.fail},
                  {"skip", report.summary.skip},
                  {"total", report.summary.pass + report.summary.fail + report.summary.skip}};
  return j.dump(2) + "\n";
}

std::string report_csv(const Report& report) {
  std::string out = "check_id,graph6,params,lhs,relation,rhs,status,holds,note\n";
  for (const CheckResult& r : report.results) {
    std::vector<std::string> fields{csv_escape(r.check_id), csv_escape(r.graph6),
                                    csv_escape(params_to_string(r.params))};
    if (r.status == CheckStatus::Skip) {
      fields.insert(fields.end(), {"", "", "", "skip", ""});
    } else {
      fields.insert(fields.end(),
                    {std::to_string(r.lhs), r.relation, std::to_string(r.rhs),
                     status_name(r.status), r.status == CheckStatus::Pass ? "true" : "false"});
    }
    fields.push_back(csv_escape(r.note));
    out += join(fields, ',');
    out += '\n';
  }
  return out;
}

}  // namespace burn
