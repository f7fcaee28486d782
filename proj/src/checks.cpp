#include "burn/checks.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <functional>
#include <random>
#include <stdexcept>

#include "burn/canonical.hpp"
#include "burn/closed_forms.hpp"
#include "burn/corpus.hpp"
#include "burn/families.hpp"
#include "burn/figures.hpp"
#include "burn/graph6.hpp"
#include "burn/products.hpp"
#include "burn/spanning.hpp"

namespace burn {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

std::string params_to_string(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

namespace {

bool relation_holds(long long lhs, const std::string& rel, long long rhs) {
  if (rel == "<=") return lhs <= rhs;
  if (rel == ">=") return lhs >= rhs;
  if (rel == "==") return lhs == rhs;
  if (rel == "iff") return (lhs != 0) == (rhs != 0);
  throw std::invalid_argument("unknown relation: " + rel);
}

// Certificate for a single-player line: at each selection, the lowest vertex
// whose successor value is consistent with the remaining round count.
PlayTrace solo_trace(Solver& s, Player who) {
  const Graph& g = s.graph();
  PlayTrace t;
  t.starter = who;
  t.alternating = false;
  VertexSet burned;
  VertexSet all = g.vertices();
  auto value = [&](VertexSet b) {
    return who == Player::Burner ? s.burner_only_value(b) : s.staller_only_value(b);
  };
  int remaining = value(burned);
  while (remaining > 0) {
    VertexSet grown = burned;
    for (int v : burned) grown |= g.neighbors(v);
    TraceRound round;
    round.spread_delta = grown - burned;
    burned = grown;
    if (burned == all) {
      if (remaining != 1) throw std::logic_error("solo trace: spread finished early");
      t.ends_after_spread = true;
      t.rounds.push_back(std::move(round));
      break;
    }
    bool found = false;
    for (int v : all - burned) {
      VertexSet next = burned.with(v);
      int val = next == all ? 1 : 1 + value(next);
      if (val == remaining) {
        round.selection = {who, v};
        burned = next;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("solo trace: no consistent selection");
    t.rounds.push_back(std::move(round));
    --remaining;
  }
  return t;
}

// Game-value certificate for an arbitrary graph/start, via a throwaway solver.
WitnessItem game_item(const Graph& g, const std::string& label, VertexSet b0, Player starter) {
  Solver s(g);
  auto [val, trace] = s.principal_variation(b0, starter);
  WitnessItem it;
  it.label = label;
  it.graph6 = emit_graph6(g);
  it.quantity = starter == Player::Burner ? "bg" : "bg-prime";
  it.value = val;
  it.trace = std::move(trace);
  return it;
}

WitnessItem burn_item(const Graph& g, const std::string& label) {
  BurningResult res = burning_number(g);
  WitnessItem it;
  it.label = label;
  it.graph6 = emit_graph6(g);
  it.quantity = "b";
  it.value = res.value;
  it.sources = res.sequence.sources;
  return it;
}

CheckResult plain_row(std::string id, std::string g6, Params params, long long lhs,
                      std::string rel, long long rhs, std::string note = {}) {
  CheckResult r;
  r.check_id = std::move(id);
  r.graph6 = std::move(g6);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.relation = std::move(rel);
  r.status = relation_holds(lhs, r.relation, rhs) ? CheckStatus::Pass : CheckStatus::Fail;
  r.note = std::move(note);
  return r;
}

// Quantity selector for auto-built witnesses: "bg", "b", ... on the graph
// itself, "co:" / "sq:" prefixes redirect to the complement / square context.
WitnessItem ctx_item(GraphCtx& c, const std::string& label, const std::string& sel) {
  if (sel.rfind("co:", 0) == 0) return c.co().witness_item(label, sel.substr(3));
  if (sel.rfind("sq:", 0) == 0) return c.sq().witness_item(label, sel.substr(3));
  return c.witness_item(label, sel);
}

using WitnessPlan = std::vector<std::pair<std::string, std::string>>;

void emit_row(std::vector<CheckResult>& out, GraphCtx& c, std::string id, Params params,
              long long lhs, std::string rel, long long rhs, const WitnessPlan& wit = {},
              std::string note = {}) {
  CheckResult r =
      plain_row(std::move(id), c.g6(), std::move(params), lhs, std::move(rel), rhs, std::move(note));
  if (r.status == CheckStatus::Fail) {
    Witness w;
    for (const auto& [label, sel] : wit) w.items.push_back(ctx_item(c, label, sel));
    r.witness = std::move(w);
  }
  out.push_back(std::move(r));
}

std::string need_connected(GraphCtx& c) {
  return c.connected() ? "" : "requires a connected graph";
}

int max_finite_distance(GraphCtx& c) {
  int best = 0;
  for (int u = 0; u < c.n(); ++u)
    for (int v = u + 1; v < c.n(); ++v)
      if (auto d = c.dm().at(u, v)) best = std::max(best, *d);
  return best;
}

std::string edge_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

constexpr std::uint64_t kContinuationSalt = 0x9e3779b97f4a7c15ULL;
constexpr std::uint64_t kSubgraphSalt = 0xc2b2ae3d27d4eb4fULL;

}  // namespace

bool replay_witness(const Witness& w) {
  try {
    for (const WitnessItem& item : w.items) {
      Graph g = parse_graph6(item.graph6);
      bool checked = false;
      if (item.trace) {
        if (replay_trace(g, *item.trace) != item.value) return false;
        checked = true;
      }
      if (!item.sources.empty()) {
        if (item.quantity != "b") return false;
        if (!covers(g, BurningSequence{item.sources})) return false;
        if (static_cast<int>(item.sources.size()) != item.value) return false;
        checked = true;
      }
      if (!checked) return false;
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

GraphCtx::GraphCtx(Graph g) : g_(std::move(g)) {}
GraphCtx::~GraphCtx() = default;

const std::string& GraphCtx::g6() {
  if (!g6_) g6_ = emit_graph6(g_);
  return *g6_;
}

bool GraphCtx::connected() {
  if (!connected_) connected_ = is_connected(g_);
  return *connected_;
}

Solver& GraphCtx::solver() {
  if (!solver_) solver_ = std::make_unique<Solver>(g_);
  return *solver_;
}

const DistanceMatrix& GraphCtx::dm() {
  if (!dm_) dm_ = std::make_unique<DistanceMatrix>(g_);
  return *dm_;
}

int GraphCtx::bg() {
  if (!bg_) bg_ = solver().game_value({}, Player::Burner);
  return *bg_;
}

int GraphCtx::bgp() {
  if (!bgp_) bgp_ = solver().game_value({}, Player::Staller);
  return *bgp_;
}

int GraphCtx::b() {
  if (!b_) b_ = burning_number(g_);
  return b_->value;
}

const BurningSequence& GraphCtx::bseq() {
  b();
  return b_->sequence;
}

int GraphCtx::bsq() { return sq().b(); }

int GraphCtx::cl() {
  if (!cl_) cl_ = solver().staller_only_value({});
  return *cl_;
}

int GraphCtx::burner_only() {
  if (!burner_only_) burner_only_ = solver().burner_only_value({});
  return *burner_only_;
}

int GraphCtx::gamma(int k) {
  for (const auto& [kk, val] : gamma_)
    if (kk == k) return val;
  int val = gamma_k(g_, k);
  gamma_.emplace_back(k, val);
  return val;
}

std::optional<int> GraphCtx::rad() { return dm().radius(); }
std::optional<int> GraphCtx::dia() { return dm().diameter(); }

GraphCtx& GraphCtx::co() {
  if (!co_) co_ = std::make_unique<GraphCtx>(complement(g_));
  return *co_;
}

GraphCtx& GraphCtx::sq() {
  if (!sq_) sq_ = std::make_unique<GraphCtx>(square(g_));
  return *sq_;
}

WitnessItem GraphCtx::witness_item(const std::string& label, const std::string& quantity) {
  WitnessItem it;
  it.label = label;
  it.graph6 = g6();
  it.quantity = quantity;
  if (quantity == "bg") {
    auto [val, trace] = solver().principal_variation({}, Player::Burner);
    it.value = val;
    it.trace = std::move(trace);
  } else if (quantity == "bg-prime") {
    auto [val, trace] = solver().principal_variation({}, Player::Staller);
    it.value = val;
    it.trace = std::move(trace);
  } else if (quantity == "cl") {
    it.value = cl();
    it.trace = solo_trace(solver(), Player::Staller);
  } else if (quantity == "burner-only") {
    it.value = burner_only();
    it.trace = solo_trace(solver(), Player::Burner);
  } else if (quantity == "b") {
    it.value = b();
    it.sources = bseq().sources;
  } else {
    throw std::invalid_argument("unknown witness quantity: " + quantity);
  }
  return it;
}

bool characterize_3_hypothesis(const Graph& g) {
  DistanceMatrix dm(g);
  VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    VertexSet far = all - dm.ball(v, 2);  // outside N_2[v]
    bool good = true;
    for (int q : all - g.neighbors(v).with(v)) {
      if ((far - g.neighbors(q).with(q)).count() > 1) {
        good = false;
        break;
      }
    }
    if (good) return true;
  }
  return false;
}

namespace {

void eval_prop_2_1(GraphCtx& c, std::vector<CheckResult>& out) {
  long long cap_bg = std::min<long long>(c.cl(), 2LL * c.bsq() - 1);
  long long cap_bgp = std::min<long long>(c.cl(), 2LL * c.bsq());
  emit_row(out, c, "prop-2.1", {{"part", "bg-lower"}}, c.b(), "<=", c.bg(),
           {{"b(G)", "b"}, {"bg(G)", "bg"}});
  emit_row(out, c, "prop-2.1", {{"part", "bg-upper"}}, c.bg(), "<=", cap_bg,
           {{"bg(G)", "bg"}, {"CL(G)", "cl"}, {"b(G^2)", "sq:b"}});
  emit_row(out, c, "prop-2.1", {{"part", "bgp-lower"}}, c.b(), "<=", c.bgp(),
           {{"b(G)", "b"}, {"bg'(G)", "bg-prime"}});
  emit_row(out, c, "prop-2.1", {{"part", "bgp-upper"}}, c.bgp(), "<=", cap_bgp,
           {{"bg'(G)", "bg-prime"}, {"CL(G)", "cl"}, {"b(G^2)", "sq:b"}});
}

void eval_prop_2_2(GraphCtx& c, std::vector<CheckResult>& out) {
  long long r = *c.rad();
  long long d = *c.dia();
  emit_row(out, c, "prop-2.2", {{"part", "bg"}}, c.bg(), "<=", r + 1, {{"bg(G)", "bg"}});
  emit_row(out, c, "prop-2.2", {{"part", "bgp"}}, c.bgp(), "<=", std::min(r + 2, d + 1),
           {{"bg'(G)", "bg-prime"}});
}

std::string applicable_prop_2_3(GraphCtx& c) {
  if (max_degree(c.graph()) > c.n() - 2) return "maximum degree exceeds n - 2: no part applies";
  return "";
}

void eval_prop_2_3(GraphCtx& c, std::vector<CheckResult>& out) {
  int delta = max_degree(c.graph());
  emit_row(out, c, "prop-2.3", {{"part", "bg"}}, c.bg(), "<=", c.n() - delta, {{"bg(G)", "bg"}});
  if (delta <= c.n() - 3)
    emit_row(out, c, "prop-2.3", {{"part", "bgp"}}, c.bgp(), "<=", c.n() - delta,
             {{"bg'(G)", "bg-prime"}});
}

std::string applicable_sampled(GraphCtx& c) {
  return c.n() <= 6 ? "" : "sampled check capped at 6 vertices";
}

void eval_thm_2_4(GraphCtx& c, std::vector<CheckResult>& out) {
  Solver& s = c.solver();
  int n = c.n();
  long long violations = 0;
  long long pairs = 0;
  std::optional<std::pair<VertexSet, VertexSet>> bad;
  auto consider = [&](VertexSet a, VertexSet b) {
    ++pairs;
    if (s.game_value(b, Player::Burner) > s.game_value(a, Player::Burner)) {
      ++violations;
      if (!bad) bad = {a, b};
    }
  };
  std::string mode;
  if (n <= 4) {
    mode = "exhaustive";
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      VertexSet a, b;
      int x = code;
      // per-vertex digit: 0 = outside both, 1 = B only, 2 = both
      for (int v = 0; v < n; ++v, x /= 3) {
        int digit = x % 3;
        if (digit >= 1) b |= VertexSet::single(v);
        if (digit == 2) a |= VertexSet::single(v);
      }
      consider(a, b);
    }
  } else {
    mode = "seeded";
    std::mt19937_64 rng(canonical_word(c.graph()) ^ kContinuationSalt);
    for (int i = 0; i < 200; ++i) {
      VertexSet a, b;
      for (int v = 0; v < n; ++v) {
        auto digit = rng() % 3;
        if (digit >= 1) b |= VertexSet::single(v);
        if (digit == 2) a |= VertexSet::single(v);
      }
      consider(a, b);
    }
  }
  CheckResult r = plain_row("thm-2.4", c.g6(),
                            {{"mode", mode}, {"pairs", std::to_string(pairs)}}, violations,
                            "==", 0);
  if (r.status == CheckStatus::Fail && bad) {
    Witness w;
    w.items.push_back(game_item(c.graph(), "value from A", bad->first, Player::Burner));
    w.items.push_back(game_item(c.graph(), "value from B", bad->second, Player::Burner));
    w.note = "A=" + bad->first.to_string() + " B=" + bad->second.to_string();
    r.witness = std::move(w);
  }
  out.push_back(std::move(r));
}

void eval_prop_2_6(GraphCtx& c, std::vector<CheckResult>& out) {
  long long diff = std::abs(static_cast<long long>(c.bg()) - c.bgp());
  emit_row(out, c, "prop-2.6", {}, diff, "<=", 1, {{"bg(G)", "bg"}, {"bg'(G)", "bg-prime"}});
}

std::string applicable_thm_2_7(GraphCtx& c) {
  if (!c.connected()) return "requires a connected graph";
  if (c.graph().edge_count() == 0) return "no edge to remove";
  return "";
}

void eval_thm_2_7(GraphCtx& c, std::vector<CheckResult>& out) {
  for (auto [u, v] : c.graph().edges()) {
    Graph ge = remove_edge(c.graph(), u, v);
    Solver se(ge);
    long long ebg = se.game_value({}, Player::Burner);
    long long ebgp = se.game_value({}, Player::Staller);
    Params base{{"e", edge_text(u, v)}};
    struct Part {
      const char* name;
      long long lhs, rhs;
      Player starter;
    };
    Part parts[] = {
        {"bg-lower", c.bg(), ebg, Player::Burner},
        {"bg-upper", ebg, c.bg() + 2LL, Player::Burner},
        {"bgp-lower", c.bgp(), ebgp, Player::Staller},
        {"bgp-upper", ebgp, c.bgp() + 2LL, Player::Staller},
    };
    for (const Part& p : parts) {
      Params params = base;
      params.emplace_back("part", p.name);
      CheckResult r = plain_row("thm-2.7", c.g6(), std::move(params), p.lhs, "<=", p.rhs);
      if (r.status == CheckStatus::Fail) {
        Witness w;
        w.items.push_back(c.witness_item("value of G",
                                         p.starter == Player::Burner ? "bg" : "bg-prime"));
        w.items.push_back(game_item(ge, "value of G - e", {}, p.starter));
        r.witness = std::move(w);
      }
      out.push_back(std::move(r));
    }
  }
}

void eval_prop_2_9(GraphCtx& c, std::vector<CheckResult>& out) {
  int n = c.n();
  emit_row(out, c, "prop-2.9", {{"part", "bg-1"}}, c.bg() == 1, "iff", n == 1, {{"bg(G)", "bg"}});
  emit_row(out, c, "prop-2.9", {{"part", "bgp-1"}}, c.bgp() == 1, "iff", n == 1,
           {{"bg'(G)", "bg-prime"}});
  emit_row(out, c, "prop-2.9", {{"part", "bg-2"}}, c.bg() == 2, "iff",
           n >= 2 && max_degree(c.graph()) >= n - 2, {{"bg(G)", "bg"}});
  emit_row(out, c, "prop-2.9", {{"part", "bgp-2"}}, c.bgp() == 2, "iff",
           n >= 2 && min_degree(c.graph()) >= n - 2, {{"bg'(G)", "bg-prime"}});
}

void eval_prop_2_10(GraphCtx& c, std::vector<CheckResult>& out) {
  bool rhs = max_degree(c.graph()) <= c.n() - 3 && characterize_3_hypothesis(c.graph());
  emit_row(out, c, "prop-2.10", {}, c.bg() == 3, "iff", rhs, {{"bg(G)", "bg"}});
}

std::string applicable_prop_2_11(GraphCtx& c) {
  if (!c.connected()) return "requires a connected graph";
  if (*c.dia() > 2) return "requires diameter at most 2";
  return "";
}

void eval_prop_2_11(GraphCtx& c, std::vector<CheckResult>& out) {
  emit_row(out, c, "prop-2.11", {}, c.b(), "==", c.bg(), {{"b(G)", "b"}, {"bg(G)", "bg"}});
}

std::string applicable_lemma_2_12(GraphCtx& c) {
  if (c.n() > 6) return "sampled check capped at 6 vertices";
  if (complement(c.graph()).edge_count() == 0) return "complete graph: no proper spanning supergraph";
  return "";
}

void eval_lemma_2_12(GraphCtx& c, std::vector<CheckResult>& out) {
  std::vector<Edge> missing = complement(c.graph()).edges();
  std::optional<Witness> first_bad;
  // Each supergraph S of G has G as a spanning subgraph, so both game values
  // of S must stay at or below those of G.
  auto violates = [&](const Graph& s, const std::string& added) {
    Solver sv(s);
    int sbg = sv.game_value({}, Player::Burner);
    int sbgp = sv.game_value({}, Player::Staller);
    bool bad = sbg > c.bg() || sbgp > c.bgp();
    if (bad && !first_bad) {
      Witness w;
      Player p = sbg > c.bg() ? Player::Burner : Player::Staller;
      w.items.push_back(c.witness_item("value of G", p == Player::Burner ? "bg" : "bg-prime"));
      w.items.push_back(game_item(s, "value of G plus " + added, {}, p));
      w.note = "added edges: " + added;
      first_bad = std::move(w);
    }
    return bad;
  };

  long long single_bad = 0;
  for (auto [u, v] : missing)
    if (violates(add_edge(c.graph(), u, v), edge_text(u, v))) ++single_bad;
  CheckResult r1 = plain_row("lemma-2.12", c.g6(),
                             {{"part", "single-edge"}, {"supergraphs", std::to_string(missing.size())}},
                             single_bad, "==", 0);
  if (r1.status == CheckStatus::Fail) r1.witness = first_bad;
  out.push_back(std::move(r1));

  auto with_edges = [&](std::uint64_t mask) {
    Graph s = c.graph();
    std::string added;
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (mask >> i & 1) {
        s = add_edge(s, missing[i].first, missing[i].second);
        if (!added.empty()) added += '+';
        added += edge_text(missing[i].first, missing[i].second);
      }
    return std::pair{s, added};
  };

  first_bad.reset();
  long long multi_bad = 0;
  long long count = 0;
  std::string mode;
  if (c.n() <= 4) {
    mode = "exhaustive";
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << missing.size()); ++mask) {
      auto [s, added] = with_edges(mask);
      if (violates(s, added)) ++multi_bad;
      ++count;
    }
  } else {
    mode = "seeded";
    std::mt19937_64 rng(canonical_word(c.graph()) ^ kSubgraphSalt);
    for (int i = 0; i < 200; ++i) {
      std::uint64_t mask = rng() & ((std::uint64_t{1} << missing.size()) - 1);
      auto [s, added] = with_edges(mask);
      if (violates(s, added)) ++multi_bad;
      ++count;
    }
  }
  CheckResult r2 = plain_row(
      "lemma-2.12", c.g6(),
      {{"part", "multi-edge"}, {"mode", mode}, {"supergraphs", std::to_string(count)}}, multi_bad,
      "==", 0);
  if (r2.status == CheckStatus::Fail) r2.witness = first_bad;
  out.push_back(std::move(r2));
}

std::string applicable_order_2(GraphCtx& c) {
  return c.n() >= 2 ? "" : "needs at least 2 vertices";
}

void eval_prop_4_1(GraphCtx& c, std::vector<CheckResult>& out) {
  long long sum = static_cast<long long>(c.bg()) + c.co().bg();
  WitnessPlan wit{{"bg(G)", "bg"}, {"bg of complement", "co:bg"}};
  emit_row(out, c, "prop-4.1", {{"part", "lower"}}, 4, "<=", sum, wit);
  emit_row(out, c, "prop-4.1", {{"part", "upper"}}, sum, "<=", c.n() + 2LL, wit);
}

std::string applicable_lemma_4_2(GraphCtx& c) {
  if (c.connected()) return "requires a disconnected graph";
  for (const VertexSet& comp : components(c.graph()))
    if (comp.count() < 3) return "requires every component to have order at least 3";
  return "";
}

void eval_lemma_4_2(GraphCtx& c, std::vector<CheckResult>& out) {
  emit_row(out, c, "lemma-4.2", {{"part", "bg"}}, 2LL * c.bg(), "<=", c.n() + 1LL,
           {{"bg(G)", "bg"}});
  emit_row(out, c, "lemma-4.2", {{"part", "bgp"}}, 2LL * c.bgp(), "<=", c.n() + 2LL,
           {{"bg'(G)", "bg-prime"}});
}

void eval_prop_4_3(GraphCtx& c, std::vector<CheckResult>& out) {
  long long prod = static_cast<long long>(c.bg()) * c.co().bg();
  WitnessPlan wit{{"bg(G)", "bg"}, {"bg of complement", "co:bg"}};
  emit_row(out, c, "prop-4.3", {{"part", "lower"}}, 4, "<=", prod, wit);
  emit_row(out, c, "prop-4.3", {{"part", "upper"}}, prod, "<=", 2LL * c.n(), wit);
}

void eval_prop_4_4(GraphCtx& c, std::vector<CheckResult>& out) {
  int kmax = std::max(1, max_finite_distance(c));
  long long best_bg = LLONG_MAX, best_bgp = LLONG_MAX;
  int kstar_bg = 1, kstar_bgp = 1;
  for (int k = 1; k <= kmax; ++k) {
    long long gk = c.gamma(k);
    if (2 * gk + k - 1 < best_bg) {
      best_bg = 2 * gk + k - 1;
      kstar_bg = k;
    }
    if (2 * gk + k < best_bgp) {
      best_bgp = 2 * gk + k;
      kstar_bgp = k;
    }
  }
  emit_row(out, c, "prop-4.4", {{"part", "bg"}, {"kstar", std::to_string(kstar_bg)}}, c.bg(),
           "<=", best_bg, {{"bg(G)", "bg"}});
  emit_row(out, c, "prop-4.4", {{"part", "bgp"}, {"kstar", std::to_string(kstar_bgp)}}, c.bgp(),
           "<=", best_bgp, {{"bg'(G)", "bg-prime"}});
}

void eval_prop_4_5(GraphCtx& c, std::vector<CheckResult>& out) {
  int kmax = std::max(1, *c.dia());
  long long best_bg = LLONG_MAX, best_bgp = LLONG_MAX;
  int kstar_bg = 1, kstar_bgp = 1;
  for (int k = 1; k <= kmax; ++k) {
    long long gk = c.gamma(k);
    if (gk + 3LL * k < best_bg) {
      best_bg = gk + 3LL * k;
      kstar_bg = k;
    }
    if (gk + 3LL * k + 1 < best_bgp) {
      best_bgp = gk + 3LL * k + 1;
      kstar_bgp = k;
    }
  }
  emit_row(out, c, "prop-4.5", {{"part", "bg"}, {"kstar", std::to_string(kstar_bg)}}, c.bg(),
           "<=", best_bg, {{"bg(G)", "bg"}});
  emit_row(out, c, "prop-4.5", {{"part", "bgp"}, {"kstar", std::to_string(kstar_bgp)}}, c.bgp(),
           "<=", best_bgp, {{"bg'(G)", "bg-prime"}});
}

void eval_prop_4_6(GraphCtx& c, std::vector<CheckResult>& out) {
  long long sum = static_cast<long long>(c.bgp()) + c.co().bgp();
  WitnessPlan wit{{"bg'(G)", "bg-prime"}, {"bg' of complement", "co:bg-prime"}};
  emit_row(out, c, "prop-4.6", {{"part", "lower"}}, 4, "<=", sum, wit);
  emit_row(out, c, "prop-4.6", {{"part", "upper"}}, sum, "<=", c.n() + 2LL, wit);
}

std::string applicable_prop_4_7(GraphCtx& c) {
  return c.n() >= 6 ? "" : "needs at least 6 vertices";
}

void eval_prop_4_7(GraphCtx& c, std::vector<CheckResult>& out) {
  long long prod = static_cast<long long>(c.bgp()) * c.co().bgp();
  WitnessPlan wit{{"bg'(G)", "bg-prime"}, {"bg' of complement", "co:bg-prime"}};
  emit_row(out, c, "prop-4.7", {{"part", "lower"}}, 8, "<=", prod, wit);
  emit_row(out, c, "prop-4.7", {{"part", "upper"}}, prod, "<=", 3LL * c.n() - 6, wit);
}

std::string applicable_both_connected(GraphCtx& c) {
  if (c.n() < 3) return "needs at least 3 vertices";
  if (!c.connected()) return "requires a connected graph";
  if (!c.co().connected()) return "requires a connected complement";
  return "";
}

void eval_cor_4_x(GraphCtx& c, std::vector<CheckResult>& out) {
  long long prod = static_cast<long long>(c.bg()) * c.co().bg();
  emit_row(out, c, "cor-4.x", {}, prod, "<=", c.n() + 18LL,
           {{"bg(G)", "bg"}, {"bg of complement", "co:bg"}});
}

void eval_cor_4_y(GraphCtx& c, std::vector<CheckResult>& out) {
  long long prod = static_cast<long long>(c.bgp()) * c.co().bgp();
  emit_row(out, c, "cor-4.y", {}, prod, "<=", c.n() + 21LL,
           {{"bg'(G)", "bg-prime"}, {"bg' of complement", "co:bg-prime"}});
}

constexpr std::uint64_t kTreeCap = 200000;

std::string applicable_thm_5_1(GraphCtx& c) {
  if (!c.connected()) return "requires a connected graph";
  if (spanning_tree_count(c.graph()) > kTreeCap)
    return "spanning tree enumeration capped at 200000";
  return "";
}

void eval_thm_5_1(GraphCtx& c, std::vector<CheckResult>& out) {
  int best = INT_MAX;
  std::optional<Graph> best_tree;
  std::uint64_t count = 0;
  for_each_spanning_tree(c.graph(), kTreeCap, [&](const Graph& t) {
    ++count;
    int v = burning_number(t).value;
    if (v < best) {
      best = v;
      best_tree = t;
    }
  });
  CheckResult r = plain_row("thm-5.1", c.g6(), {{"trees", std::to_string(count)}}, best,
                            "==", c.b());
  if (r.status == CheckStatus::Fail) {
    Witness w;
    w.items.push_back(c.witness_item("b(G)", "b"));
    if (best_tree) w.items.push_back(burn_item(*best_tree, "b of best spanning tree"));
    r.witness = std::move(w);
  }
  out.push_back(std::move(r));
}

std::string applicable_lemma_5_5(GraphCtx& c) {
  if (c.n() < 2) return "needs at least 2 vertices";
  if (!c.connected() || c.graph().edge_count() != c.n() - 1) return "requires a tree";
  return "";
}

void eval_lemma_5_5(GraphCtx& c, std::vector<CheckResult>& out) {
  BipartiteSquarePair pair = bipartite_square_pair(c.graph());
  long long bh = burning_number(pair.h).value;
  CheckResult r = plain_row("lemma-5.5-inner", c.g6(),
                            {{"class-size", std::to_string(pair.x.count())}}, c.bsq(), "<=",
                            bh + 1);
  if (r.status == CheckStatus::Fail) {
    Witness w;
    w.items.push_back(c.sq().witness_item("b of the square", "b"));
    w.items.push_back(burn_item(pair.h, "b of the half square"));
    r.witness = std::move(w);
  }
  out.push_back(std::move(r));
}

std::string applicable_any(GraphCtx&) { return ""; }

void eval_burner_only_vs_b(GraphCtx& c, std::vector<CheckResult>& out) {
  CheckResult r = plain_row("burner-only-vs-b", c.g6(), {}, c.burner_only(), "==", c.b());
  r.note = r.status == CheckStatus::Pass
               ? "exploratory comparison, not a claimed identity"
               : "exploratory comparison: the solitary game and the burning number differ here";
  r.status = CheckStatus::Pass;
  r.witness.reset();
  out.push_back(std::move(r));
}

std::vector<CheckDef> build_catalog() {
  return {
      {"prop-2.1",
       "b(G) <= bg(G) <= min{CL(G), 2 b(G^2) - 1} and b(G) <= bg'(G) <= min{CL(G), 2 b(G^2)} for "
       "connected G",
       need_connected, eval_prop_2_1},
      {"prop-2.2",
       "bg(G) <= rad(G) + 1 and bg'(G) <= min{rad(G) + 2, diam(G) + 1} for connected G",
       need_connected, eval_prop_2_2},
      {"prop-2.3",
       "Delta(G) <= n - 2 implies bg(G) <= n - Delta(G); Delta(G) <= n - 3 implies bg'(G) <= n - "
       "Delta(G)",
       applicable_prop_2_3, eval_prop_2_3},
      {"thm-2.4",
       "continuation principle: A subset of B implies the Burner-start value from B is at most "
       "the value from A",
       applicable_sampled, eval_thm_2_4},
      {"prop-2.6", "|bg(G) - bg'(G)| <= 1 for connected G", need_connected, eval_prop_2_6},
      {"thm-2.7",
       "bg(G) <= bg(G - e) <= bg(G) + 2 and bg'(G) <= bg'(G - e) <= bg'(G) + 2 for connected G "
       "and every edge e",
       applicable_thm_2_7, eval_thm_2_7},
      {"prop-2.9",
       "for connected G: bg = 1 iff G = K_1; bg' = 1 iff G = K_1; bg = 2 iff G != K_1 and "
       "Delta >= n - 2; bg' = 2 iff G != K_1 and delta >= n - 2",
       need_connected, eval_prop_2_9},
      {"prop-2.10",
       "for connected G: bg = 3 iff Delta <= n - 3 and some v has every vertex outside N[v] "
       "adjacent to all but at most one vertex outside N_2[v]",
       need_connected, eval_prop_2_10},
      {"prop-2.11", "diam(G) <= 2 implies b(G) = bg(G)", applicable_prop_2_11, eval_prop_2_11},
      {"lemma-2.12",
       "if H is a spanning subgraph of G then bg(G) <= bg(H) and bg'(G) <= bg'(H), checked over "
       "edge-supersets of the graph",
       applicable_lemma_2_12, eval_lemma_2_12},
      {"prop-4.1", "4 <= bg(G) + bg of the complement <= n + 2 for n >= 2", applicable_order_2,
       eval_prop_4_1},
      {"lemma-4.2",
       "G disconnected with every component of order >= 3: 2 bg(G) <= n + 1 and 2 bg'(G) <= n + 2",
       applicable_lemma_4_2, eval_lemma_4_2},
      {"prop-4.3", "4 <= bg(G) * bg of the complement <= 2n for n >= 2", applicable_order_2,
       eval_prop_4_3},
      {"prop-4.4",
       "bg(G) <= min over k of (2 gamma_k(G) + k - 1) and bg'(G) <= min over k of (2 gamma_k(G) "
       "+ k)",
       applicable_any, eval_prop_4_4},
      {"prop-4.5",
       "for connected G: bg(G) <= min over k of (gamma_k(G) + 3k) and bg'(G) <= min over k of "
       "(gamma_k(G) + 3k + 1)",
       need_connected, eval_prop_4_5},
      {"prop-4.6", "4 <= bg'(G) + bg' of the complement <= n + 2 for n >= 2", applicable_order_2,
       eval_prop_4_6},
      {"prop-4.7", "8 <= bg'(G) * bg' of the complement <= 3n - 6 for n >= 6",
       applicable_prop_4_7, eval_prop_4_7},
      {"cor-4.x",
       "bg(G) * bg of the complement <= n + 18 when G and its complement are connected, n >= 3",
       applicable_both_connected, eval_cor_4_x},
      {"cor-4.y",
       "bg'(G) * bg' of the complement <= n + 21 when G and its complement are connected, n >= 3",
       applicable_both_connected, eval_cor_4_y},
      {"thm-5.1", "for connected G, b(G) equals the minimum of b(T) over spanning trees T",
       applicable_thm_5_1, eval_thm_5_1},
      {"lemma-5.5-inner",
       "for a tree T with half square H on the smaller partite class, b(T^2) <= b(H) + 1",
       applicable_lemma_5_5, eval_lemma_5_5},
      {"burner-only-vs-b",
       "exploratory: the Burner-only game value against the classical burning number",
       applicable_any, eval_burner_only_vs_b},
  };
}

}  // namespace

const std::vector<CheckDef>& per_graph_checks() {
  static const std::vector<CheckDef> defs = build_catalog();
  return defs;
}

std::vector<CheckResult> run_checks_on_graph(const Graph& g, const std::vector<std::string>& ids) {
  const auto& defs = per_graph_checks();
  for (const std::string& id : ids) {
    bool known = std::any_of(defs.begin(), defs.end(),
                             [&](const CheckDef& d) { return d.id == id; });
    if (!known) throw std::invalid_argument("unknown check id: " + id);
  }
  GraphCtx c(g);
  std::vector<CheckResult> out;
  for (const CheckDef& def : defs) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), def.id) == ids.end()) continue;
    std::string reason = def.applicable(c);
    if (!reason.empty()) {
      CheckResult r;
      r.check_id = def.id;
      r.graph6 = c.g6();
      r.relation = "<=";
      r.status = CheckStatus::Skip;
      r.note = std::move(reason);
      out.push_back(std::move(r));
      continue;
    }
    def.evaluate(c, out);
  }
  return out;
}

std::vector<CheckResult> family_sweep(const std::string& fam, int lo, int hi) {
  std::vector<CheckResult> out;
  auto window_rows = [&](const char* id, const Graph& g, int n, const BoundRow& wbg,
                         const BoundRow& wbgp) {
    Solver s(g);
    long long vbg = s.game_value({}, Player::Burner);
    long long vbgp = s.game_value({}, Player::Staller);
    std::string g6 = emit_graph6(g);
    struct Part {
      const char* name;
      long long lhs, rhs;
      Player starter;
    };
    Part parts[] = {
        {"bg-lower", wbg.lower, vbg, Player::Burner},
        {"bg-upper", vbg, wbg.upper, Player::Burner},
        {"bgp-lower", wbgp.lower, vbgp, Player::Staller},
        {"bgp-upper", vbgp, wbgp.upper, Player::Staller},
    };
    for (const Part& p : parts) {
      CheckResult r = plain_row(id, g6, {{"n", std::to_string(n)}, {"part", p.name}}, p.lhs,
                                "<=", p.rhs);
      if (r.status == CheckStatus::Fail) {
        Witness w;
        w.items.push_back(game_item(g, "exact value", {}, p.starter));
        r.witness = std::move(w);
      }
      out.push_back(std::move(r));
    }
  };

  if (fam == "path") {
    for (int n = std::max(lo, 1); n <= hi; ++n)
      window_rows("thm-5.3", family({FamilyKind::Path, n}), n, closed_forms("path-bg", n),
                  closed_forms("path-bg'", n));
  } else if (fam == "cycle") {
    for (int n = std::max(lo, 3); n <= hi; ++n)
      window_rows("thm-cycles", family({FamilyKind::Cycle, n}), n, closed_forms("cycle-bg", n),
                  closed_forms("cycle-bg'", n));
  } else if (fam == "hypercube") {
    for (int d = std::max(lo, 1); d <= hi; ++d) {
      Graph g = family({FamilyKind::Hypercube, d});
      Solver s(g);
      std::string g6 = emit_graph6(g);
      struct Part {
        const char* name;
        Player starter;
        const char* form;
      };
      for (const Part& p : {Part{"bg", Player::Burner, "hypercube-bg"},
                            Part{"bgp", Player::Staller, "hypercube-bg'"}}) {
        long long val = s.game_value({}, p.starter);
        CheckResult r = plain_row("thm-6.2", g6, {{"d", std::to_string(d)}, {"part", p.name}},
                                  val, "==", closed_forms(p.form, d).lower);
        if (r.status == CheckStatus::Fail) {
          Witness w;
          w.items.push_back(game_item(g, "exact value", {}, p.starter));
          r.witness = std::move(w);
        }
        out.push_back(std::move(r));
      }
    }
  } else {
    throw std::invalid_argument("unknown sweep family: " + fam);
  }
  return out;
}

std::vector<CheckResult> product_sweep() {
  struct Factor {
    const char* name;
    Graph g;
    int bg, bgp;
  };
  std::vector<Factor> factors;
  auto add = [&](const char* name, Graph g) {
    Solver s(g);
    int vbg = s.game_value({}, Player::Burner);
    int vbgp = s.game_value({}, Player::Staller);
    factors.push_back({name, std::move(g), vbg, vbgp});
  };
  add("K_2", family({FamilyKind::Complete, 2}));
  add("P_3", family({FamilyKind::Path, 3}));
  add("P_4", family({FamilyKind::Path, 4}));
  add("C_3", family({FamilyKind::Cycle, 3}));
  add("C_4", family({FamilyKind::Cycle, 4}));
  add("K_1_3", family({FamilyKind::Star, 3}));

  std::vector<CheckResult> out;
  auto bounded_rows = [&](const char* id, const Graph& product, const Params& base,
                          long long lo_bg, long long hi_bg, long long lo_bgp, long long hi_bgp,
                          const std::function<void(Witness&, Player)>& extra) {
    Solver s(product);
    long long vbg = s.game_value({}, Player::Burner);
    long long vbgp = s.game_value({}, Player::Staller);
    std::string g6 = emit_graph6(product);
    struct Part {
      const char* name;
      long long lhs, rhs;
      Player starter;
    };
    Part parts[] = {
        {"bg-lower", lo_bg, vbg, Player::Burner},
        {"bg-upper", vbg, hi_bg, Player::Burner},
        {"bgp-lower", lo_bgp, vbgp, Player::Staller},
        {"bgp-upper", vbgp, hi_bgp, Player::Staller},
    };
    for (const Part& p : parts) {
      Params params = base;
      params.emplace_back("part", p.name);
      CheckResult r = plain_row(id, g6, std::move(params), p.lhs, "<=", p.rhs);
      if (r.status == CheckStatus::Fail) {
        Witness w;
        w.items.push_back(game_item(product, "value of the product", {}, p.starter));
        if (extra) extra(w, p.starter);
        r.witness = std::move(w);
      }
      out.push_back(std::move(r));
    }
  };

  for (const Factor& fg : factors) {
    for (const Factor& fh : factors) {
      Params base{{"g", fg.name}, {"h", fh.name}};
      if (fg.g.order() * fh.g.order() <= 20) {
        Graph sp = strong_product(fg.g, fh.g);
        Graph cp = cartesian_product(fg.g, fh.g);
        Solver sc(cp);
        long long cp_bg = sc.game_value({}, Player::Burner);
        long long cp_bgp = sc.game_value({}, Player::Staller);
        bounded_rows("prop-6.1", sp, base, std::max(fg.bg, fh.bg), cp_bg,
                     std::max(fg.bgp, fh.bgp), cp_bgp, [&](Witness& w, Player p) {
                       w.items.push_back(game_item(cp, "value of the Cartesian product", {}, p));
                     });
      }
      if (fg.g.order() * (1 + fh.g.order()) <= 20) {
        long long bsq = burning_number(square(fg.g)).value;
        bounded_rows("prop-6.3", corona(fg.g, fh.g), base, 2 * bsq - 1, 2 * bsq, 2 * bsq - 1,
                     2 * bsq, [&](Witness& w, Player) {
                       w.items.push_back(burn_item(square(fg.g), "b of the square of g"));
                     });
      }
      if (fg.g.order() * fh.g.order() <= 20) {
        bool universal = false;
        for (int v = 0; v < fh.g.order(); ++v)
          if (fh.g.degree(v) == fh.g.order() - 1) universal = true;
        Graph lx = lexicographic_product(fg.g, fh.g);
        Params lex_base = base;
        lex_base.emplace_back("branch", universal ? "universal" : "no-universal");
        if (universal) {
          bounded_rows("prop-6.4", lx, lex_base, fg.bg, fg.bg + 1LL, fg.bgp, fg.bgp + 1LL,
                       [&](Witness& w, Player p) {
                         w.items.push_back(game_item(fg.g, "value of g", {}, p));
                       });
        } else {
          long long bsq = burning_number(square(fg.g)).value;
          bounded_rows("prop-6.4", lx, lex_base, 2 * bsq, 2 * bsq + 1, 2 * bsq, 2 * bsq + 1,
                       [&](Witness& w, Player) {
                         w.items.push_back(burn_item(square(fg.g), "b of the square of g"));
                       });
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_example_2_8(bool include_long_running) {
  std::vector<CheckResult> out;
  Figure1 fig = figure1_graph();
  std::string g6 = emit_graph6(fig.graph);
  std::vector<int> script{fig.u, fig.x, fig.y};
  int worst = verify_burner_script(fig.graph, {}, Player::Burner, script, 5);
  out.push_back(plain_row("ex-2.8", g6, {{"part", "script"}}, worst, "==", 5,
                          "Burner script u, x, y ends the game by round 5 against every Staller "
                          "line, and Staller can hold out that long"));

  bool can4 = Solver(fig.graph).can_finish_within({}, Player::Burner, 4);
  out.push_back(plain_row("ex-2.8", g6, {{"part", "lower"}}, can4 ? 1 : 0, "==", 0,
                          "no Burner strategy finishes within 4 rounds, so with the script bound "
                          "the Burner-start value is exactly 5"));

  Graph removed = remove_edge(fig.graph, fig.v, fig.w);
  std::string removed6 = emit_graph6(removed);
  if (include_long_running) {
    bool can6 = Solver(removed).can_finish_within({}, Player::Burner, 6);
    out.push_back(plain_row("ex-2.8", removed6, {{"part", "removed-lower"}}, can6 ? 1 : 0, "==",
                            0,
                            "no Burner strategy finishes the graph minus the v-w edge within 6 "
                            "rounds; the edge-deletion window caps its value at 5 + 2, pinning "
                            "it to exactly 7"));
  } else {
    CheckResult r;
    r.check_id = "ex-2.8";
    r.graph6 = removed6;
    r.params = {{"part", "removed-lower"}};
    r.relation = "==";
    r.status = CheckStatus::Skip;
    r.note =
        "long-running refutation skipped; the claimed values 5 and 7 are beyond full "
        "desk-scale verification until the horizon-6 search is run";
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckResult> check_example_5_2() {
  std::vector<CheckResult> out;
  Figure2 fig = figure2_graph();
  std::string g6 = emit_graph6(fig.graph);
  Solver s(fig.graph);
  long long vbg = s.game_value({}, Player::Burner);
  CheckResult r1 = plain_row("ex-5.2", g6, {{"part", "bg"}}, vbg, "==", 3);
  if (r1.status == CheckStatus::Fail) {
    Witness w;
    w.items.push_back(game_item(fig.graph, "exact value", {}, Player::Burner));
    r1.witness = std::move(w);
  }
  out.push_back(std::move(r1));

  int best = INT_MAX;
  std::optional<Graph> best_tree;
  std::uint64_t count = 0;
  for_each_spanning_tree(fig.graph, kTreeCap, [&](const Graph& t) {
    ++count;
    int v = game_value(t, {}, Player::Burner);
    if (v < best) {
      best = v;
      best_tree = t;
    }
  });
  CheckResult r2 = plain_row("ex-5.2", g6, {{"part", "spanning-trees"},
                                            {"trees", std::to_string(count)}},
                             best, ">=", 4,
                             "every spanning tree's Burner-start value exceeds the graph's");
  if (r2.status == CheckStatus::Fail && best_tree) {
    Witness w;
    w.items.push_back(game_item(*best_tree, "value of cheapest spanning tree", {}, Player::Burner));
    r2.witness = std::move(w);
  }
  out.push_back(std::move(r2));

  bool hyp = max_degree(fig.graph) <= fig.graph.order() - 3 &&
             characterize_3_hypothesis(fig.graph);
  out.push_back(plain_row("ex-5.2", g6, {{"part", "characterization"}}, hyp ? 1 : 0, "==", 1,
                          "the order-3 characterization confirms the value independently"));
  return out;
}

std::vector<std::pair<Edge, int>> edge_removal_gaps(const Graph& g, Player starter) {
  std::vector<std::pair<Edge, int>> out;
  int base = game_value(g, {}, starter);
  for (auto [u, v] : g.edges()) {
    int removed = game_value(remove_edge(g, u, v), {}, starter);
    out.push_back({{u, v}, removed - base});
  }
  return out;
}

std::vector<TreeGapRow> tree_gap_scan(int max_n, std::uint64_t tree_cap) {
  std::vector<TreeGapRow> out;
  for (int n = 3; n <= max_n; ++n) {
    CorpusSpec spec;
    spec.n = n;
    spec.connected_only = true;
    spec.dedup = true;
    enumerate_corpus(spec, [&](const Graph& g) {
      if (g.edge_count() == n - 1) return;  // a tree is its own only spanning tree
      if (spanning_tree_count(g) > tree_cap) return;
      int vbg = game_value(g, {}, Player::Burner);
      int best = INT_MAX;
      for_each_spanning_tree(g, tree_cap, [&](const Graph& t) {
        best = std::min(best, game_value(t, {}, Player::Burner));
      });
      if (best > vbg) out.push_back({emit_graph6(g), vbg, best});
    });
  }
  return out;
}

std::vector<std::string> all_check_ids() {
  std::vector<std::string> ids;
  for (const CheckDef& def : per_graph_checks()) ids.push_back(def.id);
  for (const char* extra : {"thm-5.3", "thm-cycles", "thm-6.2", "prop-6.1", "prop-6.3",
                            "prop-6.4", "ex-2.8", "ex-5.2"})
    ids.emplace_back(extra);
  return ids;
}

std::vector<std::string> coverage_manifest() {
  return {"2.1",  "2.2",  "2.3",     "2.4", "2.6", "2.7", "2.9", "2.10", "2.11", "2.12",
          "4.1",  "4.2",  "4.3",     "4.4", "4.5", "4.6", "4.7", "cor-4.x", "cor-4.y", "5.1",
          "5.2",  "5.3",  "cycles",  "5.5-inner", "6.1", "6.2", "6.3", "6.4", "ex-2.8"};
}

bool manifest_entry_covered(const std::string& entry) {
  std::vector<std::string> ids = all_check_ids();
  auto has = [&](const std::string& id) {
    return std::find(ids.begin(), ids.end(), id) != ids.end();
  };
  if (has(entry)) return true;
  for (const char* prefix : {"prop-", "thm-", "lemma-", "ex-", "cor-"})
    if (has(prefix + entry)) return true;
  if (entry == "cycles") return has("thm-cycles");
  return false;
}

}  // namespace burn
