#include "burn/classical.hpp"

#include <algorithm>
#include <stdexcept>

#include "burn/distance.hpp"

namespace burn {

bool covers(const Graph& g, const BurningSequence& seq) {
  DistanceMatrix dm(g);
  int k = static_cast<int>(seq.sources.size());
  VertexSet covered;
  for (int i = 0; i < k; ++i) covered |= dm.ball(seq.sources[static_cast<size_t>(i)], k - 1 - i);
  return covered == g.vertices();
}

namespace {

struct CoverSearch {
  const DistanceMatrix* dm;
  int n;
  std::uint64_t all;
  int k;
  std::vector<int> chosen;

  bool packing_infeasible(std::uint64_t uncovered, int radius, int slots) const {
    int picked = 0;
    while (uncovered) {
      int v = std::countr_zero(uncovered);
      uncovered &= ~dm->ball(v, 2 * radius).bits();
      if (++picked > slots) return true;
    }
    return false;
  }

  bool dfs(int slot, std::uint64_t covered) {
    if (covered == all) {
      // pad out the sequence with unused vertices; they burn harmlessly
      std::uint64_t used = 0;
      for (int v : chosen) used |= std::uint64_t{1} << v;
      for (int i = slot; i < k; ++i) {
        int v = std::countr_zero(~used & all);
        chosen.push_back(v);
        used |= std::uint64_t{1} << v;
      }
      return true;
    }
    if (slot == k) return false;
    int radius = k - 1 - slot;
    if (packing_infeasible(all & ~covered, radius, k - slot)) return false;

    // useful candidates only, minus dominated ones; a candidate whose
    // marginal coverage sits inside another's can be swapped out of any
    // solution, so dropping it is safe
    std::vector<std::pair<std::uint64_t, int>> cand;
    for (int v = 0; v < n; ++v) {
      std::uint64_t marg = dm->ball(v, radius).bits() & ~covered;
      if (marg) cand.emplace_back(marg, v);
    }
    std::vector<std::pair<std::uint64_t, int>> keep;
    for (auto& [marg, v] : cand) {
      bool dominated = false;
      for (auto& [m2, v2] : cand)
        if (v2 != v && (marg & ~m2) == 0 && (m2 != marg || v2 < v)) { dominated = true; break; }
      if (!dominated) keep.emplace_back(marg, v);
    }
    std::stable_sort(keep.begin(), keep.end(), [](const auto& a, const auto& b) {
      return std::popcount(a.first) > std::popcount(b.first);
    });
    for (auto& [marg, v] : keep) {
      chosen.push_back(v);
      if (dfs(slot + 1, covered | marg)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

BurningResult burning_number(const Graph& g) {
  DistanceMatrix dm(g);
  CoverSearch search;
  search.dm = &dm;
  search.n = g.order();
  search.all = g.vertices().bits();
  for (int k = 1; k <= g.order(); ++k) {
    search.k = k;
    search.chosen.clear();
    if (search.dfs(0, 0)) return {k, BurningSequence{search.chosen}};
  }
  // unreachable: selecting every vertex burns the graph in n rounds
  throw std::logic_error("burning number search failed");
}

namespace {

struct DominationSearch {
  int n;
  std::uint64_t all;
  std::vector<std::uint64_t> balls;
  int best;

  int greedy() const {
    std::uint64_t covered = 0;
    int used = 0;
    while (covered != all) {
      std::uint64_t pick = 0;  // nonempty: every uncovered vertex covers itself
      for (int v = 0; v < n; ++v) {
        std::uint64_t marg = balls[static_cast<size_t>(v)] & ~covered;
        if (std::popcount(marg) > std::popcount(pick)) pick = marg;
      }
      covered |= pick;
      ++used;
    }
    return used;
  }

  void dfs(std::uint64_t covered, int used) {
    if (covered == all) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    // branch on the uncovered vertex with the fewest covering balls
    int pick_v = -1, pick_deg = n + 1;
    std::uint64_t uncovered = all & ~covered;
    std::uint64_t rest = uncovered;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int deg = std::popcount(balls[static_cast<size_t>(v)]);
      if (deg < pick_deg) pick_deg = deg, pick_v = v;
    }
    std::vector<std::pair<int, int>> order;
    for (int c : VertexSet::from_bits(balls[static_cast<size_t>(pick_v)]))
      order.emplace_back(-std::popcount(balls[static_cast<size_t>(c)] & uncovered), c);
    std::stable_sort(order.begin(), order.end());
    for (auto [neg, c] : order) dfs(covered | balls[static_cast<size_t>(c)], used + 1);
  }
};

}  // namespace

int gamma_k(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("gamma_k needs k >= 1");
  DistanceMatrix dm(g);
  DominationSearch s;
  s.n = g.order();
  s.all = g.vertices().bits();
  s.balls.resize(static_cast<size_t>(s.n));
  for (int v = 0; v < s.n; ++v) s.balls[static_cast<size_t>(v)] = dm.ball(v, k).bits();
  s.best = s.greedy();
  s.dfs(0, 0);
  return s.best;
}

BipartiteSquarePair bipartite_square_pair(const Graph& t) {
  int n = t.order();
  if (!is_connected(t) || t.edge_count() != n - 1)
    throw std::invalid_argument("bipartite_square_pair needs a tree");
  // on one vertex the smaller partite set is empty and has no induced subgraph
  if (n < 2) throw std::invalid_argument("bipartite_square_pair needs a tree on >= 2 vertices");
  DistanceMatrix dm(t);
  VertexSet even, odd;
  for (int v = 0; v < n; ++v) {
    if (*dm.at(0, v) % 2 == 0) even |= VertexSet::single(v);
    else odd |= VertexSet::single(v);
  }
  VertexSet x;
  if (even.count() < odd.count()) x = even;
  else if (odd.count() < even.count()) x = odd;
  else x = even;  // tie goes to vertex 0's class
  Graph sq = square(t);
  std::vector<int> index_map = x.to_vector();
  std::vector<Edge> es;
  for (size_t i = 0; i < index_map.size(); ++i)
    for (size_t j = i + 1; j < index_map.size(); ++j)
      if (sq.adjacent(index_map[i], index_map[j]))
        es.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return {Graph(static_cast<int>(index_map.size()), es), x, index_map};
}

}  // namespace burn
