#include "burn/graph.hpp"

#include <stdexcept>
#include <string>

namespace burn {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n) {
  if (n < 1 || n > 64)
    throw std::invalid_argument("graph order must be in 1..64, got " + std::to_string(n));
  rows_.assign(static_cast<size_t>(n), VertexSet());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for order " + std::to_string(n));
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows_[static_cast<size_t>(u)] |= VertexSet::single(v);
    rows_[static_cast<size_t>(v)] |= VertexSet::single(u);
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u)
    for (int v : rows_[static_cast<size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph(n, es);
}

Graph square(const Graph& g) {
  std::vector<Edge> es;
  int n = g.order();
  for (int u = 0; u < n; ++u) {
    VertexSet reach = closed_neighborhood(g, VertexSet::single(u), 2);
    for (int v : reach)
      if (u < v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

Graph remove_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || !g.adjacent(u, v))
    throw std::invalid_argument("remove_edge: (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not an edge");
  std::vector<Edge> es;
  for (auto [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) es.emplace_back(a, b);
  return Graph(g.order(), es);
}

Graph add_edge(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v || g.adjacent(u, v))
    throw std::invalid_argument("add_edge: (" + std::to_string(u) + "," + std::to_string(v) +
                                ") is not addable");
  auto es = g.edges();
  es.emplace_back(u, v);
  return Graph(g.order(), es);
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s, int k) {
  if (k < 0) throw std::invalid_argument("closed_neighborhood: negative radius");
  VertexSet cur = s;
  for (int step = 0; step < k; ++step) {
    VertexSet next = cur;
    for (int v : cur) next |= g.neighbors(v);
    if (next == cur) break;
    cur = next;
  }
  return cur;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet comp = closed_neighborhood(g, VertexSet::single(left.lowest()), g.order());
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return closed_neighborhood(g, VertexSet::single(0), g.order()) == g.vertices();
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace burn
