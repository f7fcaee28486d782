#ifndef BURN_GRAPH_HPP
#define BURN_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "burn/vertex_set.hpp"

namespace burn {

using Edge = std::pair<int, int>;

// Simple undirected graph on 1..64 vertices, one adjacency mask per vertex.
// Immutable after construction; the transforms below return new graphs.
class Graph {
 public:
  // Throws std::invalid_argument on out-of-range n, endpoint >= n, or a loop.
  // Duplicate edges collapse.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return rows_[static_cast<size_t>(v)]; }
  bool adjacent(int u, int v) const { return rows_[static_cast<size_t>(u)].contains(v); }
  int degree(int v) const { return rows_[static_cast<size_t>(v)].count(); }

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> rows_;
};

Graph make_graph(int n, const std::vector<Edge>& edges);

Graph complement(const Graph& g);
// Same vertex set, adjacency at distance <= 2 in g.
Graph square(const Graph& g);
// Throw std::invalid_argument if the edge is absent / present.
Graph remove_edge(const Graph& g, int u, int v);
Graph add_edge(const Graph& g, int u, int v);

// s together with every vertex at distance <= k of s; k = 0 returns s.
VertexSet closed_neighborhood(const Graph& g, VertexSet s, int k);

bool is_connected(const Graph& g);
// Vertex sets of connected components, ordered by lowest contained vertex.
std::vector<VertexSet> components(const Graph& g);

int max_degree(const Graph& g);
int min_degree(const Graph& g);

}  // namespace burn

#endif
