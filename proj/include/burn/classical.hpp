#ifndef BURN_CLASSICAL_HPP
#define BURN_CLASSICAL_HPP

#include <vector>

#include "burn/graph.hpp"

namespace burn {

// Ordered sources x_1..x_k; x_i's fire has k-i rounds to spread, so the
// sequence certifies burning number <= k iff the union of N_{k-i}[x_i]
// covers the graph.
struct BurningSequence {
  std::vector<int> sources;
};

bool covers(const Graph& g, const BurningSequence& seq);

struct BurningResult {
  int value;
  BurningSequence sequence;
};

// Smallest k admitting a cover, by iterative deepening over k with a
// branch-and-bound cover search per k. Works on disconnected graphs.
BurningResult burning_number(const Graph& g);

// Smallest dominating set under distance-k closed balls (k >= 1).
int gamma_k(const Graph& g, int k);

// For a tree: 2-color it, take the smaller color class X (ties broken toward
// the class of vertex 0), and return the subgraph of t^2 induced on X.
// index_map[i] is the t-vertex behind h-vertex i. Throws if t is not a tree
// on at least 2 vertices (on K_1 the smaller class is empty).
struct BipartiteSquarePair {
  Graph h;
  VertexSet x;
  std::vector<int> index_map;
};
BipartiteSquarePair bipartite_square_pair(const Graph& t);

}  // namespace burn

#endif
