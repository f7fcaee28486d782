#ifndef BURN_FIGURES_HPP
#define BURN_FIGURES_HPP

#include "burn/graph.hpp"

namespace burn {

// 52-vertex gadget whose Burner-start value drops from 7 to 5 when the edge
// (v, w) is added: hub u with six pendant paths of length 4, edge u-v, a
// direct edge v-w in parallel with the detour v-v1-v2-v3-w, hub w with four
// pendant paths of length 2, path w-.-.-x, hub x with four pendant paths of
// length 2, path x-.-.-y.
struct Figure1 {
  Graph graph;
  int u, v, w, x, y;
};
Figure1 figure1_graph();

// 11-vertex graph with game burning number 3 while every spanning tree has
// value at least 4 (minimum over spanning trees is not a lower bound for the
// game value).
struct Figure2 {
  Graph graph;
  int v;  // the distinguished hub
};
Figure2 figure2_graph();

}  // namespace burn

#endif
