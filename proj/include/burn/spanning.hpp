#ifndef BURN_SPANNING_HPP
#define BURN_SPANNING_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

// Matrix-tree count (Laplacian minor determinant). Exact for the magnitudes
// the enumerator accepts; saturates at uint64 max far above any usable cap.
// Disconnected graphs count 0.
std::uint64_t spanning_tree_count(const Graph& g);

// Visits every spanning tree exactly once (include/exclude on the first
// undecided edge, pruning exclusions that disconnect). Throws
// std::invalid_argument if g is disconnected or the matrix-tree count
// exceeds limit, before visiting anything.
void for_each_spanning_tree(const Graph& g, std::uint64_t limit,
                            const std::function<void(const Graph&)>& visit);

std::vector<Graph> spanning_trees(const Graph& g, std::uint64_t limit);

}  // namespace burn

#endif
