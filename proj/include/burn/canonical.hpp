#ifndef BURN_CANONICAL_HPP
#define BURN_CANONICAL_HPP

#include <cstdint>
#include <string>

#include "burn/graph.hpp"

namespace burn {

// Isomorphism-complete canonical forms for small graphs (order <= 10,
// std::invalid_argument above), found by brute-force permutation search
// pruned by vertex invariant classes.

// Upper-triangle adjacency bits of the canonical labeling, packed into one
// word; two graphs are isomorphic iff (order, word) coincide.
std::uint64_t canonical_word(const Graph& g);

// Byte string [order][8-byte big-endian word]; lexicographic order on these
// strings groups by order first.
std::string canonical_form(const Graph& g);

// The canonically labeled copy itself (the class representative emitted by
// deduplicating enumeration).
Graph canonical_graph(const Graph& g);

Graph graph_from_canonical_word(int n, std::uint64_t word);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace burn

#endif
