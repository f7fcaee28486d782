#ifndef BURN_GRAPH6_HPP
#define BURN_GRAPH6_HPP

#include <string>
#include <string_view>

#include "burn/graph.hpp"

namespace burn {

// graph6 line (optionally prefixed ">>graph6<<"); throws std::invalid_argument
// with a description on malformed input, including nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

// Plain text exchange format: first line "n m", then m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace burn

#endif
