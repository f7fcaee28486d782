#ifndef BURN_PRODUCTS_HPP
#define BURN_PRODUCTS_HPP

#include "burn/graph.hpp"

namespace burn {

// Vertex (u, v) of a product maps to index u * h.order() + v. All throw
// std::invalid_argument if the result would exceed 64 vertices.

// (u,v) ~ (u',v') iff one coordinate equal, other adjacent.
Graph cartesian_product(const Graph& g, const Graph& h);
// Cartesian edges plus diagonal steps (both coordinates adjacent).
Graph strong_product(const Graph& g, const Graph& h);
// (u,v) ~ (u',v') iff u ~ u', or u = u' and v ~ v'.
Graph lexicographic_product(const Graph& g, const Graph& h);

// g followed by one copy of h per g-vertex (copy i at indices
// g.order() + i*h.order() ...), every copy vertex joined to its g-vertex.
Graph corona(const Graph& g, const Graph& h);

// g's vertices first, then h's.
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace burn

#endif
