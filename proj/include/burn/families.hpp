#ifndef BURN_FAMILIES_HPP
#define BURN_FAMILIES_HPP

#include <string>
#include <string_view>

#include "burn/graph.hpp"

namespace burn {

enum class FamilyKind { Path, Cycle, Complete, Star, Empty, Hypercube };

struct FamilySpec {
  FamilyKind kind;
  int size;  // order, except Star = leaf count and Hypercube = dimension
};

// path:n (n>=1), cycle:n (n>=3), complete:n (n>=1), star:k = K_{1,k} with the
// center at vertex 0 (k>=1), empty:n (n>=1), hypercube:d (1<=d<=6, vertex
// index = coordinate tuple read as a binary number).
Graph family(FamilySpec spec);

// Grammar accepted by the CLI: "path:9", "star:3", or product terms
// "cartesian(path:3,cycle:4)", "strong(a,b)", "lex(a,b)", "corona(a,b)",
// "union(a,b)" with arbitrarily nested arguments.
Graph parse_family(std::string_view text);

std::string family_name(FamilyKind kind);

}  // namespace burn

#endif
