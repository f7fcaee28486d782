#ifndef BURN_CORPUS_HPP
#define BURN_CORPUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

// Exhaustive labeled enumeration with optional filters; with dedup, exactly
// one representative per isomorphism class (the canonically labeled one,
// emitted when its class is first met in labeled order). Caps: n <= 7
// without dedup, n <= 8 with dedup, and n = 8 additionally demands
// both_connected (the only consumer at that size).
struct CorpusSpec {
  int n = 1;
  bool connected_only = false;
  bool both_connected = false;  // graph and complement connected
  bool dedup = false;
};

void enumerate_corpus(const CorpusSpec& spec, const std::function<void(const Graph&)>& yield);
std::vector<Graph> corpus_vector(const CorpusSpec& spec);

// graph6 lines sorted by canonical form (ties by graph6 text).
void stream_to_file(const CorpusSpec& spec, const std::string& path);
// Errors mention the 1-based line number of the offending entry.
std::vector<Graph> load_corpus(const std::string& path);

// All trees on exactly n vertices (n <= 9), one per isomorphism class,
// grown by leaf extension with canonical dedup.
std::vector<Graph> all_trees(int n);

}  // namespace burn

#endif
