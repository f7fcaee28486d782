#include "burn/corpus.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "burn/canonical.hpp"
#include "burn/graph6.hpp"

namespace burn {

namespace {

void check_caps(const CorpusSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("corpus: order must be >= 1");
  if (spec.dedup) {
    if (spec.n > 8) throw std::invalid_argument("corpus: dedup enumeration capped at n = 8");
    if (spec.n == 8 && !spec.both_connected)
      throw std::invalid_argument("corpus: n = 8 is only available with both_connected + dedup");
  } else if (spec.n > 7) {
    throw std::invalid_argument("corpus: labeled enumeration capped at n = 7");
  }
}

}  // namespace

void enumerate_corpus(const CorpusSpec& spec, const std::function<void(const Graph&)>& yield) {
  check_caps(spec);
  int n = spec.n;
  int pairs = n * (n - 1) / 2;
  std::vector<Edge> pair_list;
  pair_list.reserve(static_cast<size_t>(pairs));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);

  std::unordered_set<std::uint64_t> seen;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    edges.clear();
    std::uint64_t rest = mask;
    while (rest) {
      int i = std::countr_zero(rest);
      rest &= rest - 1;
      edges.push_back(pair_list[static_cast<size_t>(i)]);
    }
    Graph g(n, edges);
    if ((spec.connected_only || spec.both_connected) && !is_connected(g)) continue;
    if (spec.both_connected && !is_connected(complement(g))) continue;
    if (spec.dedup) {
      std::uint64_t w = canonical_word(g);
      if (!seen.insert(w).second) continue;
      yield(graph_from_canonical_word(n, w));
    } else {
      yield(g);
    }
  }
}

std::vector<Graph> corpus_vector(const CorpusSpec& spec) {
  std::vector<Graph> out;
  enumerate_corpus(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void stream_to_file(const CorpusSpec& spec, const std::string& path) {
  std::vector<std::pair<std::string, std::string>> lines;  // (canonical form, graph6)
  enumerate_corpus(spec, [&](const Graph& g) {
    lines.emplace_back(canonical_form(g), emit_graph6(g));
  });
  std::sort(lines.begin(), lines.end());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("corpus: cannot open " + path + " for writing");
  for (const auto& [canon, g6] : lines) out << g6 << '\n';
  if (!out) throw std::runtime_error("corpus: write failure on " + path);
}

std::vector<Graph> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("corpus: cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("all_trees limited to 1 <= n <= 9");
  std::vector<Graph> cur = {Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& t : cur)
      for (int v = 0; v < t.order(); ++v) {
        auto es = t.edges();
        es.emplace_back(v, t.order());
        Graph grown(size, es);
        std::uint64_t w = canonical_word(grown);
        if (seen.insert(w).second) next.push_back(graph_from_canonical_word(size, w));
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace burn
