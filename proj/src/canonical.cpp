#include "burn/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace burn {

namespace {

constexpr int kMaxOrder = 10;

struct Search {
  const Graph* g;
  int n;
  long total_bits;
  std::vector<std::vector<int>> groups;  // invariant classes, members ascending
  std::vector<int> pos_group;            // class owning each position
  std::array<int, kMaxOrder> chosen{};
  std::uint64_t used = 0;
  std::uint64_t best = 0;
  std::array<int, kMaxOrder> best_perm{};
  bool found = false;

  void dfs(int p, std::uint64_t prefix) {
    if (p == n) {
      if (!found || prefix < best) {
        found = true;
        best = prefix;
        std::copy_n(chosen.begin(), static_cast<size_t>(n), best_perm.begin());
      }
      return;
    }
    long bits_after = static_cast<long>(p + 1) * p / 2;
    for (int a : groups[static_cast<size_t>(pos_group[static_cast<size_t>(p)])]) {
      if ((used >> a) & 1) continue;
      std::uint64_t block = 0;
      for (int q = 0; q < p; ++q)
        block = (block << 1) | (g->adjacent(chosen[static_cast<size_t>(q)], a) ? 1u : 0u);
      std::uint64_t prefix2 = (prefix << p) | block;
      if (found && prefix2 > (best >> (total_bits - bits_after))) continue;
      chosen[static_cast<size_t>(p)] = a;
      used |= std::uint64_t{1} << a;
      dfs(p + 1, prefix2);
      used &= ~(std::uint64_t{1} << a);
    }
  }
};

// (degree, sorted neighbor degrees): isomorphism-invariant, so restricting the
// permutation search to maps that respect the sorted class order is complete.
std::vector<std::vector<int>> invariant_groups(const Graph& g, std::vector<int>& pos_group) {
  int n = g.order();
  std::vector<std::pair<std::vector<int>, int>> keyed;
  keyed.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key;
    key.push_back(g.degree(v));
    std::vector<int> nd;
    for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    key.insert(key.end(), nd.begin(), nd.end());
    keyed.emplace_back(std::move(key), v);
  }
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<std::vector<int>> groups;
  for (int i = 0; i < n; ++i) {
    if (i == 0 || keyed[static_cast<size_t>(i)].first != keyed[static_cast<size_t>(i - 1)].first)
      groups.emplace_back();
    groups.back().push_back(keyed[static_cast<size_t>(i)].second);
  }
  pos_group.clear();
  for (size_t gi = 0; gi < groups.size(); ++gi)
    pos_group.insert(pos_group.end(), groups[gi].size(), static_cast<int>(gi));
  return groups;
}

}  // namespace

std::uint64_t canonical_word(const Graph& g) {
  if (g.order() > kMaxOrder)
    throw std::invalid_argument("canonical form limited to order <= " +
                                std::to_string(kMaxOrder));
  Search s;
  s.g = &g;
  s.n = g.order();
  s.total_bits = static_cast<long>(s.n) * (s.n - 1) / 2;
  s.groups = invariant_groups(g, s.pos_group);
  s.dfs(0, 0);
  return s.best;
}

std::string canonical_form(const Graph& g) {
  std::uint64_t w = canonical_word(g);
  std::string out;
  out.push_back(static_cast<char>(g.order()));
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<char>((w >> (8 * i)) & 0xff));
  return out;
}

Graph graph_from_canonical_word(int n, std::uint64_t word) {
  long total = static_cast<long>(n) * (n - 1) / 2;
  std::vector<Edge> es;
  for (int p = 1; p < n; ++p) {
    long bits_after = static_cast<long>(p + 1) * p / 2;
    std::uint64_t block = (word >> (total - bits_after)) & ((std::uint64_t{1} << p) - 1);
    for (int q = 0; q < p; ++q)
      if ((block >> (p - 1 - q)) & 1) es.emplace_back(q, p);
  }
  return Graph(n, es);
}

Graph canonical_graph(const Graph& g) { return graph_from_canonical_word(g.order(), canonical_word(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_word(a) == canonical_word(b);
}

}  // namespace burn
