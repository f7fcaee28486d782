#include "burn/spanning.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace burn {

namespace {

// Union-find over <= 64 vertices, small enough to copy per branch.
struct Dsu {
  std::array<std::int8_t, 64> parent;
  void init(int n) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = static_cast<std::int8_t>(i);
  }
  int find(int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = static_cast<std::int8_t>(b);
    return true;
  }
};

struct Enumerator {
  int n;
  std::vector<Edge> edges;
  const std::function<void(const Graph&)>* visit;
  std::vector<Edge> chosen;

  bool still_connected(const Dsu& dsu_in, size_t from) const {
    Dsu dsu = dsu_in;
    int comps = 0;
    for (int v = 0; v < n; ++v)
      if (dsu.find(v) == v) ++comps;
    for (size_t i = from; i < edges.size() && comps > 1; ++i)
      if (dsu.unite(edges[i].first, edges[i].second)) --comps;
    return comps == 1;
  }

  void run(Dsu dsu, size_t next, int picked) {
    if (picked == n - 1) {
      (*visit)(Graph(n, chosen));
      return;
    }
    // first edge whose endpoints are still separate
    size_t i = next;
    while (i < edges.size() && dsu.find(edges[i].first) == dsu.find(edges[i].second)) ++i;
    if (i == edges.size()) return;
    {
      Dsu with = dsu;
      with.unite(edges[i].first, edges[i].second);
      chosen.push_back(edges[i]);
      run(with, i + 1, picked + 1);
      chosen.pop_back();
    }
    if (still_connected(dsu, i + 1)) run(dsu, i + 1, picked);
  }
};

}  // namespace

std::uint64_t spanning_tree_count(const Graph& g) {
  int n = g.order();
  if (n == 1) return 1;
  // Laplacian with row/column 0 deleted, eliminated in long double.
  int m = n - 1;
  std::vector<long double> a(static_cast<size_t>(m) * static_cast<size_t>(m), 0.0L);
  for (int i = 0; i < m; ++i) {
    a[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(i)] =
        static_cast<long double>(g.degree(i + 1));
    for (int j = 0; j < m; ++j)
      if (i != j && g.adjacent(i + 1, j + 1))
        a[static_cast<size_t>(i) * static_cast<size_t>(m) + static_cast<size_t>(j)] = -1.0L;
  }
  long double det = 1.0L;
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    long double best = 0.0L;
    for (int row = col; row < m; ++row) {
      long double v = fabsl(a[static_cast<size_t>(row) * static_cast<size_t>(m) + static_cast<size_t>(col)]);
      if (v > best) best = v, pivot = row;
    }
    if (pivot < 0 || best < 1e-9L) return 0;
    if (pivot != col) {
      for (int j = 0; j < m; ++j)
        std::swap(a[static_cast<size_t>(pivot) * static_cast<size_t>(m) + static_cast<size_t>(j)],
                  a[static_cast<size_t>(col) * static_cast<size_t>(m) + static_cast<size_t>(j)]);
      det = -det;
    }
    long double p = a[static_cast<size_t>(col) * static_cast<size_t>(m) + static_cast<size_t>(col)];
    det *= p;
    for (int row = col + 1; row < m; ++row) {
      long double f = a[static_cast<size_t>(row) * static_cast<size_t>(m) + static_cast<size_t>(col)] / p;
      if (f == 0.0L) continue;
      for (int j = col; j < m; ++j)
        a[static_cast<size_t>(row) * static_cast<size_t>(m) + static_cast<size_t>(j)] -=
            f * a[static_cast<size_t>(col) * static_cast<size_t>(m) + static_cast<size_t>(j)];
    }
  }
  if (det < 0.5L) return 0;
  if (det >= static_cast<long double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(llroundl(det));
}

void for_each_spanning_tree(const Graph& g, std::uint64_t limit,
                            const std::function<void(const Graph&)>& visit) {
  if (!is_connected(g)) throw std::invalid_argument("spanning trees: graph is disconnected");
  std::uint64_t count = spanning_tree_count(g);
  if (count > limit)
    throw std::invalid_argument("spanning trees: count " + std::to_string(count) +
                                " exceeds limit " + std::to_string(limit));
  Enumerator e;
  e.n = g.order();
  e.edges = g.edges();
  e.visit = &visit;
  Dsu dsu;
  dsu.init(e.n);
  e.run(dsu, 0, 0);
}

std::vector<Graph> spanning_trees(const Graph& g, std::uint64_t limit) {
  std::vector<Graph> out;
  for_each_spanning_tree(g, limit, [&](const Graph& t) { out.push_back(t); });
  return out;
}

}  // namespace burn
