#include "burn/products.hpp"

#include <stdexcept>
#include <string>

namespace burn {

namespace {

int checked_order(long n, const char* what) {
  if (n > 64)
    throw std::invalid_argument(std::string(what) + ": order " + std::to_string(n) +
                                " exceeds 64-vertex cap");
  return static_cast<int>(n);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  int n = checked_order(static_cast<long>(g.order()) * h.order(), "cartesian product");
  int hn = h.order();
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < hn; ++v) {
      for (int v2 : h.neighbors(v))
        if (v < v2) es.emplace_back(u * hn + v, u * hn + v2);
      for (int u2 : g.neighbors(u))
        if (u < u2) es.emplace_back(u * hn + v, u2 * hn + v);
    }
  return Graph(n, es);
}

Graph strong_product(const Graph& g, const Graph& h) {
  int n = checked_order(static_cast<long>(g.order()) * h.order(), "strong product");
  int hn = h.order();
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < hn; ++v) {
      for (int v2 : h.neighbors(v))
        if (v < v2) es.emplace_back(u * hn + v, u * hn + v2);
      for (int u2 : g.neighbors(u))
        if (u < u2) {
          es.emplace_back(u * hn + v, u2 * hn + v);
          for (int v2 : h.neighbors(v)) es.emplace_back(u * hn + v, u2 * hn + v2);
        }
    }
  return Graph(n, es);
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  int n = checked_order(static_cast<long>(g.order()) * h.order(), "lexicographic product");
  int hn = h.order();
  std::vector<Edge> es;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < hn; ++v)
      for (int v2 : h.neighbors(v))
        if (v < v2) es.emplace_back(u * hn + v, u * hn + v2);
    for (int u2 : g.neighbors(u))
      if (u < u2)
        for (int v = 0; v < hn; ++v)
          for (int v2 = 0; v2 < hn; ++v2) es.emplace_back(u * hn + v, u2 * hn + v2);
  }
  return Graph(n, es);
}

Graph corona(const Graph& g, const Graph& h) {
  int gn = g.order(), hn = h.order();
  int n = checked_order(static_cast<long>(gn) * (1 + hn), "corona");
  std::vector<Edge> es = g.edges();
  for (int i = 0; i < gn; ++i) {
    int base = gn + i * hn;
    for (auto [a, b] : h.edges()) es.emplace_back(base + a, base + b);
    for (int v = 0; v < hn; ++v) es.emplace_back(i, base + v);
  }
  return Graph(n, es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = checked_order(static_cast<long>(g.order()) + h.order(), "disjoint union");
  std::vector<Edge> es = g.edges();
  for (auto [a, b] : h.edges()) es.emplace_back(g.order() + a, g.order() + b);
  return Graph(n, es);
}

}  // namespace burn
