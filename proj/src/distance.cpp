#include "burn/distance.hpp"

#include <algorithm>

namespace burn {

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.order()) {
  d_.assign(static_cast<size_t>(n_) * static_cast<size_t>(n_), -1);
  balls_.assign(static_cast<size_t>(n_), {});
  for (int s = 0; s < n_; ++s) {
    auto& balls = balls_[static_cast<size_t>(s)];
    balls.reserve(static_cast<size_t>(n_) + 1);
    VertexSet cur = VertexSet::single(s);
    balls.push_back(cur);
    d_[static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(s)] = 0;
    for (int dist = 1; dist <= n_; ++dist) {
      VertexSet next = cur;
      for (int v : cur) next |= g.neighbors(v);
      for (int v : next - cur)
        d_[static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(v)] =
            static_cast<std::int8_t>(dist);
      balls.push_back(next);
      cur = next;
    }
  }
}

std::optional<int> DistanceMatrix::to_set(int v, VertexSet s) const {
  std::optional<int> best;
  for (int t : s) {
    auto d = at(v, t);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

std::optional<int> DistanceMatrix::eccentricity(int v) const {
  int ecc = 0;
  for (int u = 0; u < n_; ++u) {
    std::int8_t d = raw(v, u);
    if (d < 0) return std::nullopt;
    ecc = std::max(ecc, static_cast<int>(d));
  }
  return ecc;
}

std::optional<int> DistanceMatrix::radius() const {
  std::optional<int> best;
  for (int v = 0; v < n_; ++v) {
    auto e = eccentricity(v);
    if (!e) return std::nullopt;
    if (!best || *e < *best) best = e;
  }
  return best;
}

std::optional<int> DistanceMatrix::diameter() const {
  std::optional<int> best;
  for (int v = 0; v < n_; ++v) {
    auto e = eccentricity(v);
    if (!e) return std::nullopt;
    if (!best || *e > *best) best = e;
  }
  return best;
}

VertexSet DistanceMatrix::ball(int v, int k) const {
  const auto& balls = balls_[static_cast<size_t>(v)];
  size_t i = std::min(static_cast<size_t>(std::max(k, 0)), balls.size() - 1);
  return balls[i];
}

std::optional<int> eccentricity(const Graph& g, int v) { return DistanceMatrix(g).eccentricity(v); }
std::optional<int> radius(const Graph& g) { return DistanceMatrix(g).radius(); }
std::optional<int> diameter(const Graph& g) { return DistanceMatrix(g).diameter(); }

}  // namespace burn
