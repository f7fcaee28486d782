#ifndef BURN_DISTANCE_HPP
#define BURN_DISTANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

// All-pairs shortest-path distances. Unreachable pairs surface as an empty
// optional, never as a sentinel integer, so distance arithmetic on a
// disconnected pair cannot compile silently.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int order() const { return n_; }

  std::optional<int> at(int u, int v) const {
    std::int8_t d = raw(u, v);
    if (d < 0) return std::nullopt;
    return static_cast<int>(d);
  }

  // min over t in s of d(v, t); nullopt if s is empty or unreachable.
  std::optional<int> to_set(int v, VertexSet s) const;

  std::optional<int> eccentricity(int v) const;
  std::optional<int> radius() const;
  std::optional<int> diameter() const;

  // Vertices within distance k of v (closed ball); k >= order() clamps.
  VertexSet ball(int v, int k) const;

 private:
  std::int8_t raw(int u, int v) const {
    return d_[static_cast<size_t>(u) * static_cast<size_t>(n_) + static_cast<size_t>(v)];
  }
  int n_;
  std::vector<std::int8_t> d_;                 // -1 = unreachable
  std::vector<std::vector<VertexSet>> balls_;  // balls_[v][k], k <= n_
};

std::optional<int> eccentricity(const Graph& g, int v);
std::optional<int> radius(const Graph& g);
std::optional<int> diameter(const Graph& g);

}  // namespace burn

#endif
