#ifndef BURN_ENGINE_HPP
#define BURN_ENGINE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "burn/distance.hpp"
#include "burn/graph.hpp"
#include "burn/trace.hpp"

namespace burn {

// Open-addressing map from a burned-set word to a small count. A full vertex
// set is never memoized (those states return before lookup), so the all-ones
// word doubles as the empty-slot marker.
class MemoTable {
 public:
  MemoTable() { reset(); }
  void reset();

  // -1 when absent.
  int find(std::uint64_t key) const;
  void insert(std::uint64_t key, int value);
  std::size_t size() const { return count_; }

  template <typename Fn>
  void visit(Fn&& fn) const {
    for (std::size_t i = 0; i < keys_.size(); ++i)
      if (keys_[i] != kEmpty) fn(keys_[i], static_cast<int>(vals_[i]));
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  static std::size_t slot_of(std::uint64_t key, std::size_t mask);
  void grow();
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> vals_;
  std::size_t count_ = 0;
};

// Exact solver for the two-player burning game on one graph. Rounds run
// spread-then-select; the game ends the moment every vertex is burned, which
// may be directly after a spreading phase. Burner minimizes the round count,
// Staller maximizes, and values are memoized per (burned set, player to move)
// for the lifetime of the solver.
class Solver {
 public:
  explicit Solver(const Graph& g);

  // Rounds to finish from b0 under optimal play, starter selecting first.
  // b0 = V gives 0.
  int game_value(VertexSet b0, Player starter);

  // As game_value but round 1 has no spreading phase; b0 = V gives 0.
  // For spread(b0) != V this equals game_value(g, b, starter) for any b with
  // spread(b) = b0.
  int selection_first_value(VertexSet b0, Player starter);

  // Optimal line with lowest-index tie-breaking at every selection.
  std::pair<int, PlayTrace> principal_variation(VertexSet b0, Player starter);

  // Can Burner force the game to end within `rounds` more rounds? Uses its
  // own bounded memo plus a packing cutoff (unburnable-in-time vertices that
  // pairwise exceed twice the largest remaining selection radius each need a
  // selection of their own), so it reaches graphs the exact solver cannot.
  bool can_finish_within(VertexSet b0, Player starter, int rounds);

  // Worst case length over all Staller strategies when Burner plays `script`
  // on his turns (skipping to the lowest unburned vertex when a scripted
  // vertex is already burned). Lengths beyond `horizon` are truncated to
  // horizon + 1; throws std::invalid_argument if the script runs out on a
  // Burner turn at or before round `horizon`.
  int script_worst_case(VertexSet b0, Player starter, std::span<const int> script, int horizon);

  // One player makes every selection: pure minimization / maximization.
  // staller_only_value from the empty set is the cooling number.
  int burner_only_value(VertexSet b0);
  int staller_only_value(VertexSet b0);

  const Graph& graph() const { return g_; }

  std::vector<std::pair<VertexSet, int>> memo_entries(Player p) const;

 private:
  int value(std::uint64_t burned, int side);
  int solo_value(std::uint64_t burned, int side);
  bool finish_within(std::uint64_t burned, int side, int rounds);
  int script_walk(std::uint64_t burned, int side, int done, std::span<const int> script,
                  std::size_t pos, int horizon);
  std::uint64_t spread(std::uint64_t burned) const;
  bool packing_exceeds(std::uint64_t burned, int rounds);
  const DistanceMatrix& dm();

  Graph g_;
  int n_;
  std::uint64_t all_;
  std::array<std::uint64_t, 64> adj_{};
  MemoTable memo_[2];
  MemoTable solo_[2];
  std::vector<MemoTable> finish_memo_[2];  // indexed by rounds left
  std::unique_ptr<DistanceMatrix> dm_;
};

// Convenience wrappers constructing a throwaway solver.
int game_value(const Graph& g, VertexSet b0, Player starter);
int selection_first_value(const Graph& g, VertexSet b0, Player starter);
int burner_only_value(const Graph& g, VertexSet b0);
int staller_only_value(const Graph& g, VertexSet b0);
int cooling_number(const Graph& g);
int verify_burner_script(const Graph& g, VertexSet b0, Player starter,
                         std::span<const int> script, int horizon);

}  // namespace burn

#endif
