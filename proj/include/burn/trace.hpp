#ifndef BURN_TRACE_HPP
#define BURN_TRACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

enum class Player { Burner, Staller };

constexpr Player other(Player p) {
  return p == Player::Burner ? Player::Staller : Player::Burner;
}

std::string player_name(Player p);

struct GameState {
  VertexSet burned;
  Player to_move;
};

// One game round: the spreading phase's newly burned vertices, then the
// selection if one happened. The final round has no selection exactly when
// the spread alone finished the graph.
struct TraceRound {
  VertexSet spread_delta;
  std::optional<std::pair<Player, int>> selection;
};

struct PlayTrace {
  VertexSet initial;
  Player starter = Player::Burner;
  std::vector<TraceRound> rounds;
  bool ends_after_spread = false;
  // Two-player traces alternate actors from `starter`; single-player lines
  // (burner-only / staller-only certificates) set this false and replay
  // skips the alternation check.
  bool alternating = true;
};

// Replays the trace against the graph's rules, throwing std::invalid_argument
// on any inconsistency (wrong spread delta, burned selection, wrong actor,
// unfinished end state); returns the number of rounds.
int replay_trace(const Graph& g, const PlayTrace& trace);

std::string format_trace(const PlayTrace& trace);

}  // namespace burn

#endif
