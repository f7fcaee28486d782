#include "burn/trace.hpp"

#include <sstream>
#include <stdexcept>

namespace burn {

std::string player_name(Player p) { return p == Player::Burner ? "burner" : "staller"; }

int replay_trace(const Graph& g, const PlayTrace& trace) {
  VertexSet burned = trace.initial;
  Player turn = trace.starter;
  const VertexSet all = g.vertices();
  if (burned == all && !trace.rounds.empty())
    throw std::invalid_argument("trace: rounds after a fully burned start");
  for (size_t r = 0; r < trace.rounds.size(); ++r) {
    const auto& round = trace.rounds[r];
    const std::string where = "trace round " + std::to_string(r + 1) + ": ";
    VertexSet sp = closed_neighborhood(g, burned, 1);
    if (sp - burned != round.spread_delta)
      throw std::invalid_argument(where + "recorded spread " + round.spread_delta.to_string() +
                                  " but rules give " + (sp - burned).to_string());
    burned = sp;
    if (burned == all) {
      if (round.selection)
        throw std::invalid_argument(where + "selection recorded after finishing spread");
      if (r + 1 != trace.rounds.size() || !trace.ends_after_spread)
        throw std::invalid_argument(where + "game over after spread but trace continues");
      return static_cast<int>(trace.rounds.size());
    }
    if (!round.selection)
      throw std::invalid_argument(where + "missing selection");
    auto [actor, v] = *round.selection;
    if (trace.alternating && actor != turn)
      throw std::invalid_argument(where + "actor " + player_name(actor) + ", expected " +
                                  player_name(turn));
    if (v < 0 || v >= g.order() || burned.contains(v))
      throw std::invalid_argument(where + "selected vertex " + std::to_string(v) +
                                  " is not selectable");
    burned = burned.with(v);
    turn = other(turn);
  }
  if (burned != all) throw std::invalid_argument("trace: final state leaves vertices unburned");
  if (trace.ends_after_spread)
    throw std::invalid_argument("trace: flagged spread-ending but last round selected");
  return static_cast<int>(trace.rounds.size());
}

std::string format_trace(const PlayTrace& trace) {
  std::ostringstream out;
  if (!trace.initial.empty()) out << "start burned " << trace.initial.to_string() << '\n';
  for (size_t r = 0; r < trace.rounds.size(); ++r) {
    const auto& round = trace.rounds[r];
    out << "round " << (r + 1) << ": spread " << round.spread_delta.to_string();
    if (round.selection)
      out << ", " << player_name(round.selection->first) << " burns " << round.selection->second;
    out << '\n';
  }
  return out.str();
}

}  // namespace burn
