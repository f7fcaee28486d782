#include "burn/engine.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace burn {

void MemoTable::reset() {
  keys_.assign(1u << 10, kEmpty);
  vals_.assign(1u << 10, 0);
  count_ = 0;
}

std::size_t MemoTable::slot_of(std::uint64_t key, std::size_t mask) {
  std::uint64_t h = key;  // splitmix64 finalizer
  h += 0x9e3779b97f4a7c15ull;
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
  h ^= h >> 31;
  return static_cast<std::size_t>(h) & mask;
}

int MemoTable::find(std::uint64_t key) const {
  std::size_t mask = keys_.size() - 1;
  for (std::size_t i = slot_of(key, mask);; i = (i + 1) & mask) {
    if (keys_[i] == key) return vals_[i];
    if (keys_[i] == kEmpty) return -1;
  }
}

void MemoTable::insert(std::uint64_t key, int value) {
  if (count_ * 10 >= keys_.size() * 7) grow();
  std::size_t mask = keys_.size() - 1;
  for (std::size_t i = slot_of(key, mask);; i = (i + 1) & mask) {
    if (keys_[i] == kEmpty) {
      keys_[i] = key;
      vals_[i] = static_cast<std::uint8_t>(value);
      ++count_;
      return;
    }
    if (keys_[i] == key) {
      vals_[i] = static_cast<std::uint8_t>(value);
      return;
    }
  }
}

void MemoTable::grow() {
  std::vector<std::uint64_t> old_keys = std::move(keys_);
  std::vector<std::uint8_t> old_vals = std::move(vals_);
  keys_.assign(old_keys.size() * 2, kEmpty);
  vals_.assign(old_vals.size() * 2, 0);
  std::size_t mask = keys_.size() - 1;
  for (std::size_t i = 0; i < old_keys.size(); ++i) {
    if (old_keys[i] == kEmpty) continue;
    for (std::size_t j = slot_of(old_keys[i], mask);; j = (j + 1) & mask) {
      if (keys_[j] == kEmpty) {
        keys_[j] = old_keys[i];
        vals_[j] = old_vals[i];
        break;
      }
    }
  }
}

Solver::Solver(const Graph& g) : g_(g), n_(g.order()), all_(VertexSet::full(n_).bits()) {
  for (int v = 0; v < n_; ++v) adj_[static_cast<size_t>(v)] = g.neighbors(v).bits();
}

std::uint64_t Solver::spread(std::uint64_t burned) const {
  std::uint64_t out = burned;
  std::uint64_t rest = burned;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    out |= adj_[static_cast<size_t>(v)];
  }
  return out;
}

const DistanceMatrix& Solver::dm() {
  if (!dm_) dm_ = std::make_unique<DistanceMatrix>(g_);
  return *dm_;
}

int Solver::value(std::uint64_t burned, int side) {
  if (burned == all_) return 0;
  int hit = memo_[side].find(burned);
  if (hit >= 0) return hit;
  std::uint64_t sp = spread(burned);
  int best;
  if (sp == all_) {
    best = 1;
  } else {
    best = side == 0 ? std::numeric_limits<int>::max() : 0;
    std::uint64_t rest = all_ & ~sp;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t child = sp | (std::uint64_t{1} << v);
      int cv = child == all_ ? 1 : 1 + value(child, side ^ 1);
      if (side == 0) {
        best = std::min(best, cv);
        if (best == 1) break;  // nothing beats ending this round
      } else {
        best = std::max(best, cv);
      }
    }
  }
  memo_[side].insert(burned, best);
  return best;
}

int Solver::game_value(VertexSet b0, Player starter) {
  return value(b0.bits(), starter == Player::Burner ? 0 : 1);
}

int Solver::selection_first_value(VertexSet b0, Player starter) {
  std::uint64_t burned = b0.bits();
  if (burned == all_) return 0;
  int side = starter == Player::Burner ? 0 : 1;
  int best = side == 0 ? std::numeric_limits<int>::max() : 0;
  std::uint64_t rest = all_ & ~burned;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    std::uint64_t child = burned | (std::uint64_t{1} << v);
    int cv = child == all_ ? 1 : 1 + value(child, side ^ 1);
    best = side == 0 ? std::min(best, cv) : std::max(best, cv);
  }
  return best;
}

std::pair<int, PlayTrace> Solver::principal_variation(VertexSet b0, Player starter) {
  int total = game_value(b0, starter);
  PlayTrace trace;
  trace.initial = b0;
  trace.starter = starter;
  std::uint64_t burned = b0.bits();
  int side = starter == Player::Burner ? 0 : 1;
  while (burned != all_) {
    std::uint64_t sp = spread(burned);
    TraceRound round;
    round.spread_delta = VertexSet::from_bits(sp & ~burned);
    if (sp == all_) {
      trace.rounds.push_back(round);
      trace.ends_after_spread = true;
      break;
    }
    int want = side == 0 ? std::numeric_limits<int>::max() : 0;
    int pick = -1;
    std::uint64_t rest = all_ & ~sp;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t child = sp | (std::uint64_t{1} << v);
      int cv = child == all_ ? 1 : 1 + value(child, side ^ 1);
      if ((side == 0 && cv < want) || (side == 1 && cv > want)) want = cv, pick = v;
    }
    round.selection = {side == 0 ? Player::Burner : Player::Staller, pick};
    trace.rounds.push_back(round);
    burned = sp | (std::uint64_t{1} << pick);
    side ^= 1;
  }
  return {total, std::move(trace)};
}

// True when more far vertices need private selections than rounds remain.
// Every future selection's ball has diameter at most 2*(rounds-1), so a set
// of unreached vertices (distance > rounds from the burned set) that are
// pairwise farther apart than that needs one selection each; this relaxation
// lets every selection help Burner, hence refuting it refutes all play.
bool Solver::packing_exceeds(std::uint64_t burned, int rounds) {
  const DistanceMatrix& d = dm();
  std::uint64_t covered = 0;
  std::uint64_t rest = burned;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    covered |= d.ball(v, rounds).bits();
  }
  std::uint64_t far = all_ & ~covered;
  int picked = 0;
  while (far) {
    int v = std::countr_zero(far);
    far &= ~d.ball(v, 2 * (rounds - 1)).bits();
    if (++picked > rounds) return true;
  }
  return false;
}

bool Solver::finish_within(std::uint64_t burned, int side, int rounds) {
  if (burned == all_) return true;
  if (rounds <= 0) return false;
  if (static_cast<size_t>(rounds) >= finish_memo_[side].size())
    finish_memo_[side].resize(static_cast<size_t>(rounds) + 1);
  int hit = finish_memo_[side][static_cast<size_t>(rounds)].find(burned);
  if (hit >= 0) return hit != 0;
  bool ok;
  std::uint64_t sp = spread(burned);
  if (sp == all_) {
    ok = true;
  } else if (packing_exceeds(burned, rounds)) {
    ok = false;
  } else {
    std::uint64_t rest = all_ & ~sp;
    std::vector<std::pair<int, int>> order;
    order.reserve(static_cast<size_t>(std::popcount(rest)));
    const DistanceMatrix& d = dm();
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      // selections cover ball(v, rounds-1) by the deadline; Burner tries big
      // gains first, Staller tries wasted moves first
      int gain = std::popcount(d.ball(v, rounds - 1).bits() & ~sp);
      order.emplace_back(side == 0 ? -gain : gain, v);
    }
    std::stable_sort(order.begin(), order.end());
    ok = side != 0;
    for (auto [score, v] : order) {
      bool child_ok = finish_within(sp | (std::uint64_t{1} << v), side ^ 1, rounds - 1);
      if (side == 0 && child_ok) { ok = true; break; }
      if (side == 1 && !child_ok) { ok = false; break; }
    }
  }
  finish_memo_[side][static_cast<size_t>(rounds)].insert(burned, ok ? 1 : 0);
  return ok;
}

bool Solver::can_finish_within(VertexSet b0, Player starter, int rounds) {
  return finish_within(b0.bits(), starter == Player::Burner ? 0 : 1, rounds);
}

int Solver::script_walk(std::uint64_t burned, int side, int done, std::span<const int> script,
                        std::size_t pos, int horizon) {
  if (burned == all_) return done;
  if (done >= horizon + 1) return done;
  std::uint64_t sp = spread(burned);
  int round = done + 1;
  if (sp == all_) return round;
  if (round > horizon) return round;  // already past the certificate window
  if (side == 0) {
    if (pos >= script.size())
      throw std::invalid_argument("script exhausted at round " + std::to_string(round));
    int v = script[pos];
    if (v < 0 || v >= n_)
      throw std::invalid_argument("script vertex " + std::to_string(v) + " out of range");
    if ((sp >> v) & 1) v = std::countr_zero(all_ & ~sp);  // harmless substitute
    return script_walk(sp | (std::uint64_t{1} << v), 1, round, script, pos + 1, horizon);
  }
  int worst = 0;
  std::uint64_t rest = all_ & ~sp;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    worst = std::max(worst,
                     script_walk(sp | (std::uint64_t{1} << v), 0, round, script, pos, horizon));
    if (worst > horizon) break;
  }
  return worst;
}

int Solver::script_worst_case(VertexSet b0, Player starter, std::span<const int> script,
                              int horizon) {
  if (horizon < 0) throw std::invalid_argument("script horizon must be nonnegative");
  return script_walk(b0.bits(), starter == Player::Burner ? 0 : 1, 0, script, 0, horizon);
}

int Solver::solo_value(std::uint64_t burned, int side) {
  if (burned == all_) return 0;
  int hit = solo_[side].find(burned);
  if (hit >= 0) return hit;
  std::uint64_t sp = spread(burned);
  int best;
  if (sp == all_) {
    best = 1;
  } else {
    best = side == 0 ? std::numeric_limits<int>::max() : 0;
    std::uint64_t rest = all_ & ~sp;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t child = sp | (std::uint64_t{1} << v);
      int cv = child == all_ ? 1 : 1 + solo_value(child, side);
      if (side == 0) {
        best = std::min(best, cv);
        if (best == 1) break;
      } else {
        best = std::max(best, cv);
      }
    }
  }
  solo_[side].insert(burned, best);
  return best;
}

int Solver::burner_only_value(VertexSet b0) { return solo_value(b0.bits(), 0); }
int Solver::staller_only_value(VertexSet b0) { return solo_value(b0.bits(), 1); }

std::vector<std::pair<VertexSet, int>> Solver::memo_entries(Player p) const {
  std::vector<std::pair<VertexSet, int>> out;
  memo_[p == Player::Burner ? 0 : 1].visit([&](std::uint64_t key, int val) {
    out.emplace_back(VertexSet::from_bits(key), val);
  });
  return out;
}

int game_value(const Graph& g, VertexSet b0, Player starter) {
  return Solver(g).game_value(b0, starter);
}
int selection_first_value(const Graph& g, VertexSet b0, Player starter) {
  return Solver(g).selection_first_value(b0, starter);
}
int burner_only_value(const Graph& g, VertexSet b0) { return Solver(g).burner_only_value(b0); }
int staller_only_value(const Graph& g, VertexSet b0) { return Solver(g).staller_only_value(b0); }
int cooling_number(const Graph& g) { return Solver(g).staller_only_value(VertexSet()); }
int verify_burner_script(const Graph& g, VertexSet b0, Player starter,
                         std::span<const int> script, int horizon) {
  return Solver(g).script_worst_case(b0, starter, script, horizon);
}

}  // namespace burn
