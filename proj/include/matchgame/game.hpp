#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matchgame/assignment.hpp"

namespace matchgame {

// Position of the path game on an arena: the play is the current path
// v0 v1 ... v_k. Whose turn it is follows from the play length alone
// (Player s moves when k - 1 = s mod 2), so no turn state is stored.
struct PlayState {
  const AugmentedGraph* arena = nullptr;
  std::vector<Vertex> play;

  int to_move() const {
    const long long k = static_cast<long long>(play.size()) - 1;
    return ((k - 1) % 2 + 2) % 2 == 1 ? 1 : 2;
  }
};

PlayState initial_state(const AugmentedGraph& arena);

// Z = { v in V' - V(P) : v_k v in E' }, ascending. Empty means the player
// to move loses.
std::vector<Vertex> legal_moves(const PlayState& st);

// A move function; nullopt means resign.
struct Strategy {
  std::string name;
  std::function<std::optional<Vertex>(const PlayState&)> move;
};

// Plays sigma(v_k) at every turn. Panics when called at a state where the
// maintained invariant fails (v_k outside R or sigma(v_k) = bottom): that
// means the adversary moved illegally or the assignment is invalid. For a
// verified assignment this is a winning strategy for Player 1 when
// sigma(v0) != bottom and for Player 2 otherwise.
Strategy strategy_from_assignment(Assignment a);

// Picks uniformly among legal moves with a deterministic seeded generator.
Strategy random_strategy(uint64_t seed);

// Plays perfectly by exhaustive search (lowest-index winning move, else
// lowest-index move). Desk scale only.
Strategy minimax_strategy(int size_bound = 14);

// Resigns immediately; test stub for the forfeit rule.
Strategy resign_strategy();

struct MatchResult {
  int winner = 0;
  std::vector<Vertex> transcript;  // the maximal legal play, starting at v0
  bool forfeit = false;
  int forfeiting_player = 0;
};

// Runs one match. The winner is the player who made the last move; a
// strategy that resigns or returns an illegal move forfeits (flagged).
MatchResult play_match(const Strategy& p1, const Strategy& p2,
                       const AugmentedGraph& arena);

// Game value under optimal play, by full tree search memoized on
// (current endpoint, set of used vertices). Refuses arenas larger than
// size_bound vertices.
int minimax_value(const AugmentedGraph& arena, int size_bound = 14);

}  // namespace matchgame
