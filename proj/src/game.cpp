#include "matchgame/game.hpp"

#include <algorithm>
#include <memory>

#include "matchgame/errors.hpp"
#include "matchgame/rng.hpp"

namespace matchgame {

PlayState initial_state(const AugmentedGraph& arena) {
  return PlayState{&arena, {arena.v0}};
}

std::vector<Vertex> legal_moves(const PlayState& st) {
  const Graph& g = st.arena->graph;
  std::vector<uint8_t> used(g.vertex_count(), 0);
  for (Vertex v : st.play) used[v] = 1;
  std::vector<Vertex> out;
  for (Vertex v : g.neighbors(st.play.back()))
    if (!used[v]) out.push_back(v);
  return out;
}

Strategy strategy_from_assignment(Assignment a) {
  return Strategy{
      "assignment",
      [a = std::move(a)](const PlayState& st) -> std::optional<Vertex> {
        const Vertex vk = st.play.back();
        internal_check(a.in_reachable(vk),
                       "assignment strategy consulted at a vertex outside R");
        internal_check(a.sigma[vk] != kNoVertex,
                       "assignment strategy consulted at a losing vertex");
        return a.sigma[vk];
      }};
}

Strategy random_strategy(uint64_t seed) {
  auto rng = std::make_shared<SplitMix64>(seed);
  return Strategy{"random", [rng](const PlayState& st) -> std::optional<Vertex> {
                    std::vector<Vertex> moves = legal_moves(st);
                    if (moves.empty()) return std::nullopt;
                    return moves[rng->below(static_cast<int>(moves.size()))];
                  }};
}

Strategy resign_strategy() {
  return Strategy{"resign", [](const PlayState&) { return std::nullopt; }};
}

namespace {

// True iff the player about to move from `endpoint` (with `used` already
// containing the play support) can force a win.
bool mover_wins(const Graph& g, Vertex endpoint, uint64_t used,
                std::vector<int8_t>& memo) {
  const int n = g.vertex_count();
  int8_t& slot = memo[used * n + endpoint];
  if (slot != -1) return slot != 0;
  bool wins = false;
  for (Vertex v : g.neighbors(endpoint)) {
    if (used & (1ULL << v)) continue;
    if (!mover_wins(g, v, used | (1ULL << v), memo)) {
      wins = true;
      break;
    }
  }
  slot = wins ? 1 : 0;
  return wins;
}

std::vector<int8_t> make_memo(const Graph& g, int size_bound, const char* who) {
  const int n = g.vertex_count();
  // 2^n * n memo entries; 20 caps the table at ~21 MB regardless of the
  // caller's bound.
  if (n > std::min(size_bound, 20))
    throw BoundError(std::string(who) + ": arena has " + std::to_string(n) +
                     " vertices, bound is " + std::to_string(size_bound));
  return std::vector<int8_t>((1ULL << n) * n, -1);
}

}  // namespace

Strategy minimax_strategy(int size_bound) {
  return Strategy{"minimax", [size_bound](const PlayState& st) -> std::optional<Vertex> {
                    const Graph& g = st.arena->graph;
                    auto memo = make_memo(g, size_bound, "minimax strategy");
                    uint64_t used = 0;
                    for (Vertex v : st.play) used |= 1ULL << v;
                    std::vector<Vertex> moves = legal_moves(st);
                    if (moves.empty()) return std::nullopt;
                    for (Vertex v : moves)
                      if (!mover_wins(g, v, used | (1ULL << v), memo)) return v;
                    return moves.front();
                  }};
}

MatchResult play_match(const Strategy& p1, const Strategy& p2,
                       const AugmentedGraph& arena) {
  PlayState st = initial_state(arena);
  MatchResult result;
  while (true) {
    const int mover = st.to_move();
    std::vector<Vertex> moves = legal_moves(st);
    if (moves.empty()) {
      result.winner = 3 - mover;
      break;
    }
    const Strategy& strat = mover == 1 ? p1 : p2;
    std::optional<Vertex> choice = strat.move(st);
    if (!choice || std::find(moves.begin(), moves.end(), *choice) == moves.end()) {
      result.winner = 3 - mover;
      result.forfeit = true;
      result.forfeiting_player = mover;
      break;
    }
    st.play.push_back(*choice);
  }
  result.transcript = std::move(st.play);
  return result;
}

int minimax_value(const AugmentedGraph& arena, int size_bound) {
  const Graph& g = arena.graph;
  auto memo = make_memo(g, size_bound, "minimax_value");
  return mover_wins(g, arena.v0, 1ULL << arena.v0, memo) ? 1 : 2;
}

}  // namespace matchgame
