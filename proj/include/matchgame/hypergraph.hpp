#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchgame/assignment.hpp"  // Verdict / Violation
#include "matchgame/graph.hpp"

namespace matchgame {

// A hypergraph stored purely as its incidence bipartite graph: side1 holds
// the hypervertices, side2 the hyperedges, and (u, e) is an edge iff u is
// incident to e. Hyperedge "contents" are derived views. Duplicate and
// empty hyperedges are permitted.
struct Hypergraph {
  BipartiteGraph incidence;

  int nv() const { return incidence.n1; }
  int ne() const { return incidence.n2; }
  // Incidence-graph node id of hyperedge e.
  int edge_node(int e) const { return nv() + e; }

  bool incident(int v, int e) const { return incidence.graph.adjacent(v, edge_node(e)); }
  std::vector<int> edge_vertices(int e) const;  // ascending hypervertex ids
  std::vector<int> vertex_edges(int v) const;   // ascending hyperedge ids
};

// edges[j] lists the hypervertices (0-based) of hyperedge j. Labels:
// hypervertices "1".."n", hyperedges "e1".."em".
Hypergraph make_hypergraph(int nv, const std::vector<std::vector<int>>& edges);

// Sequences below live in incidence-node space: hypervertex i is node i,
// hyperedge j is node nv + j. A strong path/cycle induces exactly its
// consecutive incidences on its support.
bool is_strong_path(const Hypergraph& h, std::span<const int> seq);
bool is_strong_cycle(const Hypergraph& h, std::span<const int> seq);

struct BalanceVerdict {
  bool balanced = true;
  std::vector<int> witness;  // a shortest strong cycle of length 4k+2 (with
                             // the closing repeat), empty when balanced
};

// Balanced iff no strong cycle of length 6, 10, 14, ... exists; finds a
// shortest witness by chordless-cycle enumeration. Refuses |W| > node_bound.
BalanceVerdict is_balanced_bruteforce(const Hypergraph& h, int node_bound = 16);

// Smallest vertex set meeting every hyperedge exactly once (transversal +
// independent), by subset enumeration in (size, lexicographic) order;
// nullopt when none exists. Refuses |V| > vertex_bound.
std::optional<std::vector<int>> find_independent_transversal(const Hypergraph& h,
                                                             int vertex_bound = 16);

// Maximum matching (hyperedge set splitting V) / minimum transversal by
// exhaustive enumeration, lexicographically least among optima.
// min_transversal throws InputError when some hyperedge is empty (nothing
// can cover it).
std::vector<int> max_matching_bruteforce(const Hypergraph& h, int edge_bound = 16);
std::vector<int> min_transversal_bruteforce(const Hypergraph& h, int vertex_bound = 16);

// H' = H plus hypervertices v1, v0, hyperedge e0 = {v0, v1} and, for each
// u in the independent transversal U, a hyperedge f_u = {v1, u}. Original
// items keep their ids; v1 = nv, v0 = nv + 1, e0 = ne, then the f-edges in
// ascending U order.
struct AugmentedHypergraph {
  Hypergraph hyper;     // H'
  Hypergraph original;  // H
  int v0 = -1, v1 = -1;
  int e0 = -1;
  std::vector<int> u_set;  // ascending

  int f_edge_of(int u) const;  // hyperedge id of f_u; u must be in u_set
};

// Validates that u_set is an independent transversal (errors name the
// violated clause).
AugmentedHypergraph augment_hypergraph(const Hypergraph& h, std::vector<int> u_set);

// Hyper assignment (R, sigma): sigma maps hypervertices of H' to an
// incident hyperedge or bottom (-1).
struct HyperAssignment {
  std::vector<uint8_t> reachable;  // indexed by hypervertex of H'
  std::vector<int> sigma;          // hyperedge id or -1

  bool in_reachable(int v) const { return reachable[v] != 0; }
};

// Conditions C1-C3 of the hypergraph assignment; exhaustive violations.
Verdict verify_hyper_assignment(const AugmentedHypergraph& ha, const HyperAssignment& a);

// Construction for "matching covers U": sigma(v0) = e0, each u in U mapped
// to its unique matching edge, all else bottom, R = V'.
HyperAssignment assignment_from_matching(const AugmentedHypergraph& ha,
                                         const std::vector<int>& matching);

// Construction for "no matching covers U", from a maximum matching, a
// minimum transversal of equal size and an uncovered U-vertex r:
// sigma(v1) = f_r, each transversal vertex mapped to its unique matching
// edge, all else bottom, R = V'. The complementary-slackness preconditions
// (each transversal vertex in exactly one matching edge and vice versa)
// are validated, not trusted.
HyperAssignment assignment_from_duals(const AugmentedHypergraph& ha,
                                      const std::vector<int>& matching,
                                      const std::vector<int>& transversal,
                                      int uncovered);

// Play of the hypergraph game: alternating v0 e0 v1 e1 ... forming a
// strong path in H'. Player s is to move when k - 1 = s mod 2.
struct HyperPlay {
  const AugmentedHypergraph* arena = nullptr;
  std::vector<int> vs;  // hypervertices, starts {v0}
  std::vector<int> es;  // hyperedges, starts {e0}

  int to_move() const {
    const long long k = static_cast<long long>(vs.size()) - 1;
    return ((k - 1) % 2 + 2) % 2 == 1 ? 1 : 2;
  }
};

HyperPlay initial_hyper_state(const AugmentedHypergraph& arena);

// Pairs (v, e) whose appending keeps the play a strong path, ascending.
std::vector<std::pair<int, int>> hyper_legal_moves(const HyperPlay& st);

struct HyperStrategy {
  std::string name;
  std::function<std::optional<std::pair<int, int>>(const HyperPlay&)> move;
};

// Plays (v, sigma(v)) for the lowest v in N(e_k) - {v_k} with
// sigma(v) != bottom. Such a v exists at every on-invariant state (else
// condition C2 is broken: internal panic). Wins for Player 1 when
// sigma(v0) = bottom, for Player 2 otherwise.
HyperStrategy hyper_strategy_from_assignment(HyperAssignment a);

HyperStrategy hyper_random_strategy(uint64_t seed);

struct HyperMatchResult {
  int winner = 0;
  std::vector<int> vs, es;  // final play
  bool forfeit = false;
  int forfeiting_player = 0;
};

HyperMatchResult play_hyper_match(const HyperStrategy& p1, const HyperStrategy& p2,
                                  const AugmentedHypergraph& arena);

// Exact game value by full search memoized on (support set, last
// hyperedge). Refuses |W'| > node_bound.
int hyper_minimax(const AugmentedHypergraph& ha, int node_bound = 18);

// Backtracking search for an assignment with R = V' (the constructions
// above always use R = V'), propagating C1/C3 and pruning dead C2 states;
// first result in deterministic order, nullopt if none exists. Refuses
// |V'| > vertex_bound or |E'| > edge_bound.
std::optional<HyperAssignment> search_assignment_bruteforce(const AugmentedHypergraph& ha,
                                                            int vertex_bound = 10,
                                                            int edge_bound = 10);

// Text format: `p hyp <n> <m>`, then `h <j>: <i1> <i2> ...` per hyperedge
// (1-based), optional `U: <i1> ...` naming an independent transversal.
struct HypergraphFile {
  Hypergraph hypergraph;
  std::optional<std::vector<int>> u_set;
};
HypergraphFile parse_hypergraph_file(std::string_view text);
std::string render_hypergraph(const Hypergraph& h,
                              const std::optional<std::vector<int>>& u_set = std::nullopt);

// Serialization of hyper assignments, mirroring the graph format.
std::string serialize_hyper_assignment(const AugmentedHypergraph& ha,
                                       const HyperAssignment& a);

}  // namespace matchgame
