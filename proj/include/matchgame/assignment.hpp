#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "matchgame/graph.hpp"

namespace matchgame {

// Arena (G', v0): a graph with a start vertex v0 whose single neighbor is
// the apex v1. When built by augment() the original bipartite instance is
// kept so certificates can be mapped back.
struct AugmentedGraph {
  Graph graph;
  Vertex v0 = kNoVertex;
  Vertex v1 = kNoVertex;
  std::optional<BipartiteGraph> original;
};

// G' = G plus apex v1 adjacent to all of side1, plus v0 adjacent to v1.
// Original vertices keep their indices; then v1 = |V|, v0 = |V| + 1.
AugmentedGraph augment(const BipartiteGraph& g);

// Wraps a pre-built arena. Validates that v0 has exactly one neighbor and
// that the graph is bipartite (the algorithm's termination bound needs it).
AugmentedGraph make_arena(Graph graph, Vertex v0);

// Worst-case family: 2n+1 vertices v0..vn, w1..wn with N(v0) = {v1} and
// N(v_i) = {w1..w_{n-i+1}}. Vertex numbering: v_i = i, w_j = n + j. Under
// lowest-index tie-breaking the solver spends exactly n^2 + 1 iterations.
AugmentedGraph tightness_instance(int n);

// The memoryless strategy certificate (R, sigma): R is the reachable set,
// sigma maps winning positions to a losing neighbor and losing positions
// to kNoVertex.
struct Assignment {
  std::vector<uint8_t> reachable;  // indexed by vertex, 1 = in R
  std::vector<Vertex> sigma;       // kNoVertex encodes "bottom"

  bool in_reachable(Vertex v) const { return reachable[v] != 0; }
  std::vector<Vertex> reachable_list() const;
};

enum class TieBreak { kLowestIndex, kSeededRandom };

// One step of the solver loop. An introduction appends z (and its recorded
// partner w, if any) to the path; a deletion retracts the last two path
// vertices x = v_{k-1}, y = v_k and records sigma(x) = y.
struct TraceStep {
  enum Kind { kIntroduction, kDeletion };
  Kind kind;
  Vertex x = kNoVertex;
  Vertex y = kNoVertex;  // kNoVertex on an introduction with no partner
};

struct AssignStats {
  long long iterations = 0;
  long long introductions = 0;
  long long deletions = 0;
};

// Live solver state at a step boundary, exposed for instrumentation.
struct AlgoState {
  std::vector<Vertex> path;
  std::vector<uint8_t> on_path;
  std::vector<uint8_t> reachable;
  std::vector<Vertex> sigma;
  std::vector<Vertex> tau;
  long long iterations = 0;
};

struct AssignOptions {
  TieBreak tie_break = TieBreak::kLowestIndex;
  uint64_t seed = 0;
  bool keep_trace = false;
  // Run the full step-invariant check after every loop iteration and panic
  // on the first failure.
  bool debug_invariants = false;
  // Called after every step with the fresh state snapshot (slow; testing).
  std::function<void(const AlgoState&, const TraceStep&)> observer;
};

struct AssignResult {
  Assignment assignment;
  AssignStats stats;
  std::vector<TraceStep> trace;  // filled only when keep_trace
};

// Runs the assignment solver on the arena. The result satisfies the
// assignment conditions C1-C3, and stats.iterations <= 2n^2 + 1 for
// n = |V'| (exceeding that bound is an internal panic: the bound is
// proved, so crossing it means a bug). Deterministic for a fixed
// tie-break mode and seed.
AssignResult compute_assignment(const AugmentedGraph& ga,
                                const AssignOptions& opts = {});

struct Violation {
  std::string condition;  // "R", "C1", "C2", "C3" or "a".."d" for step checks
  Vertex vertex = kNoVertex;
  Vertex neighbor = kNoVertex;
  std::string detail;
};

struct Verdict {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks v0 in R and conditions C1-C3. Violations are exhaustive, not
// first-found.
Verdict verify_assignment(const AugmentedGraph& ga, const Assignment& a);

// Matching covering side1 of the original instance; edges as (u, w) pairs
// of original vertex indices.
struct MatchingCert {
  std::vector<std::pair<Vertex, Vertex>> edges;
};

// Hall violator: |N_G(subset)| < |subset| in the original instance.
struct ViolatorCert {
  std::vector<Vertex> subset;                 // S, subset of side1, ascending
  std::vector<Vertex> witness_neighborhood;   // N_G(S), ascending
};

using Certificate = std::variant<MatchingCert, ViolatorCert>;

// Turns a verified assignment into a matching covering side1 (when
// sigma(v0) != bottom) or a Hall violator (when sigma(v0) == bottom).
// Requires an arena built by augment(); re-verifies the assignment and
// panics if the construction's internal obligations fail.
Certificate extract_certificate(const AugmentedGraph& ga, const Assignment& a);

// Step-boundary invariants of the solver loop: (a) the path starts at v0
// and stays inside R; (b) (sigma, tau) is a valid tuple for (Q, R) with
// Q = R - V(P) a disjoint union of matches; (c)-(d) the assignment
// conditions restricted to Q.
Verdict check_step_invariants(const AlgoState& st, const AugmentedGraph& ga);

// Text serialization: `sigma <v> <u|_>` per vertex, an `R:` line and a
// `stats iterations=<k>` line, all using vertex labels.
std::string serialize_assignment(const AugmentedGraph& ga, const Assignment& a,
                                 const AssignStats& stats);
// `step <s> intro <x> <y|_>` / `step <s> del <x> <y>` lines.
std::string serialize_trace(const AugmentedGraph& ga,
                            const std::vector<TraceStep>& trace);
// Reads sigma/R lines back (stats/step lines are ignored). Unknown labels
// are parse errors; vertices without a sigma line default to bottom.
Assignment parse_assignment(const AugmentedGraph& ga, std::string_view text);

}  // namespace matchgame
