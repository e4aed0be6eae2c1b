#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "matchgame/assignment.hpp"
#include "matchgame/graph.hpp"

namespace matchgame {

// Independent ground truth for the assignment solver: classical augmenting
// path matching and exhaustive Hall-condition checking.

struct OracleMatching {
  std::vector<std::pair<Vertex, Vertex>> edges;  // (side1 vertex, side2 vertex)
  int size = 0;
};

// Maximum-cardinality matching by repeated augmenting-path search
// (O(V*E); deliberately simple). Covers side1 iff size == n1.
OracleMatching max_matching(const BipartiteGraph& g);

inline bool covers_side1(const OracleMatching& m, const BipartiteGraph& g) {
  return m.size == g.n1;
}

// Minimum-cardinality set S in side1 with |N(S)| < |S|, found by
// enumerating subsets in (size, lexicographic) order; nullopt when the Hall
// condition holds. Cross-checked internally against max_matching (they must
// agree in both directions). Refuses |side1| > side1_bound.
std::optional<ViolatorCert> hall_violator_bruteforce(const BipartiteGraph& g,
                                                     int side1_bound = 20);

}  // namespace matchgame
