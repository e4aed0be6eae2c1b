#include "matchgame/oracle.hpp"

#include <bit>

#include "matchgame/errors.hpp"

namespace matchgame {

namespace {

bool try_augment(const BipartiteGraph& g, Vertex u, std::vector<uint8_t>& visited,
                 std::vector<Vertex>& match_of_right) {
  for (Vertex w : g.graph.neighbors(u)) {
    const int j = w - g.n1;
    if (visited[j]) continue;
    visited[j] = 1;
    if (match_of_right[j] == kNoVertex ||
        try_augment(g, match_of_right[j], visited, match_of_right)) {
      match_of_right[j] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

OracleMatching max_matching(const BipartiteGraph& g) {
  std::vector<Vertex> match_of_right(g.n2, kNoVertex);
  OracleMatching result;
  for (Vertex u = 0; u < g.n1; ++u) {
    std::vector<uint8_t> visited(g.n2, 0);
    if (try_augment(g, u, visited, match_of_right)) ++result.size;
  }
  for (int j = 0; j < g.n2; ++j)
    if (match_of_right[j] != kNoVertex)
      result.edges.emplace_back(match_of_right[j], g.n1 + j);
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

namespace {

struct SubsetScan {
  const BipartiteGraph& g;
  std::vector<std::vector<uint64_t>> nbr_mask;  // per side1 vertex, side2 bitset
  int words;
  std::vector<Vertex> chosen;
  std::vector<uint64_t> acc;
  std::optional<ViolatorCert> found;

  explicit SubsetScan(const BipartiteGraph& g) : g(g) {
    words = (g.n2 + 63) / 64;
    nbr_mask.assign(g.n1, std::vector<uint64_t>(words, 0));
    for (Vertex u = 0; u < g.n1; ++u)
      for (Vertex w : g.graph.neighbors(u))
        nbr_mask[u][(w - g.n1) / 64] |= 1ULL << ((w - g.n1) % 64);
    acc.assign(words, 0);
  }

  int popcount() const {
    int c = 0;
    for (uint64_t word : acc) c += std::popcount(word);
    return c;
  }

  // Extends the current combination with vertices >= from, targeting size k.
  bool extend(int from, int k) {
    if (static_cast<int>(chosen.size()) == k) {
      if (popcount() < k) {
        ViolatorCert cert;
        cert.subset = chosen;
        cert.witness_neighborhood = neighborhood(g.graph, cert.subset);
        found = cert;
        return true;
      }
      return false;
    }
    for (Vertex u = from; u <= g.n1 - (k - static_cast<int>(chosen.size())); ++u) {
      std::vector<uint64_t> saved = acc;
      for (int i = 0; i < words; ++i) acc[i] |= nbr_mask[u][i];
      chosen.push_back(u);
      if (extend(u + 1, k)) return true;
      chosen.pop_back();
      acc = saved;
    }
    return false;
  }
};

}  // namespace

std::optional<ViolatorCert> hall_violator_bruteforce(const BipartiteGraph& g,
                                                     int side1_bound) {
  if (g.n1 > side1_bound)
    throw BoundError("hall_violator_bruteforce: |side1| = " + std::to_string(g.n1) +
                     " exceeds bound " + std::to_string(side1_bound));
  SubsetScan scan(g);
  for (int k = 1; k <= g.n1 && !scan.found; ++k) {
    scan.chosen.clear();
    scan.extend(0, k);
  }
  const bool covered = covers_side1(max_matching(g), g);
  internal_check(scan.found.has_value() != covered,
                 "Hall brute force disagrees with the matching oracle");
  return scan.found;
}

}  // namespace matchgame
