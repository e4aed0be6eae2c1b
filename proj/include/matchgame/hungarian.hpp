#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchgame {

// Complete weighted bipartite instance on two sides of equal size n.
// Weights are integers; a "missing" edge is conventionally encoded by a
// weight so negative it can never join an optimal matching (any value
// below n * min-real-weight works).
struct WeightedBipartiteGraph {
  int n = 0;
  std::vector<long long> weights;  // row-major n*n, row = side1 vertex

  long long weight(int u, int v) const { return weights[static_cast<size_t>(u) * n + v]; }
};

WeightedBipartiteGraph make_weighted(int n, std::vector<long long> weights);

// Egervary potentials: y1(u) + y2(v) >= w(u, v) everywhere, with equality
// on matched pairs.
struct DualPair {
  std::vector<long long> y1, y2;
};

struct WeightedMatchingResult {
  std::vector<std::pair<int, int>> matching;  // (u, v), both 0-based, u ascending
  DualPair duals;
  long long total_weight = 0;
  long long dual_updates = 0;
};

// Maximum-weight perfect matching via the Hungarian method, with the
// assignment solver as the inner feasibility routine: the equality
// subgraph {(u,v) : y1(u) + y2(v) = w(u,v)} either yields a matching
// covering side1 (done) or a Hall violator S, in which case the duals move
// by delta = min over u in S, v outside N(S) of (y1(u) + y2(v) - w(u,v)).
// Dual feasibility and complementary slackness are asserted on the output;
// more than n^2 dual updates is an internal panic.
WeightedMatchingResult max_weight_matching(const WeightedBipartiteGraph& g);

// Text format: `p wbip <n>` then n rows of n integers.
WeightedBipartiteGraph parse_weighted(std::string_view text);
std::string render_weighted(const WeightedBipartiteGraph& g);

}  // namespace matchgame
