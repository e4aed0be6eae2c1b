#include "matchgame/hungarian.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

#include "matchgame/assignment.hpp"
#include "matchgame/errors.hpp"
#include "matchgame/graph.hpp"

namespace matchgame {

WeightedBipartiteGraph make_weighted(int n, std::vector<long long> weights) {
  if (n < 1) throw InputError("weighted instance needs n >= 1");
  if (weights.size() != static_cast<size_t>(n) * n)
    throw InputError("weight matrix must hold n*n entries");
  return WeightedBipartiteGraph{n, std::move(weights)};
}

WeightedMatchingResult max_weight_matching(const WeightedBipartiteGraph& g) {
  const int n = g.n;
  if (n < 1) throw InputError("weighted instance needs n >= 1");

  WeightedMatchingResult result;
  std::vector<long long>& y1 = result.duals.y1;
  std::vector<long long>& y2 = result.duals.y2;
  y1.resize(n);
  y2.assign(n, 0);
  for (int u = 0; u < n; ++u)
    y1[u] = *std::max_element(g.weights.begin() + static_cast<size_t>(u) * n,
                              g.weights.begin() + static_cast<size_t>(u + 1) * n);

  const long long update_cap = static_cast<long long>(n) * n;
  while (true) {
    BipartiteGraph eq = make_bipartite(n, n, {});
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (y1[u] + y2[v] == g.weight(u, v)) eq.graph.add_edge(u, n + v);

    AugmentedGraph arena = augment(eq);
    AssignResult assigned = compute_assignment(arena);
    Certificate cert = extract_certificate(arena, assigned.assignment);

    if (const auto* matching = std::get_if<MatchingCert>(&cert)) {
      for (auto [u, w] : matching->edges) result.matching.emplace_back(u, w - n);
      std::sort(result.matching.begin(), result.matching.end());
      break;
    }

    const auto& violator = std::get<ViolatorCert>(cert);
    std::vector<uint8_t> in_nbhd(n, 0);
    for (Vertex w : violator.witness_neighborhood) in_nbhd[w - n] = 1;
    long long delta = std::numeric_limits<long long>::max();
    for (Vertex u : violator.subset)
      for (int v = 0; v < n; ++v)
        if (!in_nbhd[v]) delta = std::min(delta, y1[u] + y2[v] - g.weight(u, v));
    internal_check(delta != std::numeric_limits<long long>::max(),
                   "dual update found no candidate pair");
    internal_check(delta > 0, "dual update with non-positive delta");
    for (Vertex u : violator.subset) y1[u] -= delta;
    for (Vertex w : violator.witness_neighborhood) y2[w - n] += delta;
    ++result.dual_updates;
    internal_check(result.dual_updates <= update_cap,
                   "dual update count exceeded n^2");
  }

  for (auto [u, v] : result.matching) result.total_weight += g.weight(u, v);

  // Optimality certificate: feasibility plus complementary slackness.
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      internal_check(y1[u] + y2[v] >= g.weight(u, v), "duals infeasible");
  internal_check(result.matching.size() == static_cast<size_t>(n),
                 "matching is not perfect");
  for (auto [u, v] : result.matching)
    internal_check(y1[u] + y2[v] == g.weight(u, v),
                   "matched pair not tight against the duals");
  return result;
}

WeightedBipartiteGraph parse_weighted(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<long long> weights;
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string tok;
    if (!(ss >> tok)) continue;
    if (n < 0) {
      std::string kind;
      long long size = 0;
      if (tok != "p" || !(ss >> kind >> size) || kind != "wbip" || size < 1)
        throw ParseError(line_no, "expected header 'p wbip <n>'");
      n = static_cast<int>(size);
      weights.reserve(static_cast<size_t>(n) * n);
      continue;
    }
    ss.clear();
    ss.str(line);
    long long w = 0;
    while (ss >> w) weights.push_back(w);
    if (ss.fail() && !ss.eof()) throw ParseError(line_no, "expected integer weight");
  }
  if (n < 0) throw ParseError(1, "empty input");
  if (weights.size() != static_cast<size_t>(n) * n)
    throw ParseError(line_no, "expected " + std::to_string(static_cast<long long>(n) * n) +
                                  " weights, found " + std::to_string(weights.size()));
  return make_weighted(n, std::move(weights));
}

std::string render_weighted(const WeightedBipartiteGraph& g) {
  std::ostringstream out;
  out << "p wbip " << g.n << '\n';
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) out << (v ? " " : "") << g.weight(u, v);
    out << '\n';
  }
  return out.str();
}

}  // namespace matchgame
