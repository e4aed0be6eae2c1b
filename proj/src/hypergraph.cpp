#include "matchgame/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <sstream>

#include "matchgame/errors.hpp"
#include "matchgame/rng.hpp"

namespace matchgame {

std::vector<int> Hypergraph::edge_vertices(int e) const {
  return incidence.graph.neighbors(edge_node(e));
}

std::vector<int> Hypergraph::vertex_edges(int v) const {
  std::vector<int> out;
  for (int node : incidence.graph.neighbors(v)) out.push_back(node - nv());
  return out;
}

Hypergraph make_hypergraph(int nv, const std::vector<std::vector<int>>& edges) {
  Hypergraph h;
  h.incidence = make_bipartite(nv, static_cast<int>(edges.size()), {});
  for (int v = 0; v < nv; ++v) h.incidence.graph.set_label(v, std::to_string(v + 1));
  for (int e = 0; e < h.ne(); ++e)
    h.incidence.graph.set_label(nv + e, "e" + std::to_string(e + 1));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e)
    for (int v : edges[e]) h.incidence.graph.add_edge(v, nv + e);
  return h;
}

namespace {

// Shared core of the strong path/cycle predicates: all consecutive pairs
// adjacent, and the support induces no incidence beyond those pairs.
bool induced_edges_are_consecutive(const Graph& g, std::span<const int> seq) {
  std::vector<int> support(seq.begin(), seq.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  long long induced = 0;
  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i + 1; j < support.size(); ++j)
      if (g.adjacent(support[i], support[j])) ++induced;
  std::vector<std::pair<int, int>> consec;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    consec.emplace_back(std::min(seq[i], seq[i + 1]), std::max(seq[i], seq[i + 1]));
  std::sort(consec.begin(), consec.end());
  consec.erase(std::unique(consec.begin(), consec.end()), consec.end());
  return induced == static_cast<long long>(consec.size());
}

}  // namespace

bool is_strong_path(const Hypergraph& h, std::span<const int> seq) {
  const Graph& g = h.incidence.graph;
  if (!is_path(g, seq)) return false;
  return induced_edges_are_consecutive(g, seq);
}

bool is_strong_cycle(const Hypergraph& h, std::span<const int> seq) {
  const Graph& g = h.incidence.graph;
  // A cycle is a walk z1 ... zk with z1 = zk and no other repeats.
  if (seq.size() < 3 || seq.front() != seq.back()) return false;
  std::vector<int> inner(seq.begin(), seq.end() - 1);
  std::vector<int> sorted = inner;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int z : inner)
    if (z < 0 || z >= g.vertex_count()) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  return induced_edges_are_consecutive(g, seq);
}

namespace {

// Chordless-cycle DFS: a strong cycle induces exactly its consecutive
// incidences, so every witness is a chordless cycle of the incidence
// graph. Enumerates cycles of exactly `target` support nodes with minimum
// node first, in lexicographic order.
struct CycleHunt {
  const Graph& g;
  int target;
  std::vector<int> path;
  std::vector<uint8_t> on_path;

  CycleHunt(const Graph& g, int target)
      : g(g), target(target), on_path(g.vertex_count(), 0) {}

  bool dfs() {
    const int last = path.back();
    if (static_cast<int>(path.size()) == target) return g.adjacent(last, path[0]);
    for (int z = path[0] + 1; z < g.vertex_count(); ++z) {
      if (on_path[z] || !g.adjacent(last, z)) continue;
      bool chord = false;
      for (size_t i = 1; i + 1 < path.size(); ++i)
        if (g.adjacent(z, path[i])) {
          chord = true;
          break;
        }
      if (chord) continue;
      // Adjacency to the start is a chord unless z closes the cycle (the
      // second node is always adjacent to the start and is exempt).
      if (path.size() >= 2 && g.adjacent(z, path[0]) &&
          static_cast<int>(path.size()) + 1 != target)
        continue;
      path.push_back(z);
      on_path[z] = 1;
      if (dfs()) return true;
      on_path[z] = 0;
      path.pop_back();
    }
    return false;
  }

  bool run(int start) {
    path.assign(1, start);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[start] = 1;
    return dfs();
  }
};

}  // namespace

BalanceVerdict is_balanced_bruteforce(const Hypergraph& h, int node_bound) {
  const Graph& g = h.incidence.graph;
  const int nodes = g.vertex_count();
  if (nodes > node_bound)
    throw BoundError("is_balanced_bruteforce: |W| = " + std::to_string(nodes) +
                     " exceeds bound " + std::to_string(node_bound));
  for (int length = 6; length <= nodes; length += 4) {
    for (int start = 0; start < nodes; ++start) {
      CycleHunt hunt(g, length);
      if (hunt.run(start)) {
        BalanceVerdict verdict;
        verdict.balanced = false;
        verdict.witness = hunt.path;
        verdict.witness.push_back(start);
        return verdict;
      }
    }
  }
  return {};
}

namespace {

// Enumerates k-subsets of [0, n) in lexicographic order until the visitor
// returns true; returns whether it did.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> comb;
  std::function<bool(int)> rec = [&](int from) {
    if (static_cast<int>(comb.size()) == k) return visit(comb);
    for (int v = from; v <= n - (k - static_cast<int>(comb.size())); ++v) {
      comb.push_back(v);
      if (rec(v + 1)) return true;
      comb.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::optional<std::vector<int>> find_independent_transversal(const Hypergraph& h,
                                                             int vertex_bound) {
  if (h.nv() > vertex_bound)
    throw BoundError("find_independent_transversal: |V| = " + std::to_string(h.nv()) +
                     " exceeds bound " + std::to_string(vertex_bound));
  std::optional<std::vector<int>> found;
  for (int k = 0; k <= h.nv() && !found; ++k) {
    for_each_combination(h.nv(), k, [&](const std::vector<int>& comb) {
      std::vector<uint8_t> in(h.nv(), 0);
      for (int v : comb) in[v] = 1;
      for (int e = 0; e < h.ne(); ++e) {
        int hits = 0;
        for (int v : h.edge_vertices(e)) hits += in[v];
        if (hits != 1) return false;
      }
      found = comb;
      return true;
    });
  }
  return found;
}

std::vector<int> max_matching_bruteforce(const Hypergraph& h, int edge_bound) {
  if (h.ne() > edge_bound)
    throw BoundError("max_matching_bruteforce: |E| = " + std::to_string(h.ne()) +
                     " exceeds bound " + std::to_string(edge_bound));
  std::vector<int> best;
  for (int k = h.ne(); k > static_cast<int>(best.size()); --k) {
    for_each_combination(h.ne(), k, [&](const std::vector<int>& comb) {
      std::vector<int> hits(h.nv(), 0);
      for (int e : comb)
        for (int v : h.edge_vertices(e))
          if (++hits[v] > 1) return false;
      best = comb;
      return true;
    });
    if (!best.empty()) break;
  }
  return best;
}

std::vector<int> min_transversal_bruteforce(const Hypergraph& h, int vertex_bound) {
  if (h.nv() > vertex_bound)
    throw BoundError("min_transversal_bruteforce: |V| = " + std::to_string(h.nv()) +
                     " exceeds bound " + std::to_string(vertex_bound));
  for (int e = 0; e < h.ne(); ++e)
    if (h.edge_vertices(e).empty())
      throw InputError("hyperedge e" + std::to_string(e + 1) +
                       " is empty; no transversal exists");
  std::vector<int> result;
  bool found = false;
  for (int k = 0; k <= h.nv() && !found; ++k) {
    found = for_each_combination(h.nv(), k, [&](const std::vector<int>& comb) {
      std::vector<uint8_t> in(h.nv(), 0);
      for (int v : comb) in[v] = 1;
      for (int e = 0; e < h.ne(); ++e) {
        bool covered = false;
        for (int v : h.edge_vertices(e))
          if (in[v]) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      result = comb;
      return true;
    });
  }
  internal_check(found, "transversal enumeration found nothing");
  return result;
}

int AugmentedHypergraph::f_edge_of(int u) const {
  auto it = std::lower_bound(u_set.begin(), u_set.end(), u);
  if (it == u_set.end() || *it != u)
    throw InputError("vertex " + std::to_string(u) + " is not in U");
  return e0 + 1 + static_cast<int>(it - u_set.begin());
}

AugmentedHypergraph augment_hypergraph(const Hypergraph& h, std::vector<int> u_set) {
  std::sort(u_set.begin(), u_set.end());
  if (std::adjacent_find(u_set.begin(), u_set.end()) != u_set.end())
    throw InputError("U contains a repeated vertex");
  std::vector<uint8_t> in(h.nv(), 0);
  for (int v : u_set) {
    if (v < 0 || v >= h.nv()) throw InputError("U vertex out of range");
    in[v] = 1;
  }
  for (int e = 0; e < h.ne(); ++e) {
    int hits = 0;
    for (int v : h.edge_vertices(e)) hits += in[v];
    if (hits < 1)
      throw InputError("U is not a transversal: hyperedge e" + std::to_string(e + 1) +
                       " is uncovered");
    if (hits > 1)
      throw InputError("U is not independent: hyperedge e" + std::to_string(e + 1) +
                       " meets U " + std::to_string(hits) + " times");
  }

  AugmentedHypergraph ha;
  ha.original = h;
  ha.v1 = h.nv();
  ha.v0 = h.nv() + 1;
  ha.e0 = h.ne();
  ha.u_set = std::move(u_set);

  const int nv2 = h.nv() + 2;
  const int ne2 = h.ne() + 1 + static_cast<int>(ha.u_set.size());
  ha.hyper.incidence = make_bipartite(nv2, ne2, {});
  Graph& g2 = ha.hyper.incidence.graph;
  const Graph& g = h.incidence.graph;
  for (int v = 0; v < h.nv(); ++v) g2.set_label(v, g.label(v));
  g2.set_label(ha.v1, "v1");
  g2.set_label(ha.v0, "v0");
  for (int e = 0; e < h.ne(); ++e) g2.set_label(nv2 + e, g.label(h.nv() + e));
  g2.set_label(nv2 + ha.e0, "e0");
  for (size_t i = 0; i < ha.u_set.size(); ++i)
    g2.set_label(nv2 + ha.e0 + 1 + static_cast<int>(i), "f" + g.label(ha.u_set[i]));

  for (int e = 0; e < h.ne(); ++e)
    for (int v : h.edge_vertices(e)) g2.add_edge(v, nv2 + e);
  g2.add_edge(ha.v0, nv2 + ha.e0);
  g2.add_edge(ha.v1, nv2 + ha.e0);
  for (size_t i = 0; i < ha.u_set.size(); ++i) {
    const int f = nv2 + ha.e0 + 1 + static_cast<int>(i);
    g2.add_edge(ha.v1, f);
    g2.add_edge(ha.u_set[i], f);
  }
  return ha;
}

Verdict verify_hyper_assignment(const AugmentedHypergraph& ha, const HyperAssignment& a) {
  const Hypergraph& h = ha.hyper;
  const Graph& g = h.incidence.graph;
  const int nv = h.nv();
  if (static_cast<int>(a.sigma.size()) != nv || static_cast<int>(a.reachable.size()) != nv)
    throw InputError("hyper assignment not defined on all of V'");
  for (int v = 0; v < nv; ++v)
    if (a.sigma[v] != -1 && (a.sigma[v] < 0 || a.sigma[v] >= h.ne()))
      throw InputError("sigma value out of range at vertex " + std::to_string(v));

  Verdict verdict;
  auto fail = [&](std::string cond, int v, int other, std::string what) {
    verdict.violations.push_back({std::move(cond), v, other, std::move(what)});
  };
  auto elabel = [&](int e) { return g.label(h.edge_node(e)); };

  if (!a.in_reachable(ha.v0)) fail("R", ha.v0, kNoVertex, "v0 not in R");

  for (int v = 0; v < nv; ++v) {
    if (!a.in_reachable(v)) continue;
    const int e = a.sigma[v];
    if (e != -1) {
      if (!h.incident(v, e)) {
        fail("C1", v, e, "sigma(" + g.label(v) + ") = " + elabel(e) + " is not incident");
        continue;
      }
      for (int u : h.edge_vertices(e)) {
        if (u == v) continue;
        if (!a.in_reachable(u))
          fail("C1", v, u, "co-member " + g.label(u) + " of " + elabel(e) + " not in R");
        if (a.sigma[u] != -1)
          fail("C1", v, u,
               "co-member " + g.label(u) + " of " + elabel(e) + " has sigma != bottom");
      }
    } else {
      for (int e2 : h.vertex_edges(v)) {
        bool witnessed = false;
        for (int u : h.edge_vertices(e2))
          if (a.in_reachable(u) && a.sigma[u] != -1) {
            witnessed = true;
            break;
          }
        if (!witnessed)
          fail("C2", v, e2,
               "losing " + g.label(v) + " has hyperedge " + elabel(e2) +
                   " with no winning member");
      }
    }
  }

  // C3 via N_sigma(u) = { x != u : sigma(x) is a hyperedge incident to u }.
  for (int u = 0; u < nv; ++u) {
    std::vector<int> nsig;
    for (int x = 0; x < nv; ++x)
      if (x != u && a.sigma[x] != -1 && h.incident(u, a.sigma[x])) nsig.push_back(x);
    if (u == ha.v0) {
      if (!nsig.empty())
        fail("C3", u, nsig[0], "N_sigma(v0) not empty: contains " + g.label(nsig[0]));
    } else if (a.in_reachable(u) && nsig.size() > 1) {
      fail("C3", u, nsig[0],
           "|N_sigma(" + g.label(u) + ")| = " + std::to_string(nsig.size()) + " > 1");
    }
  }
  return verdict;
}

namespace {

void check_is_matching(const Hypergraph& h, const std::vector<int>& matching) {
  std::vector<int> hits(h.nv(), 0);
  std::vector<uint8_t> seen(h.ne(), 0);
  for (int e : matching) {
    if (e < 0 || e >= h.ne()) throw InputError("matching edge out of range");
    if (seen[e]) throw InputError("matching repeats a hyperedge");
    seen[e] = 1;
    for (int v : h.edge_vertices(e))
      if (++hits[v] > 1)
        throw InputError("matching does not split V: vertex " + std::to_string(v + 1) +
                         " is in two edges");
  }
}

}  // namespace

HyperAssignment assignment_from_matching(const AugmentedHypergraph& ha,
                                         const std::vector<int>& matching) {
  const Hypergraph& h = ha.original;
  check_is_matching(h, matching);
  std::vector<int> edge_of(h.nv(), -1);
  for (int e : matching)
    for (int v : h.edge_vertices(e)) edge_of[v] = e;
  for (int u : ha.u_set)
    if (edge_of[u] == -1)
      throw InputError("matching does not cover U: vertex " +
                       h.incidence.graph.label(u) + " uncovered");

  HyperAssignment a;
  a.reachable.assign(ha.hyper.nv(), 1);
  a.sigma.assign(ha.hyper.nv(), -1);
  a.sigma[ha.v0] = ha.e0;
  for (int u : ha.u_set) a.sigma[u] = edge_of[u];
  return a;
}

HyperAssignment assignment_from_duals(const AugmentedHypergraph& ha,
                                      const std::vector<int>& matching,
                                      const std::vector<int>& transversal,
                                      int uncovered) {
  const Hypergraph& h = ha.original;
  check_is_matching(h, matching);
  std::vector<uint8_t> in_t(h.nv(), 0);
  for (int t : transversal) {
    if (t < 0 || t >= h.nv()) throw InputError("transversal vertex out of range");
    if (in_t[t]) throw InputError("transversal repeats a vertex");
    in_t[t] = 1;
  }
  for (int e = 0; e < h.ne(); ++e) {
    bool covered = false;
    for (int v : h.edge_vertices(e)) covered = covered || in_t[v];
    if (!covered)
      throw InputError("transversal misses hyperedge e" + std::to_string(e + 1));
  }
  if (matching.size() != transversal.size())
    throw InputError("|matching| != |transversal|: either H is not balanced or "
                     "the inputs are not optimal");

  std::vector<int> edge_of(h.nv(), -1);
  for (int e : matching)
    for (int v : h.edge_vertices(e)) edge_of[v] = e;
  const bool r_in_u = std::binary_search(ha.u_set.begin(), ha.u_set.end(), uncovered);
  if (!r_in_u) throw InputError("uncovered vertex is not in U");
  if (uncovered < 0 || uncovered >= h.nv() || edge_of[uncovered] != -1)
    throw InputError("designated vertex is covered by the matching");

  // Complementary slackness, forced by |M| = |T| but validated here: each
  // transversal vertex lies in exactly one matching edge and each matching
  // edge holds exactly one transversal vertex.
  std::vector<int> t_in_edge(h.ne(), 0);
  for (int t : transversal) {
    if (edge_of[t] == -1)
      throw InputError("slackness violated: transversal vertex " +
                       h.incidence.graph.label(t) + " is unmatched");
    ++t_in_edge[edge_of[t]];
  }
  for (int e : matching)
    if (t_in_edge[e] != 1)
      throw InputError("slackness violated: matching edge e" + std::to_string(e + 1) +
                       " holds " + std::to_string(t_in_edge[e]) + " transversal vertices");

  HyperAssignment a;
  a.reachable.assign(ha.hyper.nv(), 1);
  a.sigma.assign(ha.hyper.nv(), -1);
  a.sigma[ha.v1] = ha.f_edge_of(uncovered);
  for (int t : transversal) a.sigma[t] = edge_of[t];
  return a;
}

HyperPlay initial_hyper_state(const AugmentedHypergraph& arena) {
  return HyperPlay{&arena, {arena.v0}, {arena.e0}};
}

std::vector<std::pair<int, int>> hyper_legal_moves(const HyperPlay& st) {
  const Hypergraph& h = st.arena->hyper;
  std::vector<uint8_t> v_used(h.nv(), 0), e_used(h.ne(), 0);
  for (int v : st.vs) v_used[v] = 1;
  for (int e : st.es) e_used[e] = 1;
  const int ek = st.es.back();

  std::vector<std::pair<int, int>> out;
  for (int v : h.edge_vertices(ek)) {
    if (v_used[v]) continue;
    // v may touch no hyperedge of the play other than e_k.
    bool clean = true;
    for (int e : h.vertex_edges(v))
      if (e != ek && e_used[e]) {
        clean = false;
        break;
      }
    if (!clean) continue;
    for (int e : h.vertex_edges(v)) {
      if (e_used[e]) continue;
      // e may touch no hypervertex of the play.
      bool fresh = true;
      for (int u : h.edge_vertices(e))
        if (u != v && v_used[u]) {
          fresh = false;
          break;
        }
      if (fresh) out.emplace_back(v, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

HyperStrategy hyper_strategy_from_assignment(HyperAssignment a) {
  return HyperStrategy{
      "assignment",
      [a = std::move(a)](const HyperPlay& st) -> std::optional<std::pair<int, int>> {
        const Hypergraph& h = st.arena->hyper;
        const int vk = st.vs.back();
        const int ek = st.es.back();
        for (int v : h.edge_vertices(ek)) {
          if (v == vk) continue;
          if (a.in_reachable(v) && a.sigma[v] != -1) return std::make_pair(v, a.sigma[v]);
        }
        internal_panic("no winning member on the current hyperedge (contradicts C2)");
      }};
}

HyperStrategy hyper_random_strategy(uint64_t seed) {
  auto rng = std::make_shared<SplitMix64>(seed);
  return HyperStrategy{"random",
                       [rng](const HyperPlay& st) -> std::optional<std::pair<int, int>> {
                         auto moves = hyper_legal_moves(st);
                         if (moves.empty()) return std::nullopt;
                         return moves[rng->below(static_cast<int>(moves.size()))];
                       }};
}

HyperMatchResult play_hyper_match(const HyperStrategy& p1, const HyperStrategy& p2,
                                  const AugmentedHypergraph& arena) {
  HyperPlay st = initial_hyper_state(arena);
  HyperMatchResult result;
  while (true) {
    const int mover = st.to_move();
    auto moves = hyper_legal_moves(st);
    if (moves.empty()) {
      result.winner = 3 - mover;
      break;
    }
    const HyperStrategy& strat = mover == 1 ? p1 : p2;
    auto choice = strat.move(st);
    if (!choice || std::find(moves.begin(), moves.end(), *choice) == moves.end()) {
      result.winner = 3 - mover;
      result.forfeit = true;
      result.forfeiting_player = mover;
      break;
    }
    st.vs.push_back(choice->first);
    st.es.push_back(choice->second);
  }
  result.vs = std::move(st.vs);
  result.es = std::move(st.es);
  return result;
}

namespace {

// Mover-wins search over (support mask, last hyperedge). The mask covers
// all |W'| incidence nodes: hypervertex i at bit i, hyperedge j at bit
// nv' + j.
struct HyperSolver {
  const Hypergraph& h;
  std::vector<int8_t> memo;

  explicit HyperSolver(const Hypergraph& h) : h(h) {
    memo.assign((1ULL << (h.nv() + h.ne())) * h.ne(), -1);
  }

  bool mover_wins(uint64_t mask, int ek) {
    int8_t& slot = memo[mask * h.ne() + ek];
    if (slot != -1) return slot != 0;
    bool wins = false;
    for (int v : h.edge_vertices(ek)) {
      if (mask & (1ULL << v)) continue;
      bool clean = true;
      for (int e : h.vertex_edges(v))
        if (e != ek && (mask & (1ULL << (h.nv() + e)))) {
          clean = false;
          break;
        }
      if (!clean) continue;
      for (int e : h.vertex_edges(v)) {
        if (mask & (1ULL << (h.nv() + e))) continue;
        bool fresh = true;
        for (int u : h.edge_vertices(e))
          if (u != v && (mask & (1ULL << u))) {
            fresh = false;
            break;
          }
        if (!fresh) continue;
        if (!mover_wins(mask | (1ULL << v) | (1ULL << (h.nv() + e)), e)) {
          wins = true;
          break;
        }
      }
      if (wins) break;
    }
    slot = wins ? 1 : 0;
    return wins;
  }
};

}  // namespace

int hyper_minimax(const AugmentedHypergraph& ha, int node_bound) {
  const Hypergraph& h = ha.hyper;
  const int nodes = h.nv() + h.ne();
  if (nodes > std::min(node_bound, 22))
    throw BoundError("hyper_minimax: |W'| = " + std::to_string(nodes) +
                     " exceeds bound " + std::to_string(node_bound));
  if (h.ne() == 0) return 2;  // cannot happen with e0 present; defensive
  HyperSolver solver(h);
  const uint64_t mask = (1ULL << ha.v0) | (1ULL << (h.nv() + ha.e0));
  return solver.mover_wins(mask, ha.e0) ? 1 : 2;
}

namespace {

// Backtracking search state for a full-R hyper assignment.
struct AssignSearch {
  const AugmentedHypergraph& ha;
  const Hypergraph& h;
  std::vector<int> sigma;      // -2 = unassigned, -1 = bottom, else hyperedge
  std::vector<int> incident_winners;  // per hypervertex: |N_sigma(v)| so far
  std::optional<HyperAssignment> result;

  explicit AssignSearch(const AugmentedHypergraph& ha)
      : ha(ha), h(ha.hyper), sigma(h.nv(), -2), incident_winners(h.nv(), 0) {}

  bool value_allowed(int v, int e) {
    if (e == -1) {
      // C2 can only die once every member of some incident hyperedge is
      // bottom; check hyperedges whose members are now all decided.
      for (int e2 : h.vertex_edges(v)) {
        bool maybe = false;
        for (int u : h.edge_vertices(e2)) {
          const int s = (u == v) ? -1 : sigma[u];
          if (s == -2 || s >= 0) {
            maybe = true;
            break;
          }
        }
        if (!maybe) return false;
      }
      return true;
    }
    if (!h.incident(v, e)) return false;
    if (incident_winners[v] > 0) return false;  // someone's edge holds v: C1 wants bottom
    for (int u : h.edge_vertices(e)) {
      if (u == v) continue;
      if (sigma[u] >= 0) return false;               // C1 at v
      if (u == ha.v0) return false;                  // C3: N_sigma(v0) = {}
      if (incident_winners[u] >= 1) return false;    // C3 at u
      // C1 of u's own future value is handled when u is assigned.
    }
    return true;
  }

  void apply(int v, int e, int delta) {
    if (e < 0) return;
    for (int u : h.edge_vertices(e))
      if (u != v) incident_winners[u] += delta;
  }

  bool dfs(int v) {
    if (v == h.nv()) {
      HyperAssignment a;
      a.reachable.assign(h.nv(), 1);
      a.sigma = sigma;
      if (verify_hyper_assignment(ha, a).ok()) {
        result = std::move(a);
        return true;
      }
      return false;
    }
    // Bottom first, then incident hyperedges ascending.
    std::vector<int> values{-1};
    for (int e : h.vertex_edges(v)) values.push_back(e);
    for (int e : values) {
      if (!value_allowed(v, e)) continue;
      sigma[v] = e;
      apply(v, e, +1);
      if (dfs(v + 1)) return true;
      apply(v, e, -1);
      sigma[v] = -2;
    }
    return false;
  }
};

}  // namespace

std::optional<HyperAssignment> search_assignment_bruteforce(const AugmentedHypergraph& ha,
                                                            int vertex_bound,
                                                            int edge_bound) {
  if (ha.hyper.nv() > vertex_bound)
    throw BoundError("search_assignment_bruteforce: |V'| = " +
                     std::to_string(ha.hyper.nv()) + " exceeds bound " +
                     std::to_string(vertex_bound));
  if (ha.hyper.ne() > edge_bound)
    throw BoundError("search_assignment_bruteforce: |E'| = " +
                     std::to_string(ha.hyper.ne()) + " exceeds bound " +
                     std::to_string(edge_bound));
  AssignSearch search(ha);
  search.dfs(0);
  return search.result;
}

HypergraphFile parse_hypergraph_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<std::vector<int>> edges;
  std::vector<uint8_t> edge_seen;
  std::optional<std::vector<int>> u_set;

  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (n < 0) {
      std::string kind;
      if (head != "p" || !(ss >> kind >> n >> m) || kind != "hyp" || n < 0 || m < 0)
        throw ParseError(line_no, "expected header 'p hyp <n> <m>'");
      edges.assign(static_cast<size_t>(m), {});
      edge_seen.assign(static_cast<size_t>(m), 0);
      continue;
    }
    if (head == "h") {
      std::string idx_tok;
      if (!(ss >> idx_tok) || idx_tok.empty() || idx_tok.back() != ':')
        throw ParseError(line_no, "expected 'h <j>: <vertices>'");
      idx_tok.pop_back();
      long long j = 0;
      auto [p, ec] = std::from_chars(idx_tok.data(), idx_tok.data() + idx_tok.size(), j);
      if (ec != std::errc() || p != idx_tok.data() + idx_tok.size() || j < 1 || j > m)
        throw ParseError(line_no, "hyperedge index out of range");
      if (edge_seen[j - 1]) throw ParseError(line_no, "duplicate hyperedge definition");
      edge_seen[j - 1] = 1;
      long long v = 0;
      std::vector<uint8_t> in_edge(static_cast<size_t>(n), 0);
      while (ss >> v) {
        if (v < 1 || v > n) throw ParseError(line_no, "hypervertex index out of range");
        if (in_edge[v - 1])
          throw ParseError(line_no, "repeated vertex in hyperedge");
        in_edge[v - 1] = 1;
        edges[j - 1].push_back(static_cast<int>(v - 1));
      }
      if (ss.fail() && !ss.eof()) throw ParseError(line_no, "expected vertex index");
      continue;
    }
    if (head == "U:") {
      std::vector<int> u;
      long long v = 0;
      while (ss >> v) {
        if (v < 1 || v > n) throw ParseError(line_no, "U vertex index out of range");
        u.push_back(static_cast<int>(v - 1));
      }
      if (ss.fail() && !ss.eof()) throw ParseError(line_no, "expected vertex index");
      u_set = std::move(u);
      continue;
    }
    throw ParseError(line_no, "unexpected line head '" + head + "'");
  }
  if (n < 0) throw ParseError(1, "empty input");
  for (long long j = 0; j < m; ++j)
    if (!edge_seen[j])
      throw ParseError(line_no, "hyperedge " + std::to_string(j + 1) + " never defined");
  HypergraphFile f;
  f.hypergraph = make_hypergraph(static_cast<int>(n), edges);
  f.u_set = std::move(u_set);
  return f;
}

std::string render_hypergraph(const Hypergraph& h,
                              const std::optional<std::vector<int>>& u_set) {
  std::ostringstream out;
  out << "p hyp " << h.nv() << ' ' << h.ne() << '\n';
  for (int e = 0; e < h.ne(); ++e) {
    out << "h " << e + 1 << ':';
    for (int v : h.edge_vertices(e)) out << ' ' << v + 1;
    out << '\n';
  }
  if (u_set) {
    out << "U:";
    for (int v : *u_set) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

std::string serialize_hyper_assignment(const AugmentedHypergraph& ha,
                                       const HyperAssignment& a) {
  const Graph& g = ha.hyper.incidence.graph;
  std::ostringstream out;
  for (int v = 0; v < ha.hyper.nv(); ++v) {
    out << "sigma " << g.label(v) << ' ';
    if (a.sigma[v] == -1)
      out << '_';
    else
      out << g.label(ha.hyper.edge_node(a.sigma[v]));
    out << '\n';
  }
  out << "R:";
  for (int v = 0; v < ha.hyper.nv(); ++v)
    if (a.in_reachable(v)) out << ' ' << g.label(v);
  out << '\n';
  return out.str();
}

}  // namespace matchgame
