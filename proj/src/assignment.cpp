#include "matchgame/assignment.hpp"

#include <algorithm>
#include <sstream>

#include "matchgame/errors.hpp"
#include "matchgame/rng.hpp"

namespace matchgame {

std::vector<Vertex> Assignment::reachable_list() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<Vertex>(reachable.size()); ++v)
    if (reachable[v]) out.push_back(v);
  return out;
}

AugmentedGraph augment(const BipartiteGraph& g) {
  const int n = g.n1 + g.n2;
  AugmentedGraph ga;
  ga.graph = Graph(n + 2);
  ga.v1 = n;
  ga.v0 = n + 1;
  for (Vertex v = 0; v < n; ++v) ga.graph.set_label(v, g.graph.label(v));
  ga.graph.set_label(ga.v1, "v1");
  ga.graph.set_label(ga.v0, "v0");
  for (auto [u, v] : g.graph.edges()) ga.graph.add_edge(u, v);
  for (Vertex u = 0; u < g.n1; ++u) ga.graph.add_edge(ga.v1, u);
  ga.graph.add_edge(ga.v0, ga.v1);
  ga.original = g;
  return ga;
}

AugmentedGraph make_arena(Graph graph, Vertex v0) {
  graph.check_vertex(v0);
  if (graph.degree(v0) != 1)
    throw InputError("start vertex must have exactly one neighbor, got degree " +
                     std::to_string(graph.degree(v0)));
  if (!graph.is_bipartite())
    throw InputError("arena graph is not bipartite");
  AugmentedGraph ga;
  ga.v1 = graph.neighbors(v0)[0];
  ga.v0 = v0;
  ga.graph = std::move(graph);
  return ga;
}

AugmentedGraph tightness_instance(int n) {
  if (n < 1) throw InputError("tightness instance needs n >= 1");
  AugmentedGraph ga;
  ga.graph = Graph(2 * n + 1);
  ga.v0 = 0;
  ga.v1 = 1;
  for (int i = 0; i <= n; ++i) ga.graph.set_label(i, "v" + std::to_string(i));
  for (int j = 1; j <= n; ++j) ga.graph.set_label(n + j, "w" + std::to_string(j));
  ga.graph.add_edge(0, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i + 1; ++j) ga.graph.add_edge(i, n + j);
  return ga;
}

namespace {

void validate_arena(const AugmentedGraph& ga) {
  const Graph& g = ga.graph;
  g.check_vertex(ga.v0);
  g.check_vertex(ga.v1);
  if (g.degree(ga.v0) != 1 || g.neighbors(ga.v0)[0] != ga.v1)
    throw InputError("arena invariant broken: N(v0) != {v1}");
}

AlgoState snapshot(const std::vector<Vertex>& path, const std::vector<uint8_t>& on_path,
                   const std::vector<uint8_t>& reach, const std::vector<Vertex>& sigma,
                   const std::vector<Vertex>& tau, long long iters) {
  AlgoState st;
  st.path = path;
  st.on_path = on_path;
  st.reachable = reach;
  st.sigma = sigma;
  st.tau = tau;
  st.iterations = iters;
  return st;
}

}  // namespace

AssignResult compute_assignment(const AugmentedGraph& ga, const AssignOptions& opts) {
  validate_arena(ga);
  const Graph& g = ga.graph;
  if (!g.is_bipartite())
    throw InputError("arena graph is not bipartite (the solver's termination "
                     "bound requires it)");
  const int n = g.vertex_count();
  const long long bound = 2LL * n * n + 1;

  std::vector<Vertex> sigma(n, kNoVertex);
  std::vector<Vertex> tau(n, kNoVertex);
  std::vector<uint8_t> reach(n, 0);
  std::vector<uint8_t> on_path(n, 0);
  std::vector<Vertex> path;
  path.reserve(n);
  path.push_back(ga.v0);
  path.push_back(ga.v1);
  reach[ga.v0] = reach[ga.v1] = 1;
  on_path[ga.v0] = on_path[ga.v1] = 1;

  SplitMix64 rng(opts.seed);
  AssignResult result;
  AssignStats& stats = result.stats;
  std::vector<Vertex> candidates;
  const bool observe = opts.debug_invariants || opts.observer;

  while (static_cast<long long>(path.size()) - 1 >= 1) {
    ++stats.iterations;
    internal_check(stats.iterations <= bound,
                   "iteration count exceeded 2n^2+1 (termination bound)");
    const Vertex vk = path.back();
    auto row = g.adjacency_row(vk);

    Vertex z = kNoVertex;
    if (opts.tie_break == TieBreak::kLowestIndex) {
      for (Vertex u = 0; u < n; ++u) {
        if (row[u] && !on_path[u] && sigma[u] == kNoVertex) {
          z = u;
          break;
        }
      }
    } else {
      candidates.clear();
      for (Vertex u = 0; u < n; ++u)
        if (row[u] && !on_path[u] && sigma[u] == kNoVertex) candidates.push_back(u);
      if (!candidates.empty()) z = candidates[rng.below(static_cast<int>(candidates.size()))];
    }

    TraceStep step;
    if (z == kNoVertex) {
      const Vertex y = path.back();
      path.pop_back();
      const Vertex x = path.back();
      path.pop_back();
      sigma[x] = y;
      sigma[y] = kNoVertex;
      tau[y] = x;
      tau[x] = kNoVertex;
      on_path[x] = on_path[y] = 0;
      ++stats.deletions;
      step = {TraceStep::kDeletion, x, y};
    } else {
      const Vertex w = tau[z];
      path.push_back(z);
      on_path[z] = 1;
      reach[z] = 1;
      if (w != kNoVertex) {
        path.push_back(w);
        on_path[w] = 1;
      }
      ++stats.introductions;
      step = {TraceStep::kIntroduction, z, w};
    }

    if (opts.keep_trace) result.trace.push_back(step);
    if (observe) {
      AlgoState st = snapshot(path, on_path, reach, sigma, tau, stats.iterations);
      if (opts.debug_invariants) {
        Verdict v = check_step_invariants(st, ga);
        if (!v.ok())
          internal_panic("step invariant broken at iteration " +
                         std::to_string(stats.iterations) + ": " +
                         v.violations.front().detail);
      }
      if (opts.observer) opts.observer(st, step);
    }
  }

  result.assignment.reachable = std::move(reach);
  result.assignment.sigma = std::move(sigma);
  return result;
}

Verdict verify_assignment(const AugmentedGraph& ga, const Assignment& a) {
  const Graph& g = ga.graph;
  const int n = g.vertex_count();
  if (static_cast<int>(a.sigma.size()) != n || static_cast<int>(a.reachable.size()) != n)
    throw InputError("assignment not defined on all of V'");
  for (Vertex v = 0; v < n; ++v)
    if (a.sigma[v] != kNoVertex && (a.sigma[v] < 0 || a.sigma[v] >= n))
      throw InputError("sigma value out of range at vertex " + std::to_string(v));

  Verdict verdict;
  auto fail = [&](std::string cond, Vertex v, Vertex u, std::string what) {
    verdict.violations.push_back({std::move(cond), v, u, std::move(what)});
  };

  if (!a.in_reachable(ga.v0)) fail("R", ga.v0, kNoVertex, "v0 not in R");

  for (Vertex v = 0; v < n; ++v) {
    if (!a.in_reachable(v)) continue;
    const Vertex u = a.sigma[v];
    if (u != kNoVertex) {
      if (!g.adjacent(v, u))
        fail("C1", v, u, "sigma(" + g.label(v) + ") = " + g.label(u) + " is not a neighbor");
      if (!a.in_reachable(u))
        fail("C1", v, u, "sigma(" + g.label(v) + ") = " + g.label(u) + " not in R");
      if (a.sigma[u] != kNoVertex)
        fail("C1", v, u,
             "sigma(" + g.label(v) + ") = " + g.label(u) + " but sigma(" + g.label(u) +
                 ") != bottom");
    } else {
      for (Vertex w : g.neighbors(v)) {
        if (!a.in_reachable(w))
          fail("C2", v, w, "neighbor " + g.label(w) + " of losing " + g.label(v) + " not in R");
        if (a.sigma[w] == kNoVertex)
          fail("C2", v, w,
               "neighbor " + g.label(w) + " of losing " + g.label(v) + " has sigma = bottom");
      }
    }
  }

  // C3: preimage counts over all of V', constrained at reachable targets.
  std::vector<std::vector<Vertex>> preimage(n);
  for (Vertex v = 0; v < n; ++v)
    if (a.sigma[v] != kNoVertex) preimage[a.sigma[v]].push_back(v);
  for (Vertex v = 0; v < n; ++v) {
    if (!a.in_reachable(v)) continue;
    if (preimage[v].size() > 1) {
      std::string who;
      for (Vertex p : preimage[v]) who += " " + g.label(p);
      fail("C3", v, preimage[v][0], "|sigma^-1(" + g.label(v) + ")| > 1:" + who);
    }
  }
  if (!preimage[ga.v0].empty())
    fail("C3", ga.v0, preimage[ga.v0][0],
         "sigma^-1(v0) not empty: " + g.label(preimage[ga.v0][0]) + " maps to v0");
  return verdict;
}

Certificate extract_certificate(const AugmentedGraph& ga, const Assignment& a) {
  if (!ga.original)
    throw InputError("certificate extraction needs an arena built from a "
                     "bipartite instance");
  {
    Verdict v = verify_assignment(ga, a);
    if (!v.ok())
      throw InputError("assignment fails verification: " + v.violations.front().detail);
  }
  const BipartiteGraph& orig = *ga.original;
  const int n1 = orig.n1;

  if (a.sigma[ga.v0] != kNoVertex) {
    internal_check(a.sigma[ga.v0] == ga.v1, "sigma(v0) != v1 on the matching branch");
    MatchingCert cert;
    std::vector<uint8_t> used(orig.n2, 0);
    for (Vertex u = 0; u < n1; ++u) {
      const Vertex w = a.sigma[u];
      internal_check(w != kNoVertex && orig.in_side2(w),
                     "side1 vertex not matched into side2");
      internal_check(!used[w - n1], "two side1 vertices matched to one side2 vertex");
      used[w - n1] = 1;
      cert.edges.emplace_back(u, w);
    }
    return cert;
  }

  ViolatorCert cert;
  for (Vertex u = 0; u < n1; ++u)
    if (a.in_reachable(u) && a.sigma[u] == kNoVertex) cert.subset.push_back(u);
  cert.witness_neighborhood = neighborhood(orig.graph, cert.subset);
  internal_check(cert.witness_neighborhood.size() < cert.subset.size(),
                 "violator candidate has |N(S)| >= |S|");
  return cert;
}

Verdict check_step_invariants(const AlgoState& st, const AugmentedGraph& ga) {
  const Graph& g = ga.graph;
  const int n = g.vertex_count();
  Verdict verdict;
  auto fail = [&](std::string cond, Vertex v, Vertex u, std::string what) {
    verdict.violations.push_back({std::move(cond), v, u, std::move(what)});
  };

  // (a) P is a path starting at v0 with V(P) inside R.
  std::string diag;
  if (!is_path(g, st.path, &diag)) fail("a", kNoVertex, kNoVertex, "P not a path: " + diag);
  if (!st.path.empty() && st.path.front() != ga.v0)
    fail("a", st.path.front(), kNoVertex, "P does not start at v0");
  for (Vertex v : st.path) {
    if (!st.reachable[v]) fail("a", v, kNoVertex, "path vertex " + g.label(v) + " not in R");
    if (!st.on_path[v]) fail("a", v, kNoVertex, "on_path bitmap out of sync");
  }

  // (b) valid tuple for (Q, R).
  for (Vertex u = 0; u < n; ++u)
    if ((st.sigma[u] != kNoVertex || st.tau[u] != kNoVertex) && !st.reachable[u])
      fail("b", u, kNoVertex, "sigma/tau set at " + g.label(u) + " outside R");
  std::vector<uint8_t> in_q(n, 0);
  for (Vertex v = 0; v < n; ++v) in_q[v] = st.reachable[v] && !st.on_path[v];
  for (Vertex u = 0; u < n; ++u) {
    if (!in_q[u]) continue;
    const Vertex s = st.sigma[u];
    const Vertex t = st.tau[u];
    if (s != kNoVertex && t == kNoVertex) {
      // u should be the sigma-side of a match {u, s}.
      if (s < 0 || s >= n || !in_q[s])
        fail("b", u, s, "match partner of " + g.label(u) + " not in Q");
      else if (st.sigma[s] != kNoVertex || st.tau[s] != u)
        fail("b", u, s, "pair (" + g.label(u) + ", " + g.label(s) + ") is not a match");
    } else if (s == kNoVertex && t != kNoVertex) {
      // u should be the tau-side of a match {t, u}.
      if (t < 0 || t >= n || !in_q[t] || st.sigma[t] != u || st.tau[t] != kNoVertex)
        fail("b", u, t, "tau-side " + g.label(u) + " has no matching sigma-side");
    } else {
      fail("b", u, kNoVertex,
           "Q vertex " + g.label(u) + " has sigma/tau pattern outside any match");
    }
  }

  // (c) and (d): assignment conditions restricted to Q.
  for (Vertex v = 0; v < n; ++v) {
    if (!in_q[v]) continue;
    const Vertex u = st.sigma[v];
    if (u != kNoVertex) {
      if (!g.adjacent(v, u) || !in_q[u] || st.sigma[u] != kNoVertex)
        fail("c", v, u, "sigma(" + g.label(v) + ") = " + g.label(u) + " breaks condition (c)");
    } else {
      for (Vertex w : g.neighbors(v)) {
        if (st.on_path[w]) continue;
        if (!in_q[w] || st.sigma[w] == kNoVertex)
          fail("d", v, w,
               "losing " + g.label(v) + " has off-path neighbor " + g.label(w) +
                   " breaking condition (d)");
      }
    }
  }
  return verdict;
}

namespace {

std::string sigma_token(const Graph& g, Vertex u) {
  return u == kNoVertex ? "_" : g.label(u);
}

}  // namespace

std::string serialize_assignment(const AugmentedGraph& ga, const Assignment& a,
                                 const AssignStats& stats) {
  const Graph& g = ga.graph;
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out << "sigma " << g.label(v) << ' ' << sigma_token(g, a.sigma[v]) << '\n';
  out << "R:";
  for (Vertex v : a.reachable_list()) out << ' ' << g.label(v);
  out << '\n';
  out << "stats iterations=" << stats.iterations << '\n';
  return out.str();
}

std::string serialize_trace(const AugmentedGraph& ga, const std::vector<TraceStep>& trace) {
  const Graph& g = ga.graph;
  std::ostringstream out;
  long long s = 0;
  for (const TraceStep& step : trace) {
    ++s;
    if (step.kind == TraceStep::kIntroduction)
      out << "step " << s << " intro " << g.label(step.x) << ' ' << sigma_token(g, step.y)
          << '\n';
    else
      out << "step " << s << " del " << g.label(step.x) << ' ' << g.label(step.y) << '\n';
  }
  return out.str();
}

Assignment parse_assignment(const AugmentedGraph& ga, std::string_view text) {
  const Graph& g = ga.graph;
  Assignment a;
  a.reachable.assign(g.vertex_count(), 0);
  a.sigma.assign(g.vertex_count(), kNoVertex);

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto lookup = [&](const std::string& label) {
    Vertex v = g.vertex_by_label(label);
    if (v == kNoVertex) throw ParseError(line_no, "unknown vertex label '" + label + "'");
    return v;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string head;
    if (!(ss >> head)) continue;
    if (head == "sigma") {
      std::string v_tok, u_tok;
      if (!(ss >> v_tok >> u_tok)) throw ParseError(line_no, "expected 'sigma <v> <u|_>'");
      Vertex v = lookup(v_tok);
      a.sigma[v] = (u_tok == "_") ? kNoVertex : lookup(u_tok);
    } else if (head == "R:") {
      std::string v_tok;
      while (ss >> v_tok) a.reachable[lookup(v_tok)] = 1;
    } else if (head == "stats" || head == "step") {
      continue;  // informational lines from serialize_* output
    } else {
      throw ParseError(line_no, "unexpected line head '" + head + "'");
    }
  }
  return a;
}

}  // namespace matchgame
