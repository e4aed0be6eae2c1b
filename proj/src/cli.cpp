#include "matchgame/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchgame/assignment.hpp"
#include "matchgame/errors.hpp"
#include "matchgame/game.hpp"
#include "matchgame/graph.hpp"
#include "matchgame/hungarian.hpp"
#include "matchgame/hypergraph.hpp"
#include "matchgame/oracle.hpp"

namespace matchgame {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

int env_bound(const char* name, int fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  char* end = nullptr;
  long parsed = std::strtol(value, &end, 10);
  if (*end != '\0' || parsed < 1)
    throw InputError(std::string(name) + " must be a positive integer");
  return static_cast<int>(parsed);
}

std::string_view first_token(std::string_view text) {
  size_t start = text.find_first_not_of(" \t\r\n");
  while (start != std::string_view::npos && text[start] == '#') {
    size_t eol = text.find('\n', start);
    if (eol == std::string_view::npos) return {};
    start = text.find_first_not_of(" \t\r\n", eol);
  }
  if (start == std::string_view::npos) return {};
  size_t end = text.find_first_of(" \t\r\n", start);
  return text.substr(start, end - start);
}

// Loads either a bipartite instance (augmented on the fly) or a pre-built
// arena, keyed by the header.
AugmentedGraph load_arena(const std::string& path, std::istream& in) {
  const std::string text = read_input(path, in);
  std::string_view next = first_token(text);
  if (next != "p") throw InputError("unrecognized input format in '" + path + "'");
  std::istringstream header{text.substr(text.find('p'))};
  std::string p, kind;
  header >> p >> kind;
  if (kind == "bip") return augment(parse_bipartite(text));
  if (kind == "graph") {
    GraphFile f = parse_graph_file(text);
    return make_arena(std::move(f.graph), f.v0);
  }
  throw InputError("expected a 'p bip' or 'p graph' instance, got 'p " + kind + "'");
}

AssignOptions options_from_flags(const std::string& tie_break, uint64_t seed, bool trace,
                                 bool check_invariants) {
  AssignOptions opts;
  if (tie_break == "lowest")
    opts.tie_break = TieBreak::kLowestIndex;
  else if (tie_break == "random")
    opts.tie_break = TieBreak::kSeededRandom;
  else
    throw InputError("--tie-break must be 'lowest' or 'random'");
  opts.seed = seed;
  opts.keep_trace = trace;
  opts.debug_invariants = check_invariants;
  return opts;
}

Strategy make_strategy(const std::string& kind, uint64_t seed, int minimax_bound,
                       std::istream& in, const AugmentedGraph& arena) {
  if (kind == "assign") {
    AssignResult r = compute_assignment(arena);
    return strategy_from_assignment(std::move(r.assignment));
  }
  if (kind == "random") return random_strategy(seed);
  if (kind == "minimax") return minimax_strategy(minimax_bound);
  if (kind == "stdin") {
    return Strategy{"stdin", [&in, &arena](const PlayState&) -> std::optional<Vertex> {
                      std::string label;
                      if (!(in >> label)) return std::nullopt;
                      Vertex v = arena.graph.vertex_by_label(label);
                      if (v == kNoVertex) return std::nullopt;
                      return v;
                    }};
  }
  throw InputError("unknown strategy '" + kind + "' (assign|random|minimax|stdin)");
}

int cmd_assign(const std::string& path, const std::string& tie_break, uint64_t seed,
               bool trace, bool check_invariants, bool json, std::istream& in,
               std::ostream& out) {
  AugmentedGraph arena = load_arena(path, in);
  AssignOptions opts = options_from_flags(tie_break, seed, trace, check_invariants);
  AssignResult r = compute_assignment(arena, opts);
  Verdict verdict = verify_assignment(arena, r.assignment);
  internal_check(verdict.ok(), "solver output failed verification");
  if (json) {
    nlohmann::json j;
    for (Vertex v = 0; v < arena.graph.vertex_count(); ++v)
      j["sigma"][arena.graph.label(v)] =
          r.assignment.sigma[v] == kNoVertex
              ? nlohmann::json()
              : nlohmann::json(arena.graph.label(r.assignment.sigma[v]));
    for (Vertex v : r.assignment.reachable_list()) j["R"].push_back(arena.graph.label(v));
    j["iterations"] = r.stats.iterations;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << serialize_assignment(arena, r.assignment, r.stats);
  if (trace) out << serialize_trace(arena, r.trace);
  return 0;
}

int cmd_certificate(const std::string& path, bool json, std::istream& in,
                    std::ostream& out) {
  const std::string text = read_input(path, in);
  AugmentedGraph arena = augment(parse_bipartite(text));
  AssignResult r = compute_assignment(arena);
  Certificate cert = extract_certificate(arena, r.assignment);
  const Graph& g = arena.graph;
  if (const auto* matching = std::get_if<MatchingCert>(&cert)) {
    if (json) {
      nlohmann::json j;
      j["kind"] = "matching";
      for (auto [u, w] : matching->edges)
        j["edges"].push_back({g.label(u), g.label(w)});
      out << j.dump(2) << '\n';
      return 0;
    }
    out << "MATCHING\n";
    for (auto [u, w] : matching->edges) out << g.label(u) << ' ' << g.label(w) << '\n';
    return 0;
  }
  const auto& violator = std::get<ViolatorCert>(cert);
  if (json) {
    nlohmann::json j;
    j["kind"] = "violator";
    for (Vertex v : violator.subset) j["S"].push_back(g.label(v));
    for (Vertex v : violator.witness_neighborhood) j["N"].push_back(g.label(v));
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "VIOLATOR\n";
  out << "S:";
  for (Vertex v : violator.subset) out << ' ' << g.label(v);
  out << "\nN(S):";
  for (Vertex v : violator.witness_neighborhood) out << ' ' << g.label(v);
  out << '\n';
  return 0;
}

int cmd_verify_assign(const std::string& graph_path, const std::string& assign_path,
                      std::istream& in, std::ostream& out) {
  AugmentedGraph arena = load_arena(graph_path, in);
  Assignment a = parse_assignment(arena, read_input(assign_path, in));
  Verdict verdict = verify_assignment(arena, a);
  if (verdict.ok()) {
    out << "ok\n";
    return 0;
  }
  const Graph& g = arena.graph;
  for (const Violation& v : verdict.violations) {
    out << v.condition << " violated";
    if (v.vertex != kNoVertex) out << " at " << g.label(v.vertex);
    if (v.neighbor != kNoVertex) out << " (neighbor " << g.label(v.neighbor) << ")";
    out << '\n';
  }
  return 1;
}

int cmd_play(const std::string& path, const std::string& p1_kind, const std::string& p2_kind,
             uint64_t seed, std::istream& in, std::ostream& out) {
  AugmentedGraph arena = load_arena(path, in);
  const int minimax_bound = env_bound("MATCHGAME_MINIMAX_BOUND", 14);
  Strategy p1 = make_strategy(p1_kind, seed, minimax_bound, in, arena);
  Strategy p2 = make_strategy(p2_kind, seed + 1, minimax_bound, in, arena);
  MatchResult r = play_match(p1, p2, arena);
  for (size_t i = 0; i < r.transcript.size(); ++i)
    out << (i ? " " : "") << arena.graph.label(r.transcript[i]);
  out << '\n';
  if (r.forfeit) out << "forfeit " << r.forfeiting_player << '\n';
  out << "winner " << r.winner << '\n';
  return 0;
}

int cmd_solve(const std::string& path, bool json, std::istream& in, std::ostream& out) {
  AugmentedGraph arena = load_arena(path, in);
  const int value = minimax_value(arena, env_bound("MATCHGAME_MINIMAX_BOUND", 14));
  if (json) {
    nlohmann::json j;
    j["value"] = value;
    out << j.dump(2) << '\n';
  } else {
    out << "value " << value << '\n';
  }
  return 0;
}

int cmd_bench_tightness(int n_max, std::ostream& out) {
  if (n_max < 1) throw InputError("--n-max must be >= 1");
  out << "# n vertices iterations bound\n";
  for (int n = 1; n <= n_max; ++n) {
    AugmentedGraph arena = tightness_instance(n);
    AssignResult r = compute_assignment(arena);
    const long long vertices = 2LL * n + 1;
    const long long bound = 2 * vertices * vertices + 1;
    internal_check(r.stats.iterations <= bound, "tightness run exceeded 2n^2+1");
    out << n << ' ' << vertices << ' ' << r.stats.iterations << ' ' << bound << '\n';
  }
  return 0;
}

int cmd_maxweight(const std::string& path, bool json, std::istream& in, std::ostream& out) {
  WeightedBipartiteGraph g = parse_weighted(read_input(path, in));
  WeightedMatchingResult r = max_weight_matching(g);
  if (json) {
    nlohmann::json j;
    j["weight"] = r.total_weight;
    for (auto [u, v] : r.matching) j["matching"].push_back({u + 1, v + 1});
    j["y1"] = r.duals.y1;
    j["y2"] = r.duals.y2;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "weight " << r.total_weight << '\n';
  for (auto [u, v] : r.matching) out << "match " << u + 1 << ' ' << v + 1 << '\n';
  out << "y1";
  for (long long y : r.duals.y1) out << ' ' << y;
  out << "\ny2";
  for (long long y : r.duals.y2) out << ' ' << y;
  out << '\n';
  return 0;
}

struct HyperInstance {
  Hypergraph h;
  std::vector<int> u_set;
};

HyperInstance load_hyper(const std::string& path, std::istream& in, bool need_u) {
  HypergraphFile f = parse_hypergraph_file(read_input(path, in));
  HyperInstance inst;
  inst.h = std::move(f.hypergraph);
  if (f.u_set) {
    inst.u_set = *f.u_set;
  } else if (need_u) {
    auto u = find_independent_transversal(inst.h, env_bound("MATCHGAME_SUBSET_BOUND", 16));
    if (!u) throw InputError("instance has no independent transversal and no U: line");
    inst.u_set = *u;
  }
  return inst;
}

int cmd_hyp_balanced(const std::string& path, std::istream& in, std::ostream& out) {
  HyperInstance inst = load_hyper(path, in, false);
  BalanceVerdict verdict =
      is_balanced_bruteforce(inst.h, env_bound("MATCHGAME_BALANCE_BOUND", 16));
  if (verdict.balanced) {
    out << "BALANCED\n";
    return 0;
  }
  out << "UNBALANCED\nwitness:";
  for (int node : verdict.witness) out << ' ' << inst.h.incidence.graph.label(node);
  out << '\n';
  return 0;
}

int cmd_hyp_assign(const std::string& path, std::istream& in, std::ostream& out) {
  HyperInstance inst = load_hyper(path, in, true);
  AugmentedHypergraph ha = augment_hypergraph(inst.h, inst.u_set);
  const int subset_bound = env_bound("MATCHGAME_SUBSET_BOUND", 16);

  std::string method;
  std::optional<HyperAssignment> a;
  std::vector<int> matching = max_matching_bruteforce(inst.h, subset_bound);
  std::vector<uint8_t> covered(inst.h.nv(), 0);
  for (int e : matching)
    for (int v : inst.h.edge_vertices(e)) covered[v] = 1;
  bool covers_u = true;
  for (int u : ha.u_set) covers_u = covers_u && covered[u];

  if (covers_u) {
    method = "matching";
    a = assignment_from_matching(ha, matching);
  } else {
    std::vector<int> transversal = min_transversal_bruteforce(inst.h, subset_bound);
    if (transversal.size() == matching.size()) {
      method = "duals";
      int uncovered = -1;
      for (int u : ha.u_set)
        if (!covered[u]) {
          uncovered = u;
          break;
        }
      a = assignment_from_duals(ha, matching, transversal, uncovered);
    } else {
      // nu != tau: H is not balanced, the constructions do not apply.
      method = "search";
      a = search_assignment_bruteforce(ha, env_bound("MATCHGAME_SEARCH_BOUND", 10),
                                       env_bound("MATCHGAME_SEARCH_BOUND", 10));
      if (!a) throw InputError("no assignment with R = V' exists for this instance");
    }
  }
  Verdict verdict = verify_hyper_assignment(ha, *a);
  internal_check(verdict.ok(), "constructed hyper assignment failed verification");
  out << "method " << method << '\n';
  out << serialize_hyper_assignment(ha, *a);
  out << "verify ok\n";
  return 0;
}

int cmd_hyp_solve(const std::string& path, std::istream& in, std::ostream& out) {
  HyperInstance inst = load_hyper(path, in, true);
  AugmentedHypergraph ha = augment_hypergraph(inst.h, inst.u_set);
  const int value = hyper_minimax(ha, env_bound("MATCHGAME_HYPER_MINIMAX_BOUND", 18));
  out << "value " << value << '\n';

  const int subset_bound = env_bound("MATCHGAME_SUBSET_BOUND", 16);
  std::vector<int> matching = max_matching_bruteforce(inst.h, subset_bound);
  std::vector<uint8_t> covered(inst.h.nv(), 0);
  for (int e : matching)
    for (int v : inst.h.edge_vertices(e)) covered[v] = 1;
  bool covers_u = true;
  for (int u : ha.u_set) covers_u = covers_u && covered[u];
  out << "covers-U " << (covers_u ? "yes" : "no") << '\n';

  if ((value == 2) == covers_u) {
    out << "thm4 ok\n";
    return 0;
  }
  BalanceVerdict balance =
      is_balanced_bruteforce(inst.h, env_bound("MATCHGAME_BALANCE_BOUND", 16));
  if (!balance.balanced) {
    out << "thm4 not-applicable (instance not balanced)\n";
    return 0;
  }
  out << "thm4 VIOLATED\n";
  return 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"game-theoretic bipartite matching toolkit"};
  app.require_subcommand(1);

  std::string path, assign_path, tie_break = "lowest", p1_kind, p2_kind;
  uint64_t seed = 0;
  bool trace = false, check_invariants = false, json = false;
  int n_max = 0;

  CLI::App* assign = app.add_subcommand("assign", "compute an assignment");
  assign->add_option("file", path)->required();
  assign->add_option("--tie-break", tie_break)->check(CLI::IsMember({"lowest", "random"}));
  assign->add_option("--seed", seed);
  assign->add_flag("--trace", trace);
  assign->add_flag("--check-invariants", check_invariants);
  assign->add_flag("--json", json);

  CLI::App* certificate = app.add_subcommand("certificate", "matching or Hall violator");
  certificate->add_option("file", path)->required();
  certificate->add_flag("--json", json);

  CLI::App* verify = app.add_subcommand("verify-assign", "check an assignment file");
  verify->add_option("graph", path)->required();
  verify->add_option("assignment", assign_path)->required();

  CLI::App* play = app.add_subcommand("play", "play the path game");
  play->add_option("file", path)->required();
  play->add_option("--p1", p1_kind)->required();
  play->add_option("--p2", p2_kind)->required();
  play->add_option("--seed", seed);

  CLI::App* solve = app.add_subcommand("solve", "exact game value");
  solve->add_option("file", path)->required();
  solve->add_flag("--json", json);

  CLI::App* bench = app.add_subcommand("bench-tightness", "iteration counts on the worst-case family");
  bench->add_option("--n-max", n_max)->required();

  CLI::App* maxweight = app.add_subcommand("maxweight", "maximum-weight matching");
  maxweight->add_option("file", path)->required();
  maxweight->add_flag("--json", json);

  CLI::App* hyp = app.add_subcommand("hyp", "hypergraph tools");
  hyp->require_subcommand(1);
  CLI::App* hyp_balanced = hyp->add_subcommand("balanced", "balancedness verdict");
  hyp_balanced->add_option("file", path)->required();
  CLI::App* hyp_assign = hyp->add_subcommand("assign", "construct a hyper assignment");
  hyp_assign->add_option("file", path)->required();
  CLI::App* hyp_solve = hyp->add_subcommand("solve", "hypergraph game value");
  hyp_solve->add_option("file", path)->required();

  std::vector<const char*> argv;
  argv.push_back("matchgame");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    int code = app.exit(e, sink, err);
    out << sink.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*assign)
      return cmd_assign(path, tie_break, seed, trace, check_invariants, json, in, out);
    if (*certificate) return cmd_certificate(path, json, in, out);
    if (*verify) return cmd_verify_assign(path, assign_path, in, out);
    if (*play) return cmd_play(path, p1_kind, p2_kind, seed, in, out);
    if (*solve) return cmd_solve(path, json, in, out);
    if (*bench) return cmd_bench_tightness(n_max, out);
    if (*maxweight) return cmd_maxweight(path, json, in, out);
    if (*hyp_balanced) return cmd_hyp_balanced(path, in, out);
    if (*hyp_assign) return cmd_hyp_assign(path, in, out);
    if (*hyp_solve) return cmd_hyp_solve(path, in, out);
    err << "error: no command selected\n";
    return 2;
  } catch (const BoundError& e) {
    err << "refused: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace matchgame
