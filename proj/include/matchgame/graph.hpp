#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matchgame {

using Vertex = int;

// "Bottom" value for partial vertex maps (sigma, tau, ...).
inline constexpr Vertex kNoVertex = -1;

// Finite simple undirected graph over dense 0-based vertex indices.
//
// The dense adjacency matrix is the source of truth; per-vertex neighbor
// lists are a derived cache kept in ascending order. Graphs are treated as
// immutable once built (builders call add_edge during construction only),
// so values can be shared freely across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  int vertex_count() const { return n_; }
  int edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[index(u, v)] != 0; }

  // Throws InputError on out-of-range endpoints, self-loops and duplicates.
  void add_edge(Vertex u, Vertex v);

  // Neighbors of v in ascending order.
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  // All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Row of the adjacency matrix for v (length vertex_count()).
  std::span<const uint8_t> adjacency_row(Vertex v) const {
    return {adj_.data() + static_cast<size_t>(v) * n_, static_cast<size_t>(n_)};
  }

  const std::string& label(Vertex v) const { return labels_[v]; }
  void set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }
  // Label -> vertex, or kNoVertex if unknown.
  Vertex vertex_by_label(std::string_view label) const;

  // Structural equality: vertex count and adjacency (labels ignored).
  bool same_structure(const Graph& other) const;

  void check_vertex(Vertex v) const;  // throws InputError when out of range

  // True iff the vertex set splits into two sides with all edges across.
  bool is_bipartite() const;

 private:
  size_t index(Vertex u, Vertex v) const {
    return static_cast<size_t>(u) * n_ + v;
  }

  int n_ = 0;
  int edge_count_ = 0;
  std::vector<uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<std::string> labels_;
};

// N_G(S) = { v in V - S : exists uv in E with u in S }, ascending.
// Throws InputError if S contains an out-of-range index.
std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> s);

// True iff seq is a path of g: pairwise-distinct vertices, consecutive ones
// adjacent. The empty sequence is a path (of length -1). Out-of-range
// indices make the answer false; *diagnostic (if given) says why.
bool is_path(const Graph& g, std::span<const Vertex> seq,
             std::string* diagnostic = nullptr);

// Length of a walk: one less than the number of vertices (-1 when empty).
inline long long path_length(std::span<const Vertex> seq) {
  return static_cast<long long>(seq.size()) - 1;
}

// Bipartite graph: side1 = [0, n1), side2 = [n1, n1+n2). Every edge joins
// side1 to side2 (builders enforce this).
struct BipartiteGraph {
  Graph graph;
  int n1 = 0;
  int n2 = 0;

  bool in_side1(Vertex v) const { return 0 <= v && v < n1; }
  bool in_side2(Vertex v) const { return n1 <= v && v < n1 + n2; }
};

// Builds a bipartite graph from side-relative edge pairs: (i, j) joins the
// i-th side1 vertex to the j-th side2 vertex (both 0-based). Default labels
// are u1..u<n1> and w1..w<n2>.
BipartiteGraph make_bipartite(int n1, int n2,
                              const std::vector<std::pair<int, int>>& edges);

// Text format (see README): `p bip <n1> <n2> <m>` then `e <i> <j>` lines,
// 1 <= i <= n1 < j <= n1+n2, `#` comments. parse(render(g)) == g.
BipartiteGraph parse_bipartite(std::string_view text);
std::string render_bipartite(const BipartiteGraph& g);

// General graph format for pre-built arenas: `p graph <n> <m>`, `e <i> <j>`
// lines and one `v0 <i>` line naming the game start vertex.
struct GraphFile {
  Graph graph;
  Vertex v0 = kNoVertex;
};
GraphFile parse_graph_file(std::string_view text);
std::string render_graph_file(const Graph& g, Vertex v0);

}  // namespace matchgame
