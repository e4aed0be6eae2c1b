#include "matchgame/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "matchgame/errors.hpp"

namespace matchgame {

Graph::Graph(int vertex_count) : n_(vertex_count) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  nbrs_.resize(n_);
  labels_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) labels_[v] = std::to_string(v + 1);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex index " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[index(u, v)] = adj_[index(v, u)] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edge_count_;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex Graph::vertex_by_label(std::string_view label) const {
  for (Vertex v = 0; v < n_; ++v)
    if (labels_[v] == label) return v;
  return kNoVertex;
}

bool Graph::same_structure(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

bool Graph::is_bipartite() const {
  std::vector<int> color(n_, -1);
  std::deque<Vertex> queue;
  for (Vertex start = 0; start < n_; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : nbrs_[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<Vertex> neighborhood(const Graph& g, std::span<const Vertex> s) {
  std::vector<uint8_t> in_s(g.vertex_count(), 0);
  for (Vertex v : s) {
    g.check_vertex(v);
    in_s[v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_s[v]) continue;
    for (Vertex u : g.neighbors(v)) {
      if (in_s[u]) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

bool is_path(const Graph& g, std::span<const Vertex> seq, std::string* diagnostic) {
  std::vector<uint8_t> seen(g.vertex_count(), 0);
  for (size_t i = 0; i < seq.size(); ++i) {
    Vertex v = seq[i];
    if (v < 0 || v >= g.vertex_count()) {
      if (diagnostic) *diagnostic = "vertex index " + std::to_string(v) + " out of range";
      return false;
    }
    if (seen[v]) {
      if (diagnostic) *diagnostic = "repeated vertex " + std::to_string(v);
      return false;
    }
    seen[v] = 1;
    if (i > 0 && !g.adjacent(seq[i - 1], v)) {
      if (diagnostic)
        *diagnostic = "consecutive vertices " + std::to_string(seq[i - 1]) + " and " +
                      std::to_string(v) + " not adjacent";
      return false;
    }
  }
  return true;
}

BipartiteGraph make_bipartite(int n1, int n2,
                              const std::vector<std::pair<int, int>>& edges) {
  if (n1 < 0 || n2 < 0) throw InputError("negative side size");
  BipartiteGraph b;
  b.n1 = n1;
  b.n2 = n2;
  b.graph = Graph(n1 + n2);
  for (int i = 0; i < n1; ++i) b.graph.set_label(i, "u" + std::to_string(i + 1));
  for (int j = 0; j < n2; ++j) b.graph.set_label(n1 + j, "w" + std::to_string(j + 1));
  for (auto [i, j] : edges) {
    if (i < 0 || i >= n1) throw InputError("side1 index " + std::to_string(i) + " out of range");
    if (j < 0 || j >= n2) throw InputError("side2 index " + std::to_string(j) + " out of range");
    b.graph.add_edge(i, n1 + j);
  }
  return b;
}

namespace {

// Line-oriented tokenizer shared by the parsers: strips `#` comments and
// blank lines, tracking 1-based line numbers for errors.
struct LineReader {
  explicit LineReader(std::string_view text) : text(text) {}

  // Returns false at end of input; otherwise fills tokens of the next
  // non-empty line.
  bool next(std::vector<std::string>& tokens, int& line_no) {
    while (pos < text.size()) {
      size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_;
      if (size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      tokens.clear();
      std::istringstream ss{std::string(line)};
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) {
        line_no = line_;
        return true;
      }
    }
    return false;
  }

  std::string_view text;
  size_t pos = 0;
  int line_ = 0;
};

long long parse_int(const std::string& tok, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected integer, got '" + tok + "'");
  return value;
}

}  // namespace

BipartiteGraph parse_bipartite(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) throw ParseError(1, "empty input");
  if (tok.size() != 5 || tok[0] != "p" || tok[1] != "bip")
    throw ParseError(line, "expected header 'p bip <n1> <n2> <m>'");
  long long n1 = parse_int(tok[2], line);
  long long n2 = parse_int(tok[3], line);
  long long m = parse_int(tok[4], line);
  if (n1 < 0 || n2 < 0 || m < 0) throw ParseError(line, "negative count in header");

  BipartiteGraph b = make_bipartite(static_cast<int>(n1), static_cast<int>(n2), {});
  long long seen = 0;
  while (reader.next(tok, line)) {
    if (tok[0] != "e" || tok.size() != 3)
      throw ParseError(line, "expected 'e <i> <j>'");
    long long i = parse_int(tok[1], line);
    long long j = parse_int(tok[2], line);
    if (i < 1 || i > n1)
      throw ParseError(line, "endpoint " + std::to_string(i) + " not in side1 range [1, " +
                                 std::to_string(n1) + "]");
    if (j <= n1 || j > n1 + n2)
      throw ParseError(line, "endpoint " + std::to_string(j) + " not in side2 range [" +
                                 std::to_string(n1 + 1) + ", " + std::to_string(n1 + n2) + "]");
    if (b.graph.adjacent(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)))
      throw ParseError(line, "duplicate edge " + std::to_string(i) + " " + std::to_string(j));
    b.graph.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    ++seen;
  }
  if (seen != m)
    throw ParseError(line == 0 ? 1 : line,
                     "header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
  return b;
}

std::string render_bipartite(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "p bip " << g.n1 << ' ' << g.n2 << ' ' << g.graph.edge_count() << '\n';
  for (auto [u, v] : g.graph.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

GraphFile parse_graph_file(std::string_view text) {
  LineReader reader(text);
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) throw ParseError(1, "empty input");
  if (tok.size() != 4 || tok[0] != "p" || tok[1] != "graph")
    throw ParseError(line, "expected header 'p graph <n> <m>'");
  long long n = parse_int(tok[2], line);
  long long m = parse_int(tok[3], line);
  if (n < 0 || m < 0) throw ParseError(line, "negative count in header");

  GraphFile f;
  f.graph = Graph(static_cast<int>(n));
  long long seen = 0;
  while (reader.next(tok, line)) {
    if (tok[0] == "v0") {
      if (tok.size() != 2) throw ParseError(line, "expected 'v0 <i>'");
      long long i = parse_int(tok[1], line);
      if (i < 1 || i > n) throw ParseError(line, "v0 index out of range");
      if (f.v0 != kNoVertex) throw ParseError(line, "duplicate v0 line");
      f.v0 = static_cast<Vertex>(i - 1);
      continue;
    }
    if (tok[0] != "e" || tok.size() != 3)
      throw ParseError(line, "expected 'e <i> <j>' or 'v0 <i>'");
    long long i = parse_int(tok[1], line);
    long long j = parse_int(tok[2], line);
    if (i < 1 || i > n || j < 1 || j > n) throw ParseError(line, "edge endpoint out of range");
    if (i == j) throw ParseError(line, "self-loop");
    if (f.graph.adjacent(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1)))
      throw ParseError(line, "duplicate edge");
    f.graph.add_edge(static_cast<Vertex>(i - 1), static_cast<Vertex>(j - 1));
    ++seen;
  }
  if (seen != m)
    throw ParseError(line == 0 ? 1 : line,
                     "header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(seen));
  if (f.v0 == kNoVertex) throw ParseError(line == 0 ? 1 : line, "missing 'v0 <i>' line");
  return f;
}

std::string render_graph_file(const Graph& g, Vertex v0) {
  std::ostringstream out;
  out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  out << "v0 " << v0 + 1 << '\n';
  return out.str();
}

}  // namespace matchgame
