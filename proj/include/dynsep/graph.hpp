#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dynsep/bitset.hpp"

namespace dynsep {

// Contract violations on graph updates (deleting an absent edge, inserting a
// present one, out-of-range ids) are signaled, never silent.
struct graph_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Undirected edge with canonical ordering u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw graph_error("self-loop edge {" + std::to_string(a) + "}");
  }

  bool has(int x) const { return u == x || v == x; }
  int other(int x) const { return u == x ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    return static_cast<std::size_t>(e.u) * 1000003u + static_cast<std::size_t>(e.v);
  }
};

// Mutable undirected simple graph with per-vertex adjacency bitsets.
// Vertices are ids 0..n-1 with fixed capacity n; vertex deletion is modeled
// by deleting all incident edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)), deg_(n, 0) {}

  static Graph from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const Edge& e : edges) g.insert_edge(e);
    return g;
  }

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(int v) const { return deg_[v]; }
  const Bitset& row(int v) const { return adj_[v]; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  void insert_edge(const Edge& e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (adj_[e.u].test(e.v))
      throw graph_error("insert of present edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}");
    adj_[e.u].set(e.v);
    adj_[e.v].set(e.u);
    ++deg_[e.u];
    ++deg_[e.v];
    ++m_;
  }

  void delete_edge(const Edge& e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (!adj_[e.u].test(e.v))
      throw graph_error("delete of absent edge {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}");
    adj_[e.u].reset(e.v);
    adj_[e.v].reset(e.u);
    --deg_[e.u];
    --deg_[e.v];
    --m_;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    return adj_[v].to_vector();
  }

  // Smallest common neighbor of u and v, if any.
  std::optional<int> common_neighbor(int u, int v) const {
    int w = adj_[u].first_and(adj_[v]);
    return w == -1 ? std::nullopt : std::optional<int>(w);
  }

  std::optional<int> common_neighbor_masked(int u, int v, const Bitset& mask) const {
    int w = adj_[u].first_and3(adj_[v], mask);
    return w == -1 ? std::nullopt : std::optional<int>(w);
  }

  int triangle_count_at(int u, int v) const { return adj_[u].count_and(adj_[v]); }

  // Smallest vertex id among the minimum-degree vertices.
  int min_degree_vertex() const {
    int best = 0;
    for (int v = 1; v < n_; ++v)
      if (deg_[v] < deg_[best]) best = v;
    return best;
  }

  // Induced subgraph on s (sorted ascending, deduplicated). Returns the graph
  // and the map from new ids to original ids.
  std::pair<Graph, std::vector<int>> induced(std::vector<int> s) const {
    normalize_subset(s);
    Graph h(static_cast<int>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (adj_[s[a]].test(s[b])) h.insert_edge(Edge(static_cast<int>(a), static_cast<int>(b)));
    return {std::move(h), std::move(s)};
  }

  // Complement of the induced subgraph on s: pair (a,b) is an edge iff the
  // corresponding original pair is not an edge.
  std::pair<Graph, std::vector<int>> complement_induced(std::vector<int> s) const {
    normalize_subset(s);
    Graph h(static_cast<int>(s.size()));
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (!adj_[s[a]].test(s[b])) h.insert_edge(Edge(static_cast<int>(a), static_cast<int>(b)));
    return {std::move(h), std::move(s)};
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw graph_error("vertex id " + std::to_string(v) + " out of range [0," +
                        std::to_string(n_) + ")");
  }

  void normalize_subset(std::vector<int>& s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) check_vertex(v);
  }

  int n_ = 0;
  long long m_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
};

// Edge-list text format shared by all CLI subcommands: first line `n m`,
// then one `u v` pair per line, 0-indexed.
inline Graph read_graph(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m)) throw graph_error("bad graph header: expected `n m`");
  if (n < 0 || m < 0) throw graph_error("bad graph header: negative count");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw graph_error("bad edge line " + std::to_string(i));
    g.insert_edge(Edge(u, v));
  }
  return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace dynsep
