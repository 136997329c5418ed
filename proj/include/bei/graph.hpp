#pragma once
// Labeled simple graphs on vertices 1..n and the surgeries used throughout:
// deletion, neighborhood/edge completion, join, gluing at free vertices.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bei {

// Adjacency kept as per-vertex bitmasks (bit k = vertex k+1), so n <= 64.
// Everything downstream works at desk scale (n <= ~25).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  std::uint64_t nbr_mask(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  int edge_count() const;

  // Label-sensitive equality; isomorphism is a separate utility.
  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  void check_vertex(int v) const;  // throws std::out_of_range

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Operations that shrink the vertex set relabel to 1..m and report the
// original label of each surviving vertex: labels[i] = old label of i+1.
struct Relabeled {
  Graph graph;
  std::vector<int> labels;
};

Relabeled induced_subgraph(const Graph& g, const std::vector<int>& verts);
Relabeled delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// G_v: make N(v) a clique.  G_e (e = {u,v} not an edge): make N(u) and N(v)
// cliques; e itself is not added.
Graph neighborhood_completion(const Graph& g, int v);
Graph edge_completion(const Graph& g, int u, int v);

// Disjoint union plus all cross edges; b's labels shift up by a.n().
Graph graph_join(const Graph& a, const Graph& b);

// Identify free vertex va of a with free vertex vb of b.  a keeps its
// labels; b's other vertices follow in ascending order of their old labels.
Graph glue_at_free_vertices(const Graph& a, int va, const Graph& b, int vb);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, std::uint64_t mask);
// Free (simplicial): N(v) induces a clique.  An isolated vertex is free.
bool is_free_vertex(const Graph& g, int v);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 1

// Text format: first line n, then one "u v" line per edge, 1-based.
Graph parse_adjacency_text(const std::string& text);
std::string to_adjacency_text(const Graph& g);

// graph6, short form only (n <= 62).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);

Graph read_graph_file(const std::string& path);  // sniffs the two formats

// Brute-force utilities for tests and the harness (n <= 10).
bool isomorphic(const Graph& a, const Graph& b);
Graph canonical_form(const Graph& g);
// Stable identifier: canonical graph6 for n <= 10, labeled graph6 beyond.
std::string canonical_key(const Graph& g);

}  // namespace bei
