#pragma once
// Combinatorial invariants the regularity bounds are stated in: maximal
// cliques, free/internal vertices, longest induced path, vertex
// connectivity, and the block decomposition.

#include <utility>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

// Maximal cliques as sorted vertex lists, the list itself sorted
// lexicographically.  Isolated vertices appear as singletons.
struct CliqueSet {
  std::vector<std::vector<int>> cliques;
};

CliqueSet maximal_cliques(const Graph& g);
int clique_count(const Graph& g);   // c(G)
int clique_number(const Graph& g);  // omega(G); 0 for the empty graph

std::vector<int> free_vertices(const Graph& g);
std::vector<int> internal_vertices(const Graph& g);
int iv(const Graph& g);
int cdeg(const Graph& g, int v);  // maximal cliques through v

// Length (edge count) of a longest induced path; 0 on a single vertex,
// max over components when disconnected.
int longest_induced_path(const Graph& g);

// kappa(G): 0 when disconnected, n-1 for complete graphs, otherwise the
// smallest separator found by ascending-size subset search.
int vertex_connectivity(const Graph& g);

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // sorted vertex sets, sorted list
  std::vector<int> cut_vertices;         // sorted
  std::vector<std::pair<int, int>> bridges;  // u < v, sorted
};

BlockDecomposition block_decomposition(const Graph& g);
std::vector<int> cut_vertices(const Graph& g);
std::vector<std::pair<int, int>> bridges(const Graph& g);

}  // namespace bei
