#pragma once
// Named graph families and their recognizers: chordality, leaf orders,
// closed labelings, interval-form closed graphs, quasi/semi-cycles,
// block-level classifications, jahangir/wheel/flower, decomposability.

#include <optional>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

struct ChordalityWitness {
  bool chordal = false;
  std::vector<int> peo;  // elimination order when chordal, earliest first
};

ChordalityWitness chordality(const Graph& g);
bool is_chordal(const Graph& g);

// Facets = maximal cliques.  Returns F_1..F_s with each F_i a leaf of the
// complex on F_1..F_i, or nothing when the complex is not a quasi-forest.
std::optional<std::vector<std::vector<int>>> leaf_order(const Graph& g);
bool is_quasi_forest(const Graph& g);
bool is_quasi_tree(const Graph& g);

// Literal definition: the edge binomials are a Groebner basis under the
// lex order with x_1 > ... > x_n > y_1 > ... > y_n.
bool is_closed_labeling(const Graph& g);
// Cheap equivalent used for pruning: every vertex's smaller-labeled and
// larger-labeled neighborhoods are cliques.  Tests pin the equivalence.
bool closed_labeling_condition(const Graph& g);
// Search over relabelings, n <= 8; result[v-1] = new label of v.
std::optional<std::vector<int>> exists_closed_labeling(const Graph& g);
Graph apply_labeling(const Graph& g, const std::vector<int>& new_label);

// Cut points 1 = a_1 < a_2 < ... < a_{s+1} = m; facet i is the clique on
// the interval [a_i, a_{i+1}].
struct IntervalSpec {
  std::vector<int> cuts;
  int m() const { return cuts.back(); }
  int s() const { return static_cast<int>(cuts.size()) - 1; }
};

IntervalSpec make_interval_spec(std::vector<int> cuts);

Graph cm_closed_graph(const IntervalSpec& spec);
// spec plus the closing edge {1, m}; needs s >= 2 so the edge is new
// (s = 2, m = 3 gives the triangle, the one complete graph in the family)
Graph quasi_cycle(const IntervalSpec& spec);
// spec on [m] plus a clique on [m, n] along with vertex 1; n = m degenerates
// to the quasi-cycle
Graph semi_cycle(const IntervalSpec& spec, int n);

// Exhaustive recognizers over interval specs + isomorphism, |V| <= 10.
bool is_quasi_cycle(const Graph& b);
bool is_semi_cycle(const Graph& b);

bool is_block_graph(const Graph& g);
// Blocks that are quasi-cycles other than K_3 (as induced subgraphs).
std::vector<std::vector<int>> quasi_blocks(const Graph& g);
int qc(const Graph& g);
bool is_quasi_block_graph(const Graph& g);
bool is_semi_block_graph(const Graph& g);

Graph jahangir(int m, int n);  // C_{mn} plus hub mn+1 on n evenly spaced spokes
Graph wheel(int n);            // jahangir(1, n)
Graph flower(int h, int k);    // h triangles and k stars K_{1,3} sharing vertex 1

struct Decomposition {
  std::vector<std::vector<int>> parts;  // original-label vertex sets, sorted
  std::vector<int> glue_vertices;       // split vertices, sorted, multiplicity kept
};

// Split at cut vertices free on both sides until no split applies.
Decomposition decompose_indecomposable(const Graph& g);
bool is_indecomposable(const Graph& g);

}  // namespace bei
