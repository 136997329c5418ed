#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "bei/graph.hpp"

using namespace bei;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/bei_graph_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("construction and edge queries") {
  Graph g(4);
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 0);
  g.add_edge(1, 3);
  g.add_edge(3, 2);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK(!g.has_edge(1, 2));
  CHECK(g.degree(3) == 2);
  CHECK(g.neighbors(3) == std::vector<int>{1, 2});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  g.remove_edge(1, 3);
  CHECK(!g.has_edge(1, 3));
  CHECK(g.edge_count() == 1);

  CHECK_THROWS_AS(g.add_edge(0, 1), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(1, 5), std::out_of_range);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);

  Graph h = make_graph(3, {{1, 2}, {2, 3}});
  CHECK(h.edge_count() == 2);
  CHECK(h == path_graph(3));
  CHECK(h != path_graph(4));
}

TEST_CASE("standard constructors") {
  CHECK(path_graph(5).edge_count() == 4);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(empty_graph(5).edge_count() == 0);
  CHECK(star_graph(4).edge_count() == 4);
  CHECK(star_graph(4).degree(1) == 4);
  CHECK(path_graph(1).n() == 1);
  CHECK(path_graph(0).n() == 0);
  CHECK(complete_graph(2) == path_graph(2));
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("induced subgraphs keep original labels") {
  Graph c5 = cycle_graph(5);
  Relabeled sub = induced_subgraph(c5, {2, 3, 5});
  CHECK(sub.graph.n() == 3);
  CHECK(sub.labels == std::vector<int>{2, 3, 5});
  CHECK(sub.graph.has_edge(1, 2));   // 2-3 survives
  CHECK(!sub.graph.has_edge(1, 3));  // 2-5 not an edge of C_5
  CHECK(sub.graph.edge_count() == 1);

  // duplicates collapse, order is normalized
  Relabeled dedup = induced_subgraph(c5, {3, 2, 2});
  CHECK(dedup.labels == std::vector<int>{2, 3});
  CHECK(dedup.graph.n() == 2);
  CHECK_THROWS_AS(induced_subgraph(c5, {0}), std::out_of_range);
}

TEST_CASE("vertex and edge deletion") {
  Graph c4 = cycle_graph(4);
  Relabeled d = delete_vertex(c4, 2);
  CHECK(d.graph.n() == 3);
  CHECK(d.labels == std::vector<int>{1, 3, 4});
  CHECK(d.graph.edge_count() == 2);  // path 1-4-3

  Graph e = delete_edge(c4, 1, 2);
  CHECK(e.edge_count() == 3);
  CHECK(!e.has_edge(1, 2));
  CHECK_THROWS_AS(delete_edge(c4, 1, 3), std::invalid_argument);
}

TEST_CASE("neighborhood and edge completion") {
  // completing around the center of a star yields the complete graph
  Graph k13 = star_graph(3);
  Graph done = neighborhood_completion(k13, 1);
  CHECK(done == complete_graph(4));

  // completing along the non-edge {1,3} of the path turns N(3) into a clique
  Graph p4 = path_graph(4);
  Graph ec = edge_completion(p4, 1, 3);
  CHECK(ec.has_edge(2, 4));
  CHECK(!ec.has_edge(1, 3));  // the pivot pair itself is not added
  CHECK(ec.edge_count() == 4);
  CHECK_THROWS_AS(edge_completion(p4, 2, 3), std::invalid_argument);  // already an edge
  CHECK_THROWS_AS(edge_completion(p4, 2, 2), std::invalid_argument);

  Graph p3 = path_graph(3);
  CHECK(neighborhood_completion(p3, 2) == complete_graph(3));
  CHECK(neighborhood_completion(p3, 1) == p3);  // leaf is already simplicial
}

TEST_CASE("join shifts the second factor") {
  Graph j = graph_join(path_graph(2), empty_graph(3));
  CHECK(j.n() == 5);
  CHECK(j.edge_count() == 1 + 2 * 3);
  CHECK(j.has_edge(1, 2));
  CHECK(!j.has_edge(3, 4));
  for (int a = 1; a <= 2; ++a)
    for (int b = 3; b <= 5; ++b) CHECK(j.has_edge(a, b));

  // join with K_1 is the cone; over P_2 it gives the triangle
  CHECK(graph_join(path_graph(2), empty_graph(1)) == complete_graph(3));
}

TEST_CASE("gluing at free vertices") {
  // two paths glued end to end give a longer path
  Graph p3 = path_graph(3);
  Graph g = glue_at_free_vertices(p3, 3, p3, 1);
  CHECK(g.n() == 5);
  CHECK(isomorphic(g, path_graph(5)));

  // gluing two triangles at a corner gives the bowtie
  Graph k3 = complete_graph(3);
  Graph bow = glue_at_free_vertices(k3, 1, k3, 1);
  CHECK(bow.n() == 5);
  CHECK(bow.edge_count() == 6);

  // vertex 2 of P_3 is internal, not free
  CHECK_THROWS_AS(glue_at_free_vertices(p3, 2, p3, 1), std::invalid_argument);
}

TEST_CASE("components and connectivity") {
  Graph g = make_graph(6, {{1, 2}, {2, 3}, {5, 6}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{1, 2, 3});
  CHECK(comps[1] == std::vector<int>{4});
  CHECK(comps[2] == std::vector<int>{5, 6});
  CHECK(!is_connected(g));
  CHECK(is_connected(path_graph(4)));
  CHECK(is_connected(Graph(1)));
}

TEST_CASE("clique masks and free vertices") {
  // masks use bit v-1 for vertex v
  Graph k4 = complete_graph(4);
  std::uint64_t all = 0b1111;
  CHECK(is_clique(k4, all));
  Graph p4 = path_graph(4);
  CHECK(!is_clique(p4, all));
  CHECK(is_clique(p4, 0b0011));  // the edge {1,2}
  CHECK(is_clique(p4, 0b0100));  // single vertex
  CHECK(is_clique(p4, 0));

  // free = contained in exactly one maximal clique
  CHECK(is_free_vertex(p4, 1));
  CHECK(!is_free_vertex(p4, 2));
  Graph k13 = star_graph(3);
  CHECK(!is_free_vertex(k13, 1));
  CHECK(is_free_vertex(k13, 2));
  for (int v = 1; v <= 4; ++v) CHECK(is_free_vertex(k4, v));
}

TEST_CASE("adjacency text round trip") {
  Graph g = make_graph(4, {{1, 2}, {2, 4}});
  std::string text = to_adjacency_text(g);
  Graph back = parse_adjacency_text(text);
  CHECK(back == g);

  Graph p = parse_adjacency_text("3\n1 2\n2 3\n");
  CHECK(p == path_graph(3));
  // blank lines are tolerated
  Graph q = parse_adjacency_text("3\n\n1 2\n\n2 3\n");
  CHECK(q == path_graph(3));
  CHECK(parse_adjacency_text("2\n").edge_count() == 0);

  CHECK_THROWS_AS(parse_adjacency_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_adjacency_text("2\n1 3\n"), std::out_of_range);
  CHECK_THROWS_AS(parse_adjacency_text("2\n1\n"), std::invalid_argument);
}

TEST_CASE("graph6 round trip and frozen encodings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(path_graph(3)) == "Bg");
  CHECK(parse_graph6("Bw") == complete_graph(3));

  for (const Graph& g : {path_graph(7), cycle_graph(6), complete_graph(5),
                         star_graph(4), make_graph(3, {})}) {
    CHECK(parse_graph6(to_graph6(g)) == g);
  }

  // the largest single-byte size
  Graph big(62);
  big.add_edge(1, 62);
  CHECK(parse_graph6(to_graph6(big)) == big);

  // optional header is stripped
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));

  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);   // truncated
  CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument); // long form
  CHECK_THROWS_AS(to_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("file reading sniffs both formats") {
  std::string adj = write_temp("adj.txt", "3\n1 2\n2 3\n");
  CHECK(read_graph_file(adj) == path_graph(3));

  std::string g6 = write_temp("g6.txt", "Bw\n");
  CHECK(read_graph_file(g6) == complete_graph(3));

  CHECK_THROWS(read_graph_file("/nonexistent/graph.txt"));
  std::remove(adj.c_str());
  std::remove(g6.c_str());
}

TEST_CASE("isomorphism testing") {
  // C_5 relabeled
  Graph a = cycle_graph(5);
  Graph b = make_graph(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
  CHECK(isomorphic(a, b));
  CHECK(!isomorphic(a, path_graph(5)));
  CHECK(!isomorphic(a, cycle_graph(6)));
  CHECK(isomorphic(Graph(0), Graph(0)));

  // same degree sequence, different graphs: C_6 vs two triangles
  Graph two_k3 = make_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(!isomorphic(cycle_graph(6), two_k3));
}

TEST_CASE("canonical forms are stable") {
  Graph a = cycle_graph(5);
  Graph b = make_graph(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(canonical_form(a)) == canonical_form(a));
  CHECK(canonical_key(a) == canonical_key(b));
  CHECK(canonical_key(a) != canonical_key(path_graph(5)));
  CHECK(canonical_key(path_graph(4)) == "c:CL");

  // beyond the exact-canonicalization cutoff the key degrades gracefully
  CHECK_NOTHROW(canonical_key(path_graph(12)));
}
