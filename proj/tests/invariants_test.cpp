#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bei/classes.hpp"
#include "bei/harness.hpp"
#include "bei/invariants.hpp"

using namespace bei;

TEST_CASE("maximal cliques") {
  Graph p4 = path_graph(4);
  auto cs = maximal_cliques(p4);
  REQUIRE(cs.cliques.size() == 3);
  CHECK(cs.cliques[0] == std::vector<int>{1, 2});
  CHECK(cs.cliques[2] == std::vector<int>{3, 4});

  auto k4 = maximal_cliques(complete_graph(4));
  REQUIRE(k4.cliques.size() == 1);
  CHECK(k4.cliques[0] == std::vector<int>{1, 2, 3, 4});

  // isolated vertices count as singleton cliques
  auto lone = maximal_cliques(make_graph(3, {{1, 2}}));
  REQUIRE(lone.cliques.size() == 2);
  CHECK(lone.cliques[1] == std::vector<int>{3});

  // bowtie: two triangles sharing vertex 1
  Graph bow = make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
  auto bc = maximal_cliques(bow);
  REQUIRE(bc.cliques.size() == 2);
  CHECK(bc.cliques[0] == std::vector<int>{1, 2, 3});
  CHECK(bc.cliques[1] == std::vector<int>{1, 4, 5});
}

TEST_CASE("clique count and clique number") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(clique_count(path_graph(n)) == n - 1);
    CHECK(clique_count(complete_graph(n)) == 1);
    CHECK(clique_number(complete_graph(n)) == n);
    CHECK(clique_number(path_graph(n)) == 2);
  }
  for (int n = 3; n <= 6; ++n) CHECK(clique_count(cycle_graph(n)) == (n == 3 ? 1 : n));
  CHECK(clique_number(cycle_graph(5)) == 2);
  CHECK(clique_number(empty_graph(3)) == 1);
  CHECK(clique_number(Graph(0)) == 0);
  CHECK(clique_count(star_graph(4)) == 4);
}

TEST_CASE("free and internal vertices") {
  Graph p3 = path_graph(3);
  CHECK(free_vertices(p3) == std::vector<int>{1, 3});
  CHECK(internal_vertices(p3) == std::vector<int>{2});
  CHECK(iv(p3) == 1);

  CHECK(iv(complete_graph(5)) == 0);
  CHECK(iv(path_graph(6)) == 4);
  CHECK(iv(star_graph(3)) == 1);
  CHECK(internal_vertices(star_graph(3)) == std::vector<int>{1});

  // every vertex of a cycle of length >= 4 is internal
  CHECK(iv(cycle_graph(5)) == 5);
  CHECK(free_vertices(cycle_graph(3)).size() == 3);
}

TEST_CASE("clique degree") {
  Graph p4 = path_graph(4);
  CHECK(cdeg(p4, 1) == 1);
  CHECK(cdeg(p4, 2) == 2);

  // flower with h triangles and k edges at the center: cdeg(center) = h + k
  for (auto [h, k] : {std::pair{3, 0}, {2, 1}, {1, 2}, {0, 3}}) {
    Graph f = flower(h, k);
    CHECK(cdeg(f, 1) == h + k);
  }
  CHECK(cdeg(star_graph(5), 1) == 5);
}

TEST_CASE("longest induced path") {
  for (int n = 2; n <= 7; ++n) CHECK(longest_induced_path(path_graph(n)) == n - 1);
  for (int n = 4; n <= 7; ++n) CHECK(longest_induced_path(cycle_graph(n)) == n - 2);
  CHECK(longest_induced_path(cycle_graph(3)) == 1);
  CHECK(longest_induced_path(complete_graph(5)) == 1);
  CHECK(longest_induced_path(Graph(1)) == 0);
  // disconnected: max over components
  Graph two = make_graph(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
  CHECK(longest_induced_path(two) == 3);
  // star: any two leaves and the center
  CHECK(longest_induced_path(star_graph(4)) == 2);
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(path_graph(5)) == 1);
  CHECK(vertex_connectivity(cycle_graph(5)) == 2);
  for (int n = 2; n <= 6; ++n) CHECK(vertex_connectivity(complete_graph(n)) == n - 1);
  Graph k33 = make_graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                             {3, 4}, {3, 5}, {3, 6}});
  CHECK(vertex_connectivity(k33) == 3);
  CHECK(vertex_connectivity(make_graph(3, {{1, 2}})) == 0);
  CHECK(vertex_connectivity(Graph(1)) == 0);
}

TEST_CASE("block decomposition") {
  // bowtie: two blocks meeting at the cut vertex 1
  Graph bow = make_graph(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
  auto bd = block_decomposition(bow);
  REQUIRE(bd.blocks.size() == 2);
  CHECK(bd.blocks[0] == std::vector<int>{1, 2, 3});
  CHECK(bd.blocks[1] == std::vector<int>{1, 4, 5});
  CHECK(bd.cut_vertices == std::vector<int>{1});
  CHECK(bd.bridges.empty());

  // every edge of a path is a bridge, interior vertices cut
  auto pd = block_decomposition(path_graph(4));
  CHECK(pd.blocks.size() == 3);
  CHECK(pd.cut_vertices == std::vector<int>{2, 3});
  CHECK(pd.bridges == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});

  // 2-connected graphs are a single block
  auto cd = block_decomposition(cycle_graph(5));
  CHECK(cd.blocks.size() == 1);
  CHECK(cd.cut_vertices.empty());
  CHECK(cut_vertices(complete_graph(4)).empty());
  CHECK(bridges(path_graph(2)) == std::vector<std::pair<int, int>>{{1, 2}});

  // triangle with a pendant edge
  Graph tp = make_graph(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  auto td = block_decomposition(tp);
  CHECK(td.blocks.size() == 2);
  CHECK(td.cut_vertices == std::vector<int>{3});
  CHECK(td.bridges == std::vector<std::pair<int, int>>{{3, 4}});
}

TEST_CASE("removing an internal vertex lowers the internal count") {
  // for every connected graph up to 6 vertices and every internal vertex v,
  // both iv(G_v) and iv(G \ v) drop strictly below iv(G)
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      for (int v : internal_vertices(g)) {
        CHECK(iv(neighborhood_completion(g, v)) < iv(g));
        CHECK(iv(delete_vertex(g, v).graph) < iv(g));
      }
    }
  }
}

TEST_CASE("clique completion at a shared vertex merges its cliques") {
  // chordal G, v on t maximal cliques: completing around v leaves at most
  // c(G) - t + 1 maximal cliques
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected_graphs(n)) {
      if (!is_chordal(g)) continue;
      for (int v = 1; v <= n; ++v) {
        int t = cdeg(g, v);
        CHECK(clique_count(neighborhood_completion(g, v)) <= clique_count(g) - t + 1);
      }
    }
  }
}
