#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/graph.hpp"

using namespace turanlab;

TEST_SUITE_BEGIN("graph");

TEST_CASE("builders have the expected orders and sizes") {
  CHECK(edgeless(5).order() == 5);
  CHECK(edgeless(5).edge_count() == 0);
  CHECK(complete(4).edge_count() == 6);
  CHECK(complete(1).edge_count() == 0);
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(path_graph(1).edge_count() == 0);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(3).order() == 4);   // three leaves and a centre
  CHECK(star_graph(3).edge_count() == 3);
  CHECK(matching_graph(3).order() == 6);
  CHECK(matching_graph(3).edge_count() == 3);
  CHECK(friendship_graph(2).order() == 5);  // two triangles sharing a vertex
  CHECK(friendship_graph(2).edge_count() == 6);
  CHECK(complete_multipartite({2, 2, 2}).order() == 6);
  CHECK(complete_multipartite({2, 2, 2}).edge_count() == 12);
  CHECK(complete_multipartite({2, 7}).edge_count() == 14);
}

TEST_CASE("balanced multipartite graphs") {
  CHECK(turan_graph(5, 2).edge_count() == 6);   // parts 3,2
  CHECK(turan_graph(6, 3).edge_count() == 12);  // parts 2,2,2
  CHECK(turan_graph(4, 4) == complete(4));
  CHECK(turan_graph(3, 7).edge_count() == 3);   // r >= n collapses to complete
  CHECK(turan_graph(7, 1).edge_count() == 0);
}

TEST_CASE("join and union") {
  Graph a = complete(3), b = edgeless(4);
  Graph j = join(a, b);
  CHECK(j.order() == 7);
  CHECK(j.edge_count() == 3 + 0 + 12);
  Graph u = disjoint_union(a, b);
  CHECK(u.order() == 7);
  CHECK(u.edge_count() == 3);
  CHECK(is_connected(j));
  CHECK_FALSE(is_connected(u));
}

TEST_CASE("connectivity") {
  CHECK(is_connected(complete(1)));
  CHECK_FALSE(is_connected(disjoint_union(complete(3), complete(3))));
  CHECK(is_connected(join(edgeless(2), edgeless(7))));
  CHECK_THROWS_AS(is_connected(Graph(0)), TuranError);
}

TEST_CASE("edge bookkeeping") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  g.remove_edge(0, 1);
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK(g.degree(3) == 1);
  CHECK_THROWS_AS(g.add_edge(0, 0), TuranError);
  CHECK_THROWS_AS(g.add_edge(0, 9), TuranError);
  CHECK_THROWS_AS(Graph(65), TuranError);
}

TEST_CASE("induced subgraphs and vertex deletion") {
  Graph c5 = cycle_graph(5);
  Graph p = c5.without_vertices(1ULL << 0);
  CHECK(p.order() == 4);
  CHECK(p.edge_count() == 3);  // deleting one cycle vertex leaves a path
  Graph ind = complete(5).induced(0b10101);
  CHECK(ind == complete(3));
  Graph ext = path_graph(3).extended(0b001);  // new vertex adjacent to vertex 0
  CHECK(ext.order() == 4);
  CHECK(ext.edge_count() == 3);
  CHECK(ext.has_edge(3, 0));
}

TEST_CASE("degree sums match edge counts on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.4);
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.edge_count());
    std::vector<int> degs = sorted_degrees(g);
    CHECK(static_cast<int>(degs.size()) == g.order());
    CHECK(std::is_sorted(degs.rbegin(), degs.rend()));
  }
}

TEST_SUITE_END();
