#include <doctest.h>

#include <random>

#include "equicolor/edge_list.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/generators.hpp"
#include "equicolor/graph.hpp"
#include "reference.hpp"

using namespace equicolor;

namespace {

Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edges(n, es);
}

Graph star(int leaves) {
  std::vector<Edge> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph::from_edges(leaves + 1, es);
}

}  // namespace

TEST_CASE("graph construction rejects malformed edge lists") {
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), InvalidInput);
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, twice), InvalidInput);
  std::vector<Edge> far{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, far), InvalidInput);
  CHECK_THROWS_AS(Graph(-1), InvalidInput);
}

TEST_CASE("adjacency is symmetric and degrees sum to twice the edge count") {
  Graph g = gen_grid_diagonals(4, 5);
  long long total = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    total += g.degree(v);
    for (int w : g.neighbors(v)) CHECK(g.has_edge(w, v));
  }
  CHECK(total == 2LL * g.num_edges());
}

TEST_CASE("degeneracy of small reference graphs") {
  CHECK(degeneracy_order(Graph(5)).degeneracy == 0);
  CHECK(degeneracy_order(gen_q3_diagonals()).degeneracy == 6);
  CHECK(degeneracy_order(gen_rhombicuboctahedron_diagonals()).degeneracy == 7);
  CHECK(degeneracy_order(star(6)).degeneracy == 1);
}

TEST_CASE("degeneracy order reproduces its own width") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = gen_random_gnp(20, 0.25, rng());
    auto res = degeneracy_order(g);
    CHECK(res.order.size() == 20u);
    CHECK(max_forward_degree(g, res.order) == res.degeneracy);
    CHECK(res.degeneracy == ref::degeneracy(g));
  }
}

TEST_CASE("edge bound predicates") {
  Graph q3 = gen_q3_diagonals();
  CHECK(q3.num_edges() == 4 * 8 - 8);
  CHECK(check_edge_bound(q3, EdgeBound::general));
  CHECK_FALSE(check_edge_bound(q3.with_edge(0, 7), EdgeBound::general));

  Graph k77 = gen_complete_bipartite(7, 7);
  CHECK(k77.num_edges() == 49);
  CHECK_FALSE(check_edge_bound(k77, true));
  CHECK(edge_bound_limit(14, EdgeBound::bipartite) == 36);

  std::vector<Edge> one{{0, 1}};
  CHECK_FALSE(check_edge_bound(Graph::from_edges(2, one), EdgeBound::general));
  CHECK(check_edge_bound(Graph(2), EdgeBound::general));
  CHECK(check_edge_bound(Graph(1), EdgeBound::general));
  CHECK(edge_bound_limit(0, EdgeBound::general) == 0);
}

TEST_CASE("strict bipartite bound only differs from four vertices up") {
  CHECK(edge_bound_limit(3, EdgeBound::bipartite_strict) == 3);
  CHECK(edge_bound_limit(4, EdgeBound::bipartite_strict) == 4);
  CHECK(edge_bound_limit(4, EdgeBound::bipartite) == 6);
  CHECK(check_edge_bound(cycle(4), EdgeBound::bipartite_strict));
  CHECK(check_edge_bound(gen_complete_bipartite(4, 4), EdgeBound::bipartite_strict));
  // K_{4,5}: 20 edges on 9 vertices, between 3n - 8 = 19 and 3n - 6 = 21
  CHECK_FALSE(check_edge_bound(gen_complete_bipartite(4, 5), EdgeBound::bipartite_strict));
  CHECK(check_edge_bound(gen_complete_bipartite(4, 5), EdgeBound::bipartite));
}

TEST_CASE("bipartition detection") {
  auto c4 = is_bipartite(cycle(4));
  REQUIRE(c4);
  CHECK(c4->size0 == 2);
  CHECK(c4->size1 == 2);
  CHECK_FALSE(is_bipartite(cycle(5)));
  auto k77 = is_bipartite(gen_complete_bipartite(7, 7));
  REQUIRE(k77);
  CHECK(k77->size0 == 7);
  CHECK(k77->size1 == 7);
}

TEST_CASE("edge and vertex deletion") {
  Graph k3 = gen_complete(3);
  Graph path = delete_edge(k3, 0, 2);
  CHECK(path.num_edges() == 2);
  CHECK(path.degree(1) == 2);
  CHECK_THROWS_AS(delete_edge(path, 0, 2), PreconditionError);

  Subgraph one = delete_vertex(k3, 1);
  CHECK(one.graph.num_vertices() == 2);
  CHECK(one.graph.num_edges() == 1);
  CHECK(one.to_parent == std::vector<int>{0, 2});
  CHECK(one.from_parent == std::vector<int>{0, -1, 1});

  Subgraph leaves = delete_vertex(star(4), 0);
  CHECK(leaves.graph.num_vertices() == 4);
  CHECK(leaves.graph.num_edges() == 0);
  CHECK_THROWS_AS(delete_vertex(k3, 3), PreconditionError);
}

TEST_CASE("deleting and re-adding an edge restores the graph") {
  Graph g = gen_grid_diagonals(3, 4);
  for (Edge e : g.edges()) CHECK(delete_edge(g, e.u, e.v).with_edge(e.u, e.v) == g);
}

TEST_CASE("disjoint union shifts the second graph") {
  Graph u = disjoint_union(gen_complete(3), gen_complete(2));
  CHECK(u.num_vertices() == 5);
  CHECK(u.num_edges() == 4);
  CHECK(u.has_edge(3, 4));
  CHECK_FALSE(u.has_edge(2, 3));
}

TEST_CASE("hereditary bound checker") {
  auto small = check_hereditary_bound(gen_q3_diagonals(), 0, 1);
  CHECK(small.ok);
  CHECK(small.exhaustive);
  auto big = check_hereditary_bound(gen_grid_diagonals(6, 6), 200, 3);
  CHECK(big.ok);
  CHECK(big.subgraphs_checked == 200);
  auto k7 = check_hereditary_bound(gen_complete(7), 0, 1);
  CHECK_FALSE(k7.ok);
  CHECK_FALSE(k7.violating_subset.empty());
  // K8 has degeneracy 7 but eight vertices with 28 > 24 edges
  CHECK_FALSE(check_hereditary_bound(gen_complete(8), 0, 1).ok);
}

TEST_CASE("edge-list text format") {
  Graph g = gen_grid_diagonals(3, 3);
  std::string text = format_edge_list(g);
  CHECK(text.rfind("p edge 9 20\n", 0) == 0);
  CHECK(parse_edge_list(text) == g);
  CHECK(format_edge_list(parse_edge_list(text)) == text);

  CHECK(parse_edge_list("c hello\np edge 3 1\nc mid\ne 2 0\n").has_edge(0, 2));
  CHECK_THROWS_AS(parse_edge_list("e 0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("p edge 3 2\ne 0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("p edge 3 1\ne 0 5\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("p edge 3 1\nx 0 1\n"), InvalidInput);
  CHECK_THROWS_AS(parse_edge_list("p edge 3 1\ne 0 1\np edge 3 1\n"), InvalidInput);
  CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.el"), Error);
}
