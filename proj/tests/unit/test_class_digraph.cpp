#include <doctest.h>

#include <random>

#include "equicolor/class_digraph.hpp"
#include "equicolor/errors.hpp"
#include "equicolor/generators.hpp"
#include "fixtures.hpp"
#include "reference.hpp"

using namespace equicolor;
namespace fig = fixtures::fig;

namespace {

std::vector<int> vec(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("small stuck instance: accessibility and witnesses") {
  Graph g = fixtures::small_stuck_graph();
  ClassDigraph d = ClassDigraph::build(g, fixtures::small_stuck_coloring());
  CHECK(d.r() == 4);
  CHECK(d.s() == 2);
  CHECK(d.deficient() == 0);
  CHECK(d.accessible_classes() == std::vector<int>{0, 1, 2});
  CHECK(d.nonaccessible_classes() == std::vector<int>{3});
  CHECK(d.a() == 3);
  CHECK(d.b() == 1);
  const auto& wit = d.witnesses(1, 0);
  CHECK(std::find(wit.begin(), wit.end(), fig::w) != wit.end());
  CHECK(d.movable(fig::w, 0));
  CHECK(d.terminal_classes() == std::vector<int>{2});
  CHECK_FALSE(d.is_terminal(0));
}

TEST_CASE("small stuck instance: solo data and weights") {
  Graph g = fixtures::small_stuck_graph();
  ClassDigraph d = ClassDigraph::build(g, fixtures::small_stuck_coloring());
  SoloData sv = d.solo_analysis(fig::v);
  CHECK(sv.solo == std::vector<int>{fig::u, fig::t});
  CHECK(sv.nice == std::vector<int>{fig::u, fig::t});
  SoloData sw = d.solo_analysis(fig::w);
  CHECK(sw.solo.empty());
  CHECK(sw.free_classes == std::vector<int>{3});
  CHECK(d.weight_of(fig::v, {}) == 2);
  CHECK(d.weight_of(fig::w, {}) == 0);
  std::vector<int> w4{3};
  CHECK(d.weight_of(fig::v, w4) == 1);
  CHECK_THROWS_AS(d.solo_analysis(fig::u), PreconditionError);
  std::vector<int> bad{1};
  CHECK_THROWS_AS(d.weight(1, bad), PreconditionError);
  CHECK_THROWS_AS(d.weight(3, {}), PreconditionError);
}

TEST_CASE("weights over a class add up to s times the nonaccessible count") {
  Graph g = fixtures::small_stuck_graph();
  ClassDigraph d = ClassDigraph::build(g, fixtures::small_stuck_coloring());
  for (int c : d.accessible_classes()) {
    CHECK(d.weight(c, {}).total() == d.s() * d.b());
    std::vector<int> all{3};
    CHECK(d.weight(c, all).total() == Rational(d.s() * d.b(), 2));
  }
}

TEST_CASE("edgeless graph: every pair is an arc") {
  Graph g(5);
  Coloring c = Coloring::from_assignment(3, {0, 1, 1, 2, 2});
  ClassDigraph d = ClassDigraph::build(g, c);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(d.has_arc(i, j));
  CHECK(d.a() == 3);
  CHECK(d.arc_count() == 6);
}

TEST_CASE("chain of classes: only the far end is terminal") {
  const Graph g = fixtures::chain_graph();
  ClassDigraph d = ClassDigraph::build(g, fixtures::chain_coloring());
  CHECK(d.a() == 3);
  CHECK(d.has_arc(1, 0));
  CHECK(d.has_arc(2, 1));
  CHECK_FALSE(d.has_arc(2, 0));
  CHECK_FALSE(d.has_arc(1, 2));
  CHECK(d.terminal_classes() == std::vector<int>{2});
  CHECK(d.shortest_path(2, 0) == std::vector<int>{2, 1, 0});
}

TEST_CASE("only the deficient class accessible: nothing is terminal") {
  StuckInstance inst = stuck_star_forest();
  Coloring c = inst.full;
  c.unassign(inst.heldout);
  ClassDigraph d = ClassDigraph::build(inst.graph, c);
  CHECK(d.a() == 1);
  CHECK(d.terminal_classes().empty());
  for (int v : d.coloring().members(0)) CHECK(d.is_ordinary(v));
}

TEST_CASE("strong components of the nonaccessible classes") {
  // classes 1 and 2 nonaccessible; their vertices see each other and class 0
  // a = 0 (class 0), b = 1, 2 (class 1), c = 3, 4 (class 2)
  SUBCASE("digon") {
    std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
    const Graph g = Graph::from_edges(5, es);
    ClassDigraph d = ClassDigraph::build(g, Coloring::from_assignment(3, {0, 1, 1, 2, 2}));
    auto sc = d.strong_components_nonaccessible();
    REQUIRE(sc.components.size() == 1u);
    CHECK(sc.largest_size() == 2);
  }
  SUBCASE("no arcs between them") {
    std::vector<Edge> es{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {2, 4}};
    const Graph g = Graph::from_edges(5, es);
    ClassDigraph d = ClassDigraph::build(g, Coloring::from_assignment(3, {0, 1, 1, 2, 2}));
    auto sc = d.strong_components_nonaccessible();
    CHECK(sc.components.size() == 2u);
    CHECK(sc.largest_size() == 1);
  }
  SUBCASE("single class") {
    std::vector<Edge> es{{0, 1}, {0, 2}};
    const Graph g = Graph::from_edges(3, es);
    ClassDigraph d = ClassDigraph::build(g, Coloring::from_assignment(2, {0, 1, 1}));
    auto sc = d.strong_components_nonaccessible();
    CHECK(sc.components.size() == 1u);
  }
}

TEST_CASE("build rejects colorings without a single short class") {
  Graph g(4);
  CHECK_THROWS_AS(ClassDigraph::build(g, Coloring::from_assignment(2, {0, 0, 1, 1})),
                  PreconditionError);
  CHECK_THROWS_AS(ClassDigraph::build(g, Coloring::from_assignment(3, {0, 0, 1, 2})),
                  PreconditionError);
  CHECK_THROWS_AS(ClassDigraph::build(g, Coloring::from_assignment(2, {0, 1, 1, -1}), 1),
                  PreconditionError);
}

TEST_CASE("agrees with the reference on random one-short colorings") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 3 + static_cast<int>(rng() % 4);
    const int s = 2 + static_cast<int>(rng() % 4);
    Graph g = gen_random_gnp(r * s, 0.12 + 0.05 * static_cast<double>(rng() % 4), rng());
    Coloring c;
    if (!ref::random_balanced_coloring(g, r, rng, c)) continue;
    c.unassign(static_cast<int>(rng() % static_cast<unsigned>(g.num_vertices())));
    ClassDigraph d = ClassDigraph::build(g, c);
    ref::Structure st = ref::structure(g, c, d.deficient());
    ++checked;
    for (int i = 0; i < r; ++i) {
      CHECK(d.is_accessible(i) == static_cast<bool>(st.accessible[i]));
      CHECK(d.is_terminal(i) == static_cast<bool>(st.terminal[i]));
      for (int j = 0; j < r; ++j)
        if (i != j) CHECK(d.witnesses(i, j) == st.witnesses[i][j]);
    }
    auto comps = ref::components(st);
    auto sc = d.strong_components_nonaccessible();
    CHECK(sc.components.size() == comps.size());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const int cls = c.class_of(v);
      if (cls < 0 || !st.accessible[cls]) continue;
      auto rs = ref::solo(g, c, st, v);
      auto ds = d.solo_analysis(v);
      CHECK(ds.solo == rs.solo);
      CHECK(ds.nice == rs.nice);
      CHECK(ds.free_classes == rs.free_classes);
      CHECK(d.weight_of(v, {}) == ref::weight(g, c, st, v, {}));
    }
  }
  CHECK(checked >= 30);
}

TEST_CASE("incremental refresh matches a fresh build") {
  std::mt19937_64 rng(5);
  int moves = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 4, s = 4;
    Graph g = gen_random_gnp(r * s, 0.15, rng());
    Coloring c;
    if (!ref::random_balanced_coloring(g, r, rng, c)) continue;
    c.unassign(0);
    ClassDigraph d = ClassDigraph::build(g, c);
    for (int step = 0; step < 10; ++step) {
      // move a random witness into the deficient class, keeping one short class
      const int def = d.deficient();
      std::vector<std::pair<int, int>> options;
      for (int i = 0; i < r; ++i)
        if (i != def)
          for (int v : d.witnesses(i, def)) options.emplace_back(v, i);
      if (options.empty()) break;
      auto [v, from] = options[rng() % options.size()];
      d.relocate(v, def);
      CHECK_FALSE(d.clean());
      d.refresh();
      CHECK(d.deficient() == from);
      ClassDigraph fresh = ClassDigraph::build(g, d.coloring());
      CHECK(d.same_structure(fresh));
      ++moves;
    }
  }
  CHECK(moves > 50);
}

TEST_CASE("vertex without nonaccessible neighbors has empty solo data") {
  Graph g = fixtures::small_stuck_graph();
  ClassDigraph d = ClassDigraph::build(g, fixtures::small_stuck_coloring());
  SoloData sw = d.solo_analysis(fig::w);
  CHECK(sw.q() == 0);
  CHECK(sw.q_nice() == 0);
  CHECK(sw.free_classes == d.nonaccessible_classes());
}
