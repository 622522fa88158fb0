#pragma once

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace fixtures {

// Seven vertices, four classes of target size two; class 0 = {x} is short.
namespace fig {
inline constexpr int x = 0, v = 1, w = 2, y = 3, z = 4, u = 5, t = 6;
}

inline equicolor::Graph small_stuck_graph() {
  using namespace fig;
  std::vector<equicolor::Edge> es{{z, u}, {z, t}, {v, u}, {v, t}, {x, u},
                                  {x, t}, {y, u}, {x, y}, {x, z}};
  for (auto& e : es)
    if (e.u > e.v) std::swap(e.u, e.v);
  return equicolor::Graph::from_edges(7, es);
}

inline equicolor::Coloring small_stuck_coloring() {
  using namespace fig;
  std::vector<int> cls(7);
  cls[x] = 0;
  cls[v] = cls[w] = 1;
  cls[y] = cls[z] = 2;
  cls[u] = cls[t] = 3;
  return equicolor::Coloring::from_assignment(4, cls);
}

// Three classes with accessible arcs exactly 2 -> 1 -> 0.
// ids: a = 0 (class 0), b1 = 1, b2 = 2 (class 1), c1 = 3, c2 = 4 (class 2)
inline equicolor::Graph chain_graph() {
  std::vector<equicolor::Edge> es{{0, 3}, {0, 4}, {1, 3}, {2, 3}};
  return equicolor::Graph::from_edges(5, es);
}
inline equicolor::Coloring chain_coloring() {
  return equicolor::Coloring::from_assignment(3, {0, 1, 1, 2, 2});
}

// Four classes: 2 -> 1, 3 -> 1, 1 -> 0, and neither 2 nor 3 reaches 0 directly.
// ids: a = 0; b1 = 1, b2 = 2; c1 = 3, c2 = 4; d1 = 5, d2 = 6
inline equicolor::Graph fork_graph() {
  std::vector<equicolor::Edge> es{{0, 3}, {0, 4}, {0, 5}, {0, 6}};
  return equicolor::Graph::from_edges(7, es);
}
inline equicolor::Coloring fork_coloring() {
  return equicolor::Coloring::from_assignment(4, {0, 1, 1, 2, 2, 3, 3});
}

}  // namespace fixtures
