#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Q3 drawn as two nested squares with both diagonals in each of its six
/// 4-faces: 8 vertices, 24 edges, 6-regular.
Graph gen_q3_diagonals();

/// Rhombicuboctahedron with both diagonals in each of its eighteen 4-faces:
/// 24 vertices, 7-regular. Coordinates are handled exactly in Z[sqrt 2].
Graph gen_rhombicuboctahedron_diagonals();

/// Open rows x cols grid with both diagonals in every cell; vertex
/// (i, j) has id i * cols + j. Throws InvalidInput unless rows, cols >= 2.
Graph gen_grid_diagonals(int rows, int cols);

Graph gen_complete(int t);
Graph gen_complete_bipartite(int p, int q);

/// Induced subgraph of a rows x cols diagonal grid on `keep` random vertices.
Graph gen_random_subgraph(int rows, int cols, int keep, std::uint64_t seed);

/// G(n, p) with edge probability p.
Graph gen_random_gnp(int n, double p, std::uint64_t seed);

struct GenSpec {
  std::string family;       // q3_diag | rhombi_diag | grid_diag | complete |
                            // complete_bipartite | random_subgraph
  std::vector<int> params;  // grid_diag: rows cols; complete: t;
                            // complete_bipartite: p q;
                            // random_subgraph: rows cols keep
  std::uint64_t seed = 0;

  /// Throws InvalidInput on an unknown family or bad parameter count.
  void validate() const;
  /// Whether outputs of this family are 1-planar by construction.
  bool one_planar() const;
};

Graph generate(const GenSpec& spec);

/// A fix-phase start state that no single witness move resolves: the
/// held-out vertex has a neighbor in every accessible class.
struct StuckInstance {
  std::string name;
  Graph graph;
  Coloring full;    // proper except for the edge heldout-partner
  int heldout = -1;
  int partner = -1;
  int r = 0;
  int expected_a = 0;
};

/// r = 13, s = 14: the deficient class holds thirteen star centers whose
/// leaves fill every other class, so only the deficient class is accessible.
StuckInstance stuck_star_forest(std::uint64_t seed = 0);

/// A nonzero seed relabels vertices and classes.
///
/// r = 13, s = 14: two hub classes share all leaves; one isolated vertex
/// makes the second hub class accessible.
StuckInstance stuck_double_hub(std::uint64_t seed = 0);

}  // namespace equicolor
