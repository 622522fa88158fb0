#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace equicolor {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, stored as sorted
/// adjacency arrays (CSR). Mutating operations return new values.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an edge list; throws InvalidInput on self-loops,
  /// parallel edges or out-of-range endpoints.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const noexcept { return static_cast<int>(offsets_.size()) - 1; }
  int num_edges() const noexcept { return static_cast<int>(targets_.size() / 2); }

  std::span<const int> neighbors(int v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  int min_degree() const;
  bool has_edge(int u, int v) const;

  /// Canonical edge list: u < v, lexicographic.
  std::vector<Edge> edges() const;

  Graph with_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<int> offsets_{0};
  std::vector<int> targets_;
};

/// An induced subgraph together with the vertex correspondence.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;    // subgraph id -> parent id
  std::vector<int> from_parent;  // parent id -> subgraph id, or -1
};

Graph delete_edge(const Graph& g, int u, int v);
Subgraph delete_vertex(const Graph& g, int v);
Subgraph induced_subgraph(const Graph& g, std::span<const int> keep);
Graph disjoint_union(const Graph& a, const Graph& b);

struct DegeneracyResult {
  std::vector<int> order;
  int degeneracy = 0;
};

/// Min-degree peeling order, ties to the lowest vertex id.
DegeneracyResult degeneracy_order(const Graph& g);

/// Largest number of neighbors a vertex has later in `order`.
int max_forward_degree(const Graph& g, std::span<const int> order);

enum class EdgeBound {
  general,          // m <= 4n - 8
  bipartite,        // m <= 3n - 6
  bipartite_strict  // m <= 3n - 8 for n >= 4 (falls back to 3n - 6 below)
};

/// Right-hand side of the bound for n vertices, clamped at zero.
std::int64_t edge_bound_limit(int n, EdgeBound kind);

bool check_edge_bound(const Graph& g, EdgeBound kind = EdgeBound::general);
inline bool check_edge_bound(const Graph& g, bool bipartite_mode) {
  return check_edge_bound(g, bipartite_mode ? EdgeBound::bipartite : EdgeBound::general);
}

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex
  int size0 = 0;
  int size1 = 0;
};

std::optional<Bipartition> is_bipartite(const Graph& g);

struct HereditaryReport {
  bool ok = true;
  bool exhaustive = false;
  int subgraphs_checked = 0;
  std::vector<int> violating_subset;  // empty when ok
};

/// Checks m <= 4n-8 on induced subgraphs with at least three vertices and
/// the degeneracy <= 7 condition. Exhaustive for n <= 15, otherwise
/// `samples` random induced subgraphs.
HereditaryReport check_hereditary_bound(const Graph& g, int samples, std::uint64_t seed);

}  // namespace equicolor
