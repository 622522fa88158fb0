#pragma once

#include <span>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/rational.hpp"

namespace equicolor {

struct SoloData {
  int vertex = -1;
  std::vector<int> solo;          // solo neighbors in nonaccessible classes
  std::vector<int> nice;          // solo neighbors with a nonadjacent solo partner
  std::vector<int> free_classes;  // nonaccessible classes with no neighbor of vertex
  int q() const { return static_cast<int>(solo.size()); }
  int q_nice() const { return static_cast<int>(nice.size()); }
};

struct WeightQuery {
  int cls = -1;
  std::vector<int> halved;        // classes whose vertices count half
  std::vector<int> vertices;      // members of cls, ascending
  std::vector<Rational> values;   // aligned with vertices
  Rational total() const;
};

struct StrongComponents {
  std::vector<std::vector<int>> components;  // ascending by first member
  int largest = -1;                          // index into components, -1 if empty
  int largest_size() const {
    return largest < 0 ? 0 : static_cast<int>(components[largest].size());
  }
};

/// Digraph on the color classes of a coloring with one deficient class.
/// Class i has an arc to class j when some vertex of i has no neighbor in j.
/// Unassigned vertices (the held-out vertex of a fix phase) are ignored.
///
/// Neighbor counts are kept current by relocate(); arcs, accessibility and
/// terminality are brought up to date by refresh(), which recomputes only
/// the rows and columns of classes touched since the last refresh.
class ClassDigraph {
 public:
  ClassDigraph() = default;

  /// Throws PreconditionError unless the profile is one-deficient.
  static ClassDigraph build(const Graph& g, const Coloring& c);
  /// As above, and the deficient class must be `deficient`.
  static ClassDigraph build(const Graph& g, const Coloring& c, int deficient);
  // The digraph keeps a pointer to the graph, which must outlive it.
  static ClassDigraph build(Graph&&, const Coloring&) = delete;
  static ClassDigraph build(Graph&&, const Coloring&, int) = delete;

  const Graph& graph() const { return *graph_; }
  const Coloring& coloring() const { return coloring_; }
  int r() const { return r_; }
  int s() const { return s_; }
  int deficient() const { return deficient_; }
  int class_of(int v) const { return coloring_.class_of(v); }

  /// Number of neighbors of v inside class c (v itself may be unassigned).
  int neighbor_count(int v, int c) const { return counts_[static_cast<std::size_t>(v) * r_ + c]; }
  bool movable(int v, int c) const { return class_of(v) != c && neighbor_count(v, c) == 0; }

  bool has_arc(int i, int j) const { return !witnesses(i, j).empty(); }
  const std::vector<int>& witnesses(int i, int j) const {
    return arcs_[static_cast<std::size_t>(i) * r_ + j];
  }
  int arc_count() const;

  bool is_accessible(int c) const { return accessible_[c] != 0; }
  bool is_terminal(int c) const { return terminal_[c] != 0; }
  std::vector<int> accessible_classes() const;
  std::vector<int> terminal_classes() const;
  std::vector<int> nonaccessible_classes() const;
  int a() const { return a_; }
  int b() const { return r_ - a_; }

  /// Vertex of an accessible class that is ordinary: either only the
  /// deficient class is accessible, or its class is terminal and holds
  /// another vertex movable to a different accessible class.
  bool is_ordinary(int v) const;

  /// Shortest class path from `from` to `to`, restricted to classes with
  /// allowed[c] != 0 (empty span: all classes). Ties broken toward the
  /// lexicographically smallest class sequence. Empty result if unreachable.
  std::vector<int> shortest_path(int from, int to, std::span<const char> allowed = {}) const;

  StrongComponents strong_components_nonaccessible() const;
  SoloData solo_analysis(int v) const;

  /// f_W on every vertex of accessible class `cls`; `halved` lists W.
  WeightQuery weight(int cls, std::span<const int> halved) const;
  Rational weight_of(int v, std::span<const int> halved) const;

  /// Updates the coloring and neighbor counts; arcs wait for refresh().
  void relocate(int v, int to);
  /// Recomputes dirty rows/columns, the deficient class and accessibility.
  /// Leaves deficient() == -1 when the profile is not one-deficient.
  void refresh();
  /// Recomputes everything from scratch.
  void rebuild();
  bool clean() const { return dirty_.empty(); }

  /// Same arcs (with witness lists), accessibility and terminality.
  bool same_structure(const ClassDigraph& other) const;

 private:
  void recompute_row(int i);
  void recompute_column(int j);
  void recompute_reachability();
  std::vector<char> reach_deficient(int skip) const;

  const Graph* graph_ = nullptr;
  Coloring coloring_;
  int r_ = 0;
  int s_ = 0;
  int deficient_ = -1;
  int a_ = 0;
  std::vector<int> counts_;
  std::vector<std::vector<int>> arcs_;
  std::vector<char> accessible_;
  std::vector<char> terminal_;
  std::vector<int> dirty_;
};

}  // namespace equicolor
