#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equicolor/class_digraph.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

/// Relocation of one vertex. Moves sharing a `step` form an atomic group:
/// all of them are applied before any is checked for legality, which is how
/// two adjacent vertices trade classes.
struct Move {
  int vertex = -1;
  int from = -1;
  int to = -1;
  std::string tag;
  int step = 0;
  bool operator==(const Move&) const = default;
};

struct MoveTrace {
  std::vector<Move> moves;
  std::vector<int> sizes_before;
  std::vector<int> sizes_after;
  int a_before = 0;
  int a_after = 0;
};

struct SearchBudget {
  int max_pattern_attempts = 32;
  int max_fallback_depth = 4;
  int max_fallback_nodes = 200000;
  /// Throws InvalidInput unless every field is positive.
  void validate() const;
};

/// One fix phase: the class digraph of the current coloring with the
/// held-out vertex unassigned, and every move applied so far.
struct FixState {
  ClassDigraph digraph;
  int heldout = -1;
  std::vector<Move> log;
  int next_step = 0;

  /// Unassigns `heldout` from `full` (a proper equitable coloring with all
  /// classes of equal size) and builds the digraph.
  static FixState begin(const Graph& g, const Coloring& full, int heldout);
};

/// Applies `moves` group by group. On an illegal move, a stale `from`
/// class, or a final profile that is not one-deficient, the state is
/// restored and IllegalMove / StalePlan / PreconditionError is thrown.
/// Step ids are renumbered into the state's global step counter.
MoveTrace apply_sequence(FixState& state, std::span<const Move> moves);

/// Witness moves transporting the deficit from path.front() to the class at
/// path.back(). Uses the first (lowest id) witness of each arc; moves are
/// ordered from the end of the path back to its start, one step each.
/// Throws StalePlan if some consecutive pair is not an arc.
std::vector<Move> plan_path_shift(const ClassDigraph& d, std::span<const int> path,
                                  const std::string& tag = "path-shift");

/// path must end at the deficient class; afterwards path.front() is deficient.
MoveTrace shift_path(FixState& state, std::span<const int> path);

/// With a in {3, 4}: ensures some terminal class has an arc into the
/// deficient class, reversing one arc into the deficient class if needed;
/// a stays the same. With a = 2 returns the other accessible class.
/// Throws PreconditionError for other values of a; returns nullopt if the
/// structure cannot be reached (possible only on inputs outside the theory).
std::optional<int> normalize_terminal(FixState& state);

/// Accessible class the held-out vertex can join, preferring the deficient
/// class, then the shortest path to it, then the lowest index.
std::optional<int> insertion_class(const ClassDigraph& d, int heldout);

/// Shifts a path from an admissible accessible class to the deficient class
/// and places the held-out vertex there. Throws StuckVertex if none exists.
Coloring insert_heldout(FixState& state);

enum class ImproveMode { one_planar, hs };

struct StuckAudit {
  int r = 0;
  int s = 0;
  int a = 0;
  int b = 0;
  long long abs_product = 0;     // a * b * s
  long long cross_edges = 0;     // |E(A, B)|
  long long cross_bound = 0;     // 3(rs - 1) - 8
  int largest_component = 0;     // of the nonaccessible subdigraph
  int solo_vertices = 0;
  int large_solo_vertices = 0;   // q >= 7
  int q_nice_violations = 0;     // q >= 7 but q' < q - 3
  bool a_at_most_7() const { return a <= 7; }
  bool a_at_most_4() const { return a <= 4; }
  bool product_bound() const { return abs_product <= cross_edges && cross_edges <= cross_bound; }
  bool component_bound() const { return b == 0 || largest_component >= r - 4; }
  bool ok() const {
    return a_at_most_7() && a_at_most_4() && product_bound() && component_bound() &&
           q_nice_violations == 0;
  }
};

/// Measures the stuck-state inequalities on a digraph.
StuckAudit audit_stuck_state(const ClassDigraph& d);

struct ImproveHooks {
  std::function<void(const ClassDigraph&, int heldout)> on_entry;
};

struct ImproveOptions {
  SearchBudget budget;
  ImproveMode mode = ImproveMode::one_planar;
  /// Fallback depth limit for hs mode escalation (4, 8, 16, ... up to this).
  int depth_cap = 32;
  const ImproveHooks* hooks = nullptr;
};

struct ImproveResult {
  std::string pattern;   // tag of the pattern that fired, "fallback" for the search
  int a_before = 0;
  int a_after = 0;
  int candidates_tried = 0;
  int fallback_nodes = 0;
  MoveTrace trace;
};

/// Finds and applies a move sequence that strictly increases the number of
/// accessible classes (the deficient class may change). The generic
/// fallback search may instead stop at a state where the held-out vertex
/// becomes insertable. Throws ImprovementNotFound with a JSON dump when the
/// budget is exhausted, PreconditionError in one-planar mode when a >= 8.
ImproveResult improve_accessibility(FixState& state, const ImproveOptions& options);

}  // namespace equicolor
