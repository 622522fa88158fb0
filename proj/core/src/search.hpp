#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "equicolor/class_digraph.hpp"
#include "equicolor/move_engine.hpp"

namespace equicolor::detail {

struct RawFailure {
  std::string what;
  int vertex = -1;
  bool stale = false;
  bool profile = false;
};

/// Applies moves group by group without rolling back. Returns the failure
/// if some move is stale or illegal or the final profile is not
/// one-deficient; `d` is then left in an unspecified state.
std::optional<RawFailure> apply_raw(ClassDigraph& d, std::span<const Move> moves);

/// Plans the terminal normalization on `d`; appends its moves to `out`.
std::optional<int> plan_normalize(const ClassDigraph& d, std::vector<Move>& out);

/// Distance of every class to the deficient class in the digraph, -1 if
/// unreachable.
std::vector<int> distances_to_deficient(const ClassDigraph& d);

struct PatternFound {
  std::string pattern;
  std::vector<Move> moves;
};

/// Pattern pipeline: case analysis for the current a, then the generic
/// solo-vertex moves over every vertex. Counts validated candidates in `tried`.
std::optional<PatternFound> find_pattern(const ClassDigraph& d, int heldout, int max_attempts,
                                         int& tried);

/// Bounded iterative-deepening search over single relocations and swaps of
/// two adjacent vertices. Goal: a one-deficient state with more accessible
/// classes, or one where the held-out vertex is insertable.
std::optional<std::vector<Move>> fallback_search(const ClassDigraph& d, int heldout, int max_depth,
                                                 long long max_nodes, long long& nodes);

}  // namespace equicolor::detail
