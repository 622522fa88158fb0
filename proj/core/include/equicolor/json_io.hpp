#pragma once

#include <nlohmann/json.hpp>
#include <span>
#include <vector>

#include "equicolor/class_digraph.hpp"
#include "equicolor/coloring.hpp"
#include "equicolor/move_engine.hpp"
#include "equicolor/solver.hpp"

namespace equicolor {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"schema", "r", "assignment", "class_sizes"}
Json coloring_to_json(const Coloring& c);
/// Throws InvalidInput on a malformed document.
Coloring coloring_from_json(const Json& j);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);
Json moves_to_json(std::span<const Move> moves);
std::vector<Move> moves_from_json(const Json& j);

/// Stuck-state diagnostic: arcs with witness counts, the accessible,
/// terminal and nonaccessible classes, and the unhalved weights as "p/q".
Json digraph_to_json(const ClassDigraph& d, int heldout);

Json stats_to_json(const SolverStats& stats);

Json trace_to_json(const RunTrace& trace);
RunTrace trace_from_json(const Json& j);

}  // namespace equicolor
