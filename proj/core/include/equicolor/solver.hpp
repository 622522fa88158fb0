#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"
#include "equicolor/move_engine.hpp"

namespace equicolor {

enum class SolveMode { one_planar, hs };

std::string to_string(SolveMode mode);
SolveMode parse_mode(const std::string& text);  // "one-planar" | "hs"

struct SolverConfig {
  int r = 13;
  SolveMode mode = SolveMode::one_planar;
  SearchBudget budget;
  std::uint64_t seed = 0;
  /// In one-planar mode also check m <= 4n - 8 and degeneracy <= 7 up front.
  bool strict_validation = false;
  /// Pick the re-added edge's second endpoint uniformly from seed instead of
  /// the lowest-id neighbor.
  bool random_neighbor = false;
  /// Upper end of the hs-mode fallback depth escalation.
  int hs_depth_cap = 32;

  /// Throws InvalidInput when r or the budget is out of range.
  void validate() const;
};

/// Throws InvalidInput unless `g` meets the contract of `cfg.mode`.
void validate_input(const Graph& g, const SolverConfig& cfg);

struct PeelStep {
  int x = -1;       // low endpoint
  int y = -1;
  int degree = 0;   // degree of x just before the edge is removed
};

struct PeelSchedule {
  std::vector<PeelStep> steps;  // removal order; edges are re-added in reverse
};

/// Repeatedly removes an edge at a minimum positive degree vertex x
/// (ties to the lowest id). Throws InvalidInput if that degree exceeds
/// `max_low_degree`.
PeelSchedule peel_schedule(const Graph& g, int max_low_degree = 7, bool random_neighbor = false,
                           std::uint64_t seed = 0);

enum class ReductionKind { identity, pad, strip };
std::string to_string(ReductionKind kind);

struct ReductionRecipe {
  ReductionKind kind = ReductionKind::identity;
  int r = 1;
  int original_n = 0;
  int t = 0;                   // r - (n mod r), 0 for identity
  std::vector<int> stripped;   // strip: removed vertices, in degeneracy order
  std::vector<int> kept;       // strip: reduced id -> original id

  /// Maps an equitable coloring of the reduced graph back to `original`.
  Coloring restore(const Graph& original, const Coloring& reduced) const;
};

struct Reduction {
  Graph graph;
  ReductionRecipe recipe;
};

/// Makes the vertex count divisible by r: pads with K_t when t <= 6 (or
/// always when `pad_only`), otherwise strips the first r - t vertices of a
/// degeneracy order.
Reduction divisibility_reduce(const Graph& g, int r, bool pad_only = false);

struct FixEvent {
  int x = -1;
  int y = -1;
  bool conflict = false;
  std::vector<Move> moves;           // including the final insertion
  std::vector<std::string> patterns; // one per improvement round
};

struct RunTrace {
  int r = 0;
  SolveMode mode = SolveMode::one_planar;
  std::uint64_t seed = 0;
  ReductionRecipe reduction;
  std::vector<FixEvent> events;      // one per re-added edge, in order
};

struct SolverStats {
  int edges_readded = 0;
  int fix_phases = 0;
  int improvement_rounds = 0;
  int pattern_rounds = 0;
  int fallback_rounds = 0;
  long long fallback_nodes = 0;
  long long candidates_tried = 0;
  int max_rounds_in_phase = 0;
  std::map<std::string, int> pattern_counts;
};

struct SolverHooks {
  /// Called once per conflict, on the digraph right after x is held out.
  std::function<void(const ClassDigraph&, int heldout)> on_fix_entry;
  std::function<void(const ClassDigraph&, int heldout)> on_improve_entry;
  std::function<void(const ImproveResult&)> on_improve_done;
};

struct SolveResult {
  Coloring coloring;
  RunTrace trace;
  SolverStats stats;
};

/// Proper equitable r-coloring of g, verified before return.
SolveResult equitable_color(const Graph& g, const SolverConfig& cfg,
                            const SolverHooks* hooks = nullptr);

/// Hajnal-Szemeredi mode: r must be at least max degree + 1.
Coloring hs_color(const Graph& g, int r, std::uint64_t seed = 0);

struct FixReport {
  FixEvent event;
  int rounds = 0;
};

/// `c` is a proper equitable coloring (all classes of equal size) of g
/// without the edge xy, with x and y in the same class. Holds x out and
/// alternates insertion attempts with accessibility improvements.
Coloring fix_conflict(const Graph& g, const Coloring& c, int x, int y,
                      const ImproveOptions& options, FixReport* report = nullptr,
                      SolverStats* stats = nullptr);

/// Replays a trace against the original graph, checking every move.
/// Returns the final coloring; throws InvalidInput on any mismatch.
Coloring replay_trace(const Graph& original, const RunTrace& trace);

}  // namespace equicolor
