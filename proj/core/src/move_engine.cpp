#include "equicolor/move_engine.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "equicolor/errors.hpp"
#include "equicolor/json_io.hpp"
#include "search.hpp"

namespace equicolor {

void SearchBudget::validate() const {
  if (max_pattern_attempts <= 0 || max_fallback_depth <= 0 || max_fallback_nodes <= 0)
    throw InvalidInput("search budget fields must be positive");
}

FixState FixState::begin(const Graph& g, const Coloring& full, int heldout) {
  Coloring c = full;
  c.unassign(heldout);
  FixState state;
  state.digraph = ClassDigraph::build(g, c);
  state.heldout = heldout;
  return state;
}

namespace detail {

std::optional<RawFailure> apply_raw(ClassDigraph& d, std::span<const Move> moves) {
  std::size_t i = 0;
  while (i < moves.size()) {
    std::size_t j = i;
    while (j < moves.size() && moves[j].step == moves[i].step) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const Move& m = moves[k];
      if (m.vertex < 0 || m.vertex >= d.graph().num_vertices() || m.to < 0 || m.to >= d.r() ||
          m.from == m.to || d.class_of(m.vertex) != m.from || m.from < 0) {
        return RawFailure{"vertex " + std::to_string(m.vertex) + " is not in class " +
                              std::to_string(m.from),
                          m.vertex, true, false};
      }
      d.relocate(m.vertex, m.to);
    }
    for (std::size_t k = i; k < j; ++k) {
      const Move& m = moves[k];
      if (d.neighbor_count(m.vertex, m.to) != 0)
        return RawFailure{"vertex " + std::to_string(m.vertex) + " has a neighbor in class " +
                              std::to_string(m.to),
                          m.vertex, false, false};
    }
    i = j;
  }
  d.refresh();
  if (d.deficient() < 0) return RawFailure{"profile is not one-deficient", -1, false, true};
  return std::nullopt;
}

std::vector<int> distances_to_deficient(const ClassDigraph& d) {
  std::vector<int> dist(static_cast<std::size_t>(d.r()), -1);
  if (d.deficient() < 0) return dist;
  std::deque<int> queue{d.deficient()};
  dist[d.deficient()] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < d.r(); ++k) {
      if (dist[k] >= 0 || !d.has_arc(k, cur)) continue;
      dist[k] = dist[cur] + 1;
      queue.push_back(k);
    }
  }
  return dist;
}

std::optional<int> plan_normalize(const ClassDigraph& d, std::vector<Move>& out) {
  const int a = d.a();
  const int def = d.deficient();
  if (a == 2) {
    for (int c : d.accessible_classes())
      if (c != def) return c;
  }
  if (a != 3 && a != 4)
    throw PreconditionError("terminal normalization needs a in {2, 3, 4}, got " + std::to_string(a));
  for (int t : d.terminal_classes())
    if (d.has_arc(t, def)) return t;
  auto dist = distances_to_deficient(d);
  int far = -1;
  for (int c = 0; c < d.r(); ++c)
    if (dist[c] > 0 && (far < 0 || dist[c] > dist[far])) far = c;
  if (far < 0) return std::nullopt;
  auto path = d.shortest_path(far, def);
  if (path.size() < 3) return std::nullopt;
  int before = path[path.size() - 2];
  int v = d.witnesses(before, def).front();
  std::vector<Move> rev{{v, before, def, "arc-reversal", 0}};
  ClassDigraph copy = d;
  if (apply_raw(copy, rev)) return std::nullopt;
  if (copy.a() < a) return std::nullopt;
  std::optional<int> pick;
  if (copy.is_terminal(def) && copy.has_arc(def, copy.deficient())) pick = def;
  for (int t : copy.terminal_classes()) {
    if (pick) break;
    if (copy.has_arc(t, copy.deficient())) pick = t;
  }
  if (!pick) return std::nullopt;
  out.insert(out.end(), rev.begin(), rev.end());
  return pick;
}

}  // namespace detail

MoveTrace apply_sequence(FixState& state, std::span<const Move> moves) {
  MoveTrace trace;
  trace.sizes_before = state.digraph.coloring().class_sizes();
  trace.a_before = state.digraph.a();
  if (moves.empty()) {
    trace.sizes_after = trace.sizes_before;
    trace.a_after = trace.a_before;
    return trace;
  }
  ClassDigraph saved = state.digraph;
  if (auto fail = detail::apply_raw(state.digraph, moves)) {
    state.digraph = std::move(saved);
    if (fail->stale) throw StalePlan("stale move: " + fail->what);
    if (fail->profile) throw PreconditionError("move sequence breaks the profile: " + fail->what);
    throw IllegalMove("illegal move: " + fail->what, fail->vertex);
  }
  int prev = moves.front().step;
  for (const Move& m : moves) {
    if (m.step != prev) {
      ++state.next_step;
      prev = m.step;
    }
    Move logged = m;
    logged.step = state.next_step;
    state.log.push_back(logged);
    trace.moves.push_back(logged);
  }
  ++state.next_step;
  trace.sizes_after = state.digraph.coloring().class_sizes();
  trace.a_after = state.digraph.a();
  return trace;
}

std::vector<Move> plan_path_shift(const ClassDigraph& d, std::span<const int> path,
                                  const std::string& tag) {
  std::vector<Move> out;
  if (path.size() < 2) return out;
  for (std::size_t k = path.size() - 1; k >= 1; --k) {
    int from = path[k - 1];
    int to = path[k];
    if (!d.has_arc(from, to))
      throw StalePlan("no arc from class " + std::to_string(from) + " to " + std::to_string(to));
    out.push_back({d.witnesses(from, to).front(), from, to, tag,
                   static_cast<int>(path.size() - 1 - k)});
  }
  return out;
}

MoveTrace shift_path(FixState& state, std::span<const int> path) {
  if (path.empty()) throw PreconditionError("empty path");
  if (path.back() != state.digraph.deficient())
    throw PreconditionError("path must end at the deficient class");
  auto moves = plan_path_shift(state.digraph, path);
  return apply_sequence(state, moves);
}

std::optional<int> normalize_terminal(FixState& state) {
  std::vector<Move> moves;
  auto t = detail::plan_normalize(state.digraph, moves);
  if (t) apply_sequence(state, moves);
  return t;
}

std::optional<int> insertion_class(const ClassDigraph& d, int heldout) {
  auto dist = detail::distances_to_deficient(d);
  std::optional<int> best;
  for (int c = 0; c < d.r(); ++c) {
    if (dist[c] < 0 || d.neighbor_count(heldout, c) != 0) continue;
    if (!best || dist[c] < dist[*best]) best = c;
  }
  return best;
}

Coloring insert_heldout(FixState& state) {
  auto c = insertion_class(state.digraph, state.heldout);
  if (!c)
    throw StuckVertex("held-out vertex " + std::to_string(state.heldout) +
                          " has a neighbor in every accessible class",
                      state.heldout);
  auto path = state.digraph.shortest_path(*c, state.digraph.deficient());
  shift_path(state, path);
  state.digraph.relocate(state.heldout, *c);
  state.digraph.refresh();
  state.log.push_back({state.heldout, -1, *c, "insert", state.next_step++});
  return state.digraph.coloring();
}

StuckAudit audit_stuck_state(const ClassDigraph& d) {
  StuckAudit au;
  au.r = d.r();
  au.s = d.s();
  au.a = d.a();
  au.b = d.b();
  au.abs_product = static_cast<long long>(au.a) * au.b * au.s;
  au.cross_bound = 3LL * (static_cast<long long>(au.r) * au.s - 1) - 8;
  const Graph& g = d.graph();
  for (int v = 0; v < g.num_vertices(); ++v) {
    int c = d.class_of(v);
    if (c < 0 || !d.is_accessible(c)) continue;
    for (int w : g.neighbors(v)) {
      int k = d.class_of(w);
      if (k >= 0 && !d.is_accessible(k)) ++au.cross_edges;
    }
    SoloData sd = d.solo_analysis(v);
    if (sd.q() > 0) ++au.solo_vertices;
    if (sd.q() >= 7) {
      ++au.large_solo_vertices;
      if (sd.q_nice() < sd.q() - 3) ++au.q_nice_violations;
    }
  }
  au.largest_component = d.strong_components_nonaccessible().largest_size();
  return au;
}

ImproveResult improve_accessibility(FixState& state, const ImproveOptions& options) {
  options.budget.validate();
  const ClassDigraph& d = state.digraph;
  if (options.hooks && options.hooks->on_entry) options.hooks->on_entry(d, state.heldout);
  ImproveResult res;
  res.a_before = d.a();
  if (options.mode == ImproveMode::one_planar && res.a_before >= 8)
    throw PreconditionError("a = " + std::to_string(res.a_before) +
                            " >= 8: the held-out vertex should have been inserted");

  if (auto found = detail::find_pattern(d, state.heldout, options.budget.max_pattern_attempts,
                                        res.candidates_tried)) {
    res.pattern = found->pattern;
    res.trace = apply_sequence(state, found->moves);
    res.a_after = state.digraph.a();
    return res;
  }

  int depth = options.budget.max_fallback_depth;
  long long nodes = options.budget.max_fallback_nodes;
  while (true) {
    long long used = 0;
    auto moves = detail::fallback_search(d, state.heldout, depth, nodes, used);
    res.fallback_nodes += static_cast<int>(std::min<long long>(used, 1 << 30));
    if (moves) {
      res.pattern = "fallback";
      res.trace = apply_sequence(state, *moves);
      res.a_after = state.digraph.a();
      return res;
    }
    if (options.mode != ImproveMode::hs || depth >= options.depth_cap) break;
    depth = std::min(depth * 2, options.depth_cap);
    nodes *= 2;
  }
  throw ImprovementNotFound("no accessibility improvement within budget (a = " +
                                std::to_string(res.a_before) + ", depth " +
                                std::to_string(depth) + ")",
                            digraph_to_json(d, state.heldout).dump());
}

}  // namespace equicolor
