#include "equicolor/solver.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

std::string to_string(SolveMode mode) { return mode == SolveMode::hs ? "hs" : "one-planar"; }

SolveMode parse_mode(const std::string& text) {
  if (text == "one-planar") return SolveMode::one_planar;
  if (text == "hs") return SolveMode::hs;
  throw InvalidInput("unknown mode: " + text);
}

std::string to_string(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::pad:
      return "pad";
    case ReductionKind::strip:
      return "strip";
    default:
      return "identity";
  }
}

void SolverConfig::validate() const {
  if (r < 1) throw InvalidInput("r must be positive");
  if (mode == SolveMode::one_planar && r < 13)
    throw InvalidInput("one-planar mode needs r >= 13, got " + std::to_string(r));
  if (hs_depth_cap < 1) throw InvalidInput("hs depth cap must be positive");
  budget.validate();
}

void validate_input(const Graph& g, const SolverConfig& cfg) {
  cfg.validate();
  const int delta = g.max_degree();
  if (cfg.mode == SolveMode::hs) {
    if (cfg.r < delta + 1)
      throw InvalidInput("hs mode needs r >= max degree + 1 = " + std::to_string(delta + 1));
    return;
  }
  if (delta > cfg.r)
    throw InvalidInput("max degree " + std::to_string(delta) + " exceeds r = " +
                       std::to_string(cfg.r));
  if (!cfg.strict_validation) return;
  if (g.num_vertices() >= 3 && !check_edge_bound(g, EdgeBound::general))
    throw InvalidInput("edge count " + std::to_string(g.num_edges()) + " exceeds 4n - 8");
  const int k = degeneracy_order(g).degeneracy;
  if (k > 7) throw InvalidInput("degeneracy " + std::to_string(k) + " exceeds 7");
}

PeelSchedule peel_schedule(const Graph& g, int max_low_degree, bool random_neighbor,
                           std::uint64_t seed) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
    if (!adj[v].empty()) queue.emplace(g.degree(v), v);
  }
  std::mt19937_64 rng(seed);
  auto drop = [&](int v, int w) {
    auto& a = adj[v];
    queue.erase({static_cast<int>(a.size()), v});
    a.erase(std::lower_bound(a.begin(), a.end(), w));
    if (!a.empty()) queue.emplace(static_cast<int>(a.size()), v);
  };
  PeelSchedule out;
  out.steps.reserve(static_cast<std::size_t>(g.num_edges()));
  while (!queue.empty()) {
    auto [d, x] = *queue.begin();
    if (d > max_low_degree)
      throw InvalidInput("no vertex of degree at most " + std::to_string(max_low_degree) +
                         " left to peel (minimum " + std::to_string(d) + " at vertex " +
                         std::to_string(x) + ")");
    int y = adj[x].front();
    if (random_neighbor) {
      std::uniform_int_distribution<std::size_t> pick(0, adj[x].size() - 1);
      y = adj[x][pick(rng)];
    }
    out.steps.push_back({x, y, d});
    drop(x, y);
    drop(y, x);
  }
  return out;
}

Coloring ReductionRecipe::restore(const Graph& original, const Coloring& reduced) const {
  const int n = original.num_vertices();
  if (kind == ReductionKind::identity) return reduced;
  Coloring out(n, r);
  if (kind == ReductionKind::pad) {
    for (int v = 0; v < n; ++v) out.assign(v, reduced.class_of(v));
    return out;
  }
  for (std::size_t i = 0; i < kept.size(); ++i) out.assign(kept[i], reduced.class_of(static_cast<int>(i)));
  std::vector<int> refill(stripped.rbegin(), stripped.rend());
  const int s = (n + r - 1) / r;
  return greedy_balanced_extend(original, std::move(out), refill, s);
}

Reduction divisibility_reduce(const Graph& g, int r, bool pad_only) {
  if (r < 1) throw InvalidInput("r must be positive");
  const int n = g.num_vertices();
  Reduction red;
  red.recipe.r = r;
  red.recipe.original_n = n;
  const int rem = n % r;
  if (rem == 0) {
    red.graph = g;
    return red;
  }
  const int t = r - rem;
  red.recipe.t = t;
  if (t <= 6 || pad_only) {
    red.recipe.kind = ReductionKind::pad;
    std::vector<Edge> clique;
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j) clique.push_back({i, j});
    red.graph = disjoint_union(g, Graph::from_edges(t, clique));
    return red;
  }
  red.recipe.kind = ReductionKind::strip;
  auto order = degeneracy_order(g).order;
  red.recipe.stripped.assign(order.begin(), order.begin() + (r - t));
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int v : red.recipe.stripped) gone[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!gone[v]) red.recipe.kept.push_back(v);
  red.graph = induced_subgraph(g, red.recipe.kept).graph;
  return red;
}

namespace {

ImproveOptions improve_options(const SolverConfig& cfg, const ImproveHooks* hooks) {
  ImproveOptions opt;
  opt.budget = cfg.budget;
  opt.mode = cfg.mode == SolveMode::hs ? ImproveMode::hs : ImproveMode::one_planar;
  opt.depth_cap = cfg.hs_depth_cap;
  opt.hooks = hooks;
  return opt;
}

void record(SolverStats* stats, const ImproveResult& res) {
  if (!stats) return;
  ++stats->improvement_rounds;
  stats->candidates_tried += res.candidates_tried;
  stats->fallback_nodes += res.fallback_nodes;
  if (res.pattern == "fallback")
    ++stats->fallback_rounds;
  else
    ++stats->pattern_rounds;
  ++stats->pattern_counts[res.pattern];
}

Coloring fix_impl(const Graph& g, const Coloring& c, int x, int y, const ImproveOptions& options,
                  FixReport* report, SolverStats* stats,
                  const SolverHooks* hooks) {
  if (!g.has_edge(x, y)) throw PreconditionError("fix_conflict: xy is not an edge");
  if (c.class_of(x) != c.class_of(y))
    throw PreconditionError("fix_conflict: x and y are in different classes");
  FixState state = FixState::begin(g, c, x);
  if (stats) ++stats->fix_phases;
  if (hooks && hooks->on_fix_entry) hooks->on_fix_entry(state.digraph, x);
  FixReport local;
  local.event.x = x;
  local.event.y = y;
  local.event.conflict = true;
  // Every round raises a or ends with x insertable, so r + 1 rounds suffice
  // on valid inputs; the cap only guards against looping on others.
  const int max_rounds = 4 * state.digraph.r() + 4;
  Coloring result;
  for (int round = 0;; ++round) {
    if (insertion_class(state.digraph, x)) {
      result = insert_heldout(state);
      break;
    }
    if (round >= max_rounds)
      throw ImprovementNotFound("fix phase did not converge", std::string{});
    ImproveResult res = improve_accessibility(state, options);
    record(stats, res);
    if (hooks && hooks->on_improve_done) hooks->on_improve_done(res);
    local.event.patterns.push_back(res.pattern);
    ++local.rounds;
  }
  local.event.moves = state.log;
  if (stats) stats->max_rounds_in_phase = std::max(stats->max_rounds_in_phase, local.rounds);
  if (report) *report = std::move(local);
  return result;
}

Coloring solve_divisible(const Graph& g, const SolverConfig& cfg, const SolverHooks* hooks,
                         RunTrace& trace, SolverStats& stats) {
  const int n = g.num_vertices();
  const int max_low = cfg.mode == SolveMode::one_planar ? 7 : g.num_vertices();
  PeelSchedule schedule = peel_schedule(g, max_low, cfg.random_neighbor, cfg.seed);
  Coloring c = round_robin(n, cfg.r);
  ImproveHooks improve_hooks;
  if (hooks && hooks->on_improve_entry) improve_hooks.on_entry = hooks->on_improve_entry;
  ImproveOptions opt = improve_options(cfg, hooks ? &improve_hooks : nullptr);

  std::vector<Edge> current;
  current.reserve(schedule.steps.size());
  for (auto it = schedule.steps.rbegin(); it != schedule.steps.rend(); ++it) {
    const int x = it->x;
    const int y = it->y;
    current.push_back({std::min(x, y), std::max(x, y)});
    ++stats.edges_readded;
    FixEvent ev;
    ev.x = x;
    ev.y = y;
    if (c.class_of(x) == c.class_of(y)) {
      Graph now = Graph::from_edges(n, current);
      FixReport report;
      c = fix_impl(now, c, x, y, opt, &report, &stats, hooks);
      ev = std::move(report.event);
    }
    trace.events.push_back(std::move(ev));
  }
  return c;
}

}  // namespace

Coloring fix_conflict(const Graph& g, const Coloring& c, int x, int y,
                      const ImproveOptions& options, FixReport* report, SolverStats* stats) {
  return fix_impl(g, c, x, y, options, report, stats, nullptr);
}

SolveResult equitable_color(const Graph& g, const SolverConfig& cfg, const SolverHooks* hooks) {
  validate_input(g, cfg);
  SolveResult out;
  out.trace.r = cfg.r;
  out.trace.mode = cfg.mode;
  out.trace.seed = cfg.seed;
  Reduction red = divisibility_reduce(g, cfg.r, cfg.mode == SolveMode::hs);
  out.trace.reduction = red.recipe;
  Coloring reduced = solve_divisible(red.graph, cfg, hooks, out.trace, out.stats);
  out.coloring = red.recipe.restore(g, reduced);
  if (!verify_proper(g, out.coloring) || !verify_equitable(out.coloring))
    throw Error("internal error: final coloring failed verification");
  return out;
}

Coloring hs_color(const Graph& g, int r, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.r = r;
  cfg.mode = SolveMode::hs;
  cfg.seed = seed;
  return equitable_color(g, cfg).coloring;
}

namespace {

[[noreturn]] void mismatch(std::size_t index, const std::string& why) {
  throw InvalidInput("trace event " + std::to_string(index) + ": " + why);
}

}  // namespace

Coloring replay_trace(const Graph& original, const RunTrace& trace) {
  if (trace.r < 1) throw InvalidInput("trace: r must be positive");
  Reduction red = divisibility_reduce(original, trace.r, trace.mode == SolveMode::hs);
  const ReductionRecipe& want = trace.reduction;
  if (want.kind != red.recipe.kind || want.t != red.recipe.t ||
      want.stripped != red.recipe.stripped || want.original_n != red.recipe.original_n)
    throw InvalidInput("trace: reduction does not match the graph");
  const Graph& g = red.graph;
  const int n = g.num_vertices();
  if (trace.events.size() != static_cast<std::size_t>(g.num_edges()))
    throw InvalidInput("trace: expected " + std::to_string(g.num_edges()) + " events, got " +
                       std::to_string(trace.events.size()));

  Coloring c = round_robin(n, trace.r);
  std::set<Edge> added;
  std::vector<Edge> current;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const FixEvent& ev = trace.events[i];
    if (!g.has_edge(ev.x, ev.y)) mismatch(i, "not an edge of the graph");
    Edge e{std::min(ev.x, ev.y), std::max(ev.x, ev.y)};
    if (!added.insert(e).second) mismatch(i, "edge added twice");
    current.push_back(e);
    const bool conflict = c.class_of(ev.x) == c.class_of(ev.y);
    if (conflict != ev.conflict) mismatch(i, "conflict flag disagrees with the coloring");
    if (!conflict) {
      if (!ev.moves.empty()) mismatch(i, "moves recorded without a conflict");
      continue;
    }
    if (ev.moves.empty() || ev.moves.back().tag != "insert" || ev.moves.back().vertex != ev.x)
      mismatch(i, "fix phase must end by inserting the held-out vertex");
    Graph now = Graph::from_edges(n, current);
    FixState state = FixState::begin(now, c, ev.x);
    std::span<const Move> body(ev.moves.data(), ev.moves.size() - 1);
    try {
      if (!body.empty()) apply_sequence(state, body);
    } catch (const Error& err) {
      mismatch(i, err.what());
    }
    const Move& ins = ev.moves.back();
    if (ins.to < 0 || ins.to >= trace.r) mismatch(i, "insertion class out of range");
    if (state.digraph.deficient() != ins.to) mismatch(i, "insertion target is not deficient");
    if (state.digraph.neighbor_count(ev.x, ins.to) != 0)
      mismatch(i, "held-out vertex has a neighbor in its insertion class");
    c = state.digraph.coloring();
    c.assign(ev.x, ins.to);
    if (!verify_proper(now, c) || !verify_equitable(c)) mismatch(i, "result is not equitable");
  }
  Coloring out = trace.reduction.restore(original, c);
  if (!verify_proper(original, out) || !verify_equitable(out))
    throw InvalidInput("trace: restored coloring failed verification");
  return out;
}

}  // namespace equicolor
