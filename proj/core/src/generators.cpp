#include "equicolor/generators.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

Graph gen_q3_diagonals() {
  std::vector<Edge> es;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) {
      int diff = std::popcount(static_cast<unsigned>(u ^ v));
      if (diff == 1 || diff == 2) es.push_back({u, v});
    }
  return Graph::from_edges(8, es);
}

namespace {

// a + b * sqrt(2)
struct Surd {
  int a = 0;
  int b = 0;
  auto operator<=>(const Surd&) const = default;
};

Surd sub(Surd x, Surd y) { return {x.a - y.a, x.b - y.b}; }
Surd square(Surd x) { return {x.a * x.a + 2 * x.b * x.b, 2 * x.a * x.b}; }
Surd add(Surd x, Surd y) { return {x.a + y.a, x.b + y.b}; }

}  // namespace

Graph gen_rhombicuboctahedron_diagonals() {
  using Point = std::array<Surd, 3>;
  std::vector<Point> pts;
  for (int long_axis = 0; long_axis < 3; ++long_axis)
    for (int signs = 0; signs < 8; ++signs) {
      Point p;
      for (int k = 0; k < 3; ++k) {
        int sign = (signs >> k) & 1 ? -1 : 1;
        p[k] = k == long_axis ? Surd{sign, sign} : Surd{sign, 0};
      }
      pts.push_back(p);
    }
  std::sort(pts.begin(), pts.end());
  // Edges have squared length 4; face diagonals of the squares 8.
  const Surd edge{4, 0};
  const Surd diagonal{8, 0};
  std::vector<Edge> es;
  for (int i = 0; i < 24; ++i)
    for (int j = i + 1; j < 24; ++j) {
      Surd d2{0, 0};
      for (int k = 0; k < 3; ++k) d2 = add(d2, square(sub(pts[i][k], pts[j][k])));
      if (d2 == edge || d2 == diagonal) es.push_back({i, j});
    }
  return Graph::from_edges(24, es);
}

Graph gen_grid_diagonals(int rows, int cols) {
  if (rows < 2 || cols < 2) throw InvalidInput("grid_diag needs rows, cols >= 2");
  auto id = [cols](int i, int j) { return i * cols + j; };
  std::vector<Edge> es;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) es.push_back({id(i, j), id(i, j + 1)});
      if (i + 1 < rows) es.push_back({id(i, j), id(i + 1, j)});
      if (i + 1 < rows && j + 1 < cols) {
        es.push_back({id(i, j), id(i + 1, j + 1)});
        es.push_back({id(i, j + 1), id(i + 1, j)});
      }
    }
  return Graph::from_edges(rows * cols, es);
}

Graph gen_complete(int t) {
  if (t < 0) throw InvalidInput("complete graph size must be nonnegative");
  std::vector<Edge> es;
  for (int u = 0; u < t; ++u)
    for (int v = u + 1; v < t; ++v) es.push_back({u, v});
  return Graph::from_edges(t, es);
}

Graph gen_complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw InvalidInput("complete bipartite sides must be nonnegative");
  std::vector<Edge> es;
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) es.push_back({u, p + v});
  return Graph::from_edges(p + q, es);
}

Graph gen_random_subgraph(int rows, int cols, int keep, std::uint64_t seed) {
  Graph big = gen_grid_diagonals(rows, cols);
  const int n = big.num_vertices();
  if (keep < 0 || keep > n) throw InvalidInput("random_subgraph: keep out of range");
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(static_cast<std::size_t>(keep));
  return induced_subgraph(big, ids).graph;
}

Graph gen_random_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw InvalidInput("gnp: bad parameters");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) es.push_back({u, v});
  return Graph::from_edges(n, es);
}

void GenSpec::validate() const {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidInput(family + " takes " + std::to_string(k) + " parameters");
  };
  if (family == "q3_diag" || family == "rhombi_diag")
    need(0);
  else if (family == "grid_diag" || family == "complete_bipartite")
    need(2);
  else if (family == "complete")
    need(1);
  else if (family == "random_subgraph")
    need(3);
  else
    throw InvalidInput("unknown generator family: " + family);
}

bool GenSpec::one_planar() const {
  if (family == "complete") return !params.empty() && params[0] <= 6;
  return family != "complete_bipartite";
}

Graph generate(const GenSpec& spec) {
  spec.validate();
  const auto& p = spec.params;
  if (spec.family == "q3_diag") return gen_q3_diagonals();
  if (spec.family == "rhombi_diag") return gen_rhombicuboctahedron_diagonals();
  if (spec.family == "grid_diag") return gen_grid_diagonals(p[0], p[1]);
  if (spec.family == "complete") return gen_complete(p[0]);
  if (spec.family == "complete_bipartite") return gen_complete_bipartite(p[0], p[1]);
  return gen_random_subgraph(p[0], p[1], p[2], spec.seed);
}

namespace {

// Seed 0 keeps the canonical layout; other seeds permute vertex ids and
// class labels.
StuckInstance relabeled(StuckInstance inst, std::uint64_t seed) {
  if (seed == 0) return inst;
  const int n = inst.graph.num_vertices();
  std::mt19937_64 rng(seed);
  std::vector<int> vperm(static_cast<std::size_t>(n));
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<int> cperm(static_cast<std::size_t>(inst.r));
  std::iota(cperm.begin(), cperm.end(), 0);
  std::shuffle(cperm.begin(), cperm.end(), rng);
  std::vector<Edge> es;
  for (Edge e : inst.graph.edges()) es.push_back({vperm[e.u], vperm[e.v]});
  std::vector<int> cls(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) cls[vperm[v]] = cperm[inst.full.class_of(v)];
  inst.graph = Graph::from_edges(n, es);
  inst.full = Coloring::from_assignment(inst.r, cls);
  inst.heldout = vperm[inst.heldout];
  inst.partner = vperm[inst.partner];
  inst.name += "/" + std::to_string(seed);
  return inst;
}

}  // namespace

StuckInstance stuck_star_forest(std::uint64_t seed) {
  constexpr int r = 13;
  constexpr int s = 14;
  // ids: hubs 0..12, x = 13, leaves 14..181
  StuckInstance inst;
  inst.name = "star-forest";
  inst.r = r;
  inst.expected_a = 1;
  inst.heldout = r;
  inst.partner = 0;
  const int n = r * s;
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::vector<Edge> es{{0, r}};
  for (int leaf = 0; leaf < n - (r + 1); ++leaf) {
    const int v = r + 1 + leaf;
    cls[v] = 1 + leaf / s;
    // spread each hub's leaves over distinct classes where possible
    const int hub = (leaf + 1) % r;
    es.push_back({hub, v});
  }
  inst.graph = Graph::from_edges(n, es);
  inst.full = Coloring::from_assignment(r, cls);
  return relabeled(std::move(inst), seed);
}

StuckInstance stuck_double_hub(std::uint64_t seed) {
  constexpr int r = 13;
  constexpr int s = 14;
  // ids: first hubs 0..12, x = 13, second hubs 14..26, isolated 27,
  // leaves 28..181
  StuckInstance inst;
  inst.name = "double-hub";
  inst.r = r;
  inst.expected_a = 2;
  inst.heldout = r;
  inst.partner = 0;
  const int n = r * s;
  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::vector<Edge> es{{0, r}, {r, r + 1}};
  for (int v = r + 1; v <= 2 * r + 1; ++v) cls[v] = 1;
  for (int leaf = 0; leaf < n - 2 * s; ++leaf) {
    const int v = 2 * s + leaf;
    cls[v] = 2 + leaf / s;
    es.push_back({leaf % r, v});
    // the matching second hub shares the leaves, keeping each pair planar
    es.push_back({r + 1 + leaf % r, v});
  }
  inst.graph = Graph::from_edges(n, es);
  inst.full = Coloring::from_assignment(r, cls);
  return relabeled(std::move(inst), seed);
}

}  // namespace equicolor
