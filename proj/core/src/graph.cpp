#include "equicolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <deque>
#include <set>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

Graph::Graph(int n) : offsets_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0) {
  if (n < 0) throw InvalidInput("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InvalidInput("negative vertex count");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + " " +
                         std::to_string(e.v));
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    auto& a = adj[v];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw InvalidInput("parallel edge at vertex " + std::to_string(v));
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<int>(a.size());
  }
  g.targets_.reserve(static_cast<std::size_t>(g.offsets_[n]));
  for (const auto& a : adj) g.targets_.insert(g.targets_.end(), a.begin(), a.end());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (num_vertices() == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < num_vertices(); ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges()));
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

Graph Graph::with_edge(int u, int v) const {
  auto es = edges();
  es.push_back({std::min(u, v), std::max(u, v)});
  return from_edges(num_vertices(), es);
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v))
    throw PreconditionError("delete_edge: no edge " + std::to_string(u) + " " + std::to_string(v));
  Edge gone{std::min(u, v), std::max(u, v)};
  auto es = g.edges();
  std::erase(es, gone);
  return Graph::from_edges(g.num_vertices(), es);
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  Subgraph s;
  s.from_parent.assign(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v : sorted) {
    if (v < 0 || v >= g.num_vertices()) throw PreconditionError("induced_subgraph: bad vertex");
    s.from_parent[v] = static_cast<int>(s.to_parent.size());
    s.to_parent.push_back(v);
  }
  std::vector<Edge> es;
  for (int v : sorted)
    for (int w : g.neighbors(v))
      if (v < w && s.from_parent[w] >= 0) es.push_back({s.from_parent[v], s.from_parent[w]});
  s.graph = Graph::from_edges(static_cast<int>(sorted.size()), es);
  return s;
}

Subgraph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices())
    throw PreconditionError("delete_vertex: no vertex " + std::to_string(v));
  std::vector<int> keep;
  keep.reserve(static_cast<std::size_t>(g.num_vertices()));
  for (int w = 0; w < g.num_vertices(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  const int shift = a.num_vertices();
  for (Edge e : b.edges()) es.push_back({e.u + shift, e.v + shift});
  return Graph::from_edges(a.num_vertices() + b.num_vertices(), es);
}

DegeneracyResult degeneracy_order(const Graph& g) {
  const int n = g.num_vertices();
  DegeneracyResult res;
  res.order.reserve(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    res.order.push_back(v);
    res.degeneracy = std::max(res.degeneracy, d);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return res;
}

int max_forward_degree(const Graph& g, std::span<const int> order) {
  std::vector<int> pos(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  int best = 0;
  for (int v : order) {
    int later = 0;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v]) ++later;
    best = std::max(best, later);
  }
  return best;
}

std::int64_t edge_bound_limit(int n, EdgeBound kind) {
  const std::int64_t nn = n;
  std::int64_t lim = 0;
  switch (kind) {
    case EdgeBound::general:
      lim = 4 * nn - 8;
      break;
    case EdgeBound::bipartite:
      lim = 3 * nn - 6;
      break;
    case EdgeBound::bipartite_strict:
      lim = n >= 4 ? 3 * nn - 8 : 3 * nn - 6;
      break;
  }
  return std::max<std::int64_t>(lim, 0);
}

bool check_edge_bound(const Graph& g, EdgeBound kind) {
  return g.num_edges() <= edge_bound_limit(g.num_vertices(), kind);
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const int n = g.num_vertices();
  Bipartition bp;
  bp.side.assign(static_cast<std::size_t>(n), -1);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (bp.side[root] >= 0) continue;
    bp.side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(v)) {
        if (bp.side[w] < 0) {
          bp.side[w] = 1 - bp.side[v];
          queue.push_back(w);
        } else if (bp.side[w] == bp.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int s : bp.side) (s == 0 ? bp.size0 : bp.size1)++;
  return bp;
}

namespace {

bool subset_violates(const Graph& g, std::span<const int> subset) {
  Subgraph s = induced_subgraph(g, subset);
  return !check_edge_bound(s.graph, EdgeBound::general);
}

}  // namespace

HereditaryReport check_hereditary_bound(const Graph& g, int samples, std::uint64_t seed) {
  HereditaryReport rep;
  const int n = g.num_vertices();
  if (degeneracy_order(g).degeneracy > 7) {
    rep.ok = false;
    for (int v = 0; v < n; ++v) rep.violating_subset.push_back(v);
    return rep;
  }
  std::vector<int> subset;
  if (n <= 15) {
    rep.exhaustive = true;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 3) continue;
      subset.clear();
      for (int v = 0; v < n; ++v)
        if (mask & (1u << v)) subset.push_back(v);
      ++rep.subgraphs_checked;
      if (subset_violates(g, subset)) {
        rep.ok = false;
        rep.violating_subset = subset;
        return rep;
      }
    }
    return rep;
  }
  std::mt19937_64 rng(seed);
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  std::uniform_int_distribution<int> size_dist(3, n);
  for (int i = 0; i < samples; ++i) {
    std::shuffle(all.begin(), all.end(), rng);
    int k = size_dist(rng);
    subset.assign(all.begin(), all.begin() + k);
    ++rep.subgraphs_checked;
    if (subset_violates(g, subset)) {
      rep.ok = false;
      std::sort(subset.begin(), subset.end());
      rep.violating_subset = subset;
      return rep;
    }
  }
  return rep;
}

}  // namespace equicolor
