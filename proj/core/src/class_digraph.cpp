#include "equicolor/class_digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

Rational WeightQuery::total() const {
  Rational sum = 0;
  for (const auto& x : values) sum += x;
  return sum;
}

ClassDigraph ClassDigraph::build(const Graph& g, const Coloring& c) {
  if (c.num_vertices() != g.num_vertices())
    throw PreconditionError("coloring and graph sizes differ");
  BalanceProfile p = balance_profile(c);
  if (!p.deficient) throw PreconditionError("class digraph needs a one-deficient profile");
  ClassDigraph d;
  d.graph_ = &g;
  d.coloring_ = c;
  d.r_ = c.num_classes();
  d.s_ = p.full_size;
  d.rebuild();
  return d;
}

ClassDigraph ClassDigraph::build(const Graph& g, const Coloring& c, int deficient) {
  ClassDigraph d = build(g, c);
  if (d.deficient_ != deficient)
    throw PreconditionError("class " + std::to_string(deficient) + " is not the deficient class");
  return d;
}

void ClassDigraph::rebuild() {
  const int n = graph_->num_vertices();
  counts_.assign(static_cast<std::size_t>(n) * r_, 0);
  for (int v = 0; v < n; ++v)
    for (int w : graph_->neighbors(v))
      if (coloring_.class_of(w) >= 0) ++counts_[static_cast<std::size_t>(v) * r_ + coloring_.class_of(w)];
  arcs_.assign(static_cast<std::size_t>(r_) * r_, {});
  for (int i = 0; i < r_; ++i) recompute_row(i);
  dirty_.clear();
  recompute_reachability();
}

void ClassDigraph::recompute_row(int i) {
  for (int j = 0; j < r_; ++j) {
    auto& list = arcs_[static_cast<std::size_t>(i) * r_ + j];
    list.clear();
    if (i == j) continue;
    for (int v : coloring_.members(i))
      if (neighbor_count(v, j) == 0) list.push_back(v);
  }
}

void ClassDigraph::recompute_column(int j) {
  for (int i = 0; i < r_; ++i) {
    auto& list = arcs_[static_cast<std::size_t>(i) * r_ + j];
    list.clear();
    if (i == j) continue;
    for (int v : coloring_.members(i))
      if (neighbor_count(v, j) == 0) list.push_back(v);
  }
}

void ClassDigraph::relocate(int v, int to) {
  int from = coloring_.class_of(v);
  if (from == to) return;
  if (from >= 0) {
    coloring_.unassign(v);
    for (int w : graph_->neighbors(v)) --counts_[static_cast<std::size_t>(w) * r_ + from];
    dirty_.push_back(from);
  }
  if (to >= 0) {
    coloring_.assign(v, to);
    for (int w : graph_->neighbors(v)) ++counts_[static_cast<std::size_t>(w) * r_ + to];
    dirty_.push_back(to);
  }
}

void ClassDigraph::refresh() {
  std::sort(dirty_.begin(), dirty_.end());
  dirty_.erase(std::unique(dirty_.begin(), dirty_.end()), dirty_.end());
  for (int c : dirty_) {
    recompute_row(c);
    recompute_column(c);
  }
  dirty_.clear();
  recompute_reachability();
}

std::vector<char> ClassDigraph::reach_deficient(int skip) const {
  std::vector<char> seen(static_cast<std::size_t>(r_), 0);
  if (deficient_ < 0) return seen;
  std::deque<int> queue{deficient_};
  seen[deficient_] = 1;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < r_; ++k) {
      if (seen[k] || k == skip || !has_arc(k, cur)) continue;
      seen[k] = 1;
      queue.push_back(k);
    }
  }
  return seen;
}

void ClassDigraph::recompute_reachability() {
  BalanceProfile p = balance_profile(coloring_);
  deficient_ = (p.deficient && p.full_size == s_) ? *p.deficient : -1;
  accessible_ = reach_deficient(-1);
  a_ = static_cast<int>(std::count(accessible_.begin(), accessible_.end(), 1));
  terminal_.assign(static_cast<std::size_t>(r_), 0);
  for (int c = 0; c < r_; ++c) {
    if (!accessible_[c] || c == deficient_) continue;
    auto seen = reach_deficient(c);
    bool ok = true;
    for (int k = 0; k < r_ && ok; ++k)
      if (k != c && accessible_[k] && !seen[k]) ok = false;
    terminal_[c] = ok ? 1 : 0;
  }
}

int ClassDigraph::arc_count() const {
  int total = 0;
  for (const auto& list : arcs_)
    if (!list.empty()) ++total;
  return total;
}

std::vector<int> ClassDigraph::accessible_classes() const {
  std::vector<int> out;
  for (int c = 0; c < r_; ++c)
    if (accessible_[c]) out.push_back(c);
  return out;
}

std::vector<int> ClassDigraph::terminal_classes() const {
  std::vector<int> out;
  for (int c = 0; c < r_; ++c)
    if (terminal_[c]) out.push_back(c);
  return out;
}

std::vector<int> ClassDigraph::nonaccessible_classes() const {
  std::vector<int> out;
  for (int c = 0; c < r_; ++c)
    if (!accessible_[c]) out.push_back(c);
  return out;
}

bool ClassDigraph::is_ordinary(int v) const {
  int c = class_of(v);
  if (c < 0 || !accessible_[c]) return false;
  if (a_ == 1) return true;
  if (!terminal_[c]) return false;
  for (int u : coloring_.members(c)) {
    if (u == v) continue;
    for (int l = 0; l < r_; ++l)
      if (l != c && accessible_[l] && neighbor_count(u, l) == 0) return true;
  }
  return false;
}

std::vector<int> ClassDigraph::shortest_path(int from, int to, std::span<const char> allowed) const {
  auto ok = [&](int c) { return allowed.empty() || allowed[c]; };
  if (!ok(from) || !ok(to)) return {};
  if (from == to) return {from};
  std::vector<int> dist(static_cast<std::size_t>(r_), -1);
  std::deque<int> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    for (int k = 0; k < r_; ++k) {
      if (dist[k] >= 0 || !ok(k) || !has_arc(k, cur)) continue;
      dist[k] = dist[cur] + 1;
      queue.push_back(k);
    }
  }
  if (dist[from] < 0) return {};
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    for (int k = 0; k < r_; ++k) {
      if (dist[k] == dist[cur] - 1 && ok(k) && has_arc(cur, k)) {
        cur = k;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

StrongComponents ClassDigraph::strong_components_nonaccessible() const {
  StrongComponents out;
  std::vector<int> nodes = nonaccessible_classes();
  const int b = static_cast<int>(nodes.size());
  std::vector<int> pos(static_cast<std::size_t>(r_), -1);
  for (int i = 0; i < b; ++i) pos[nodes[i]] = i;
  // reach[i][j]: class nodes[j] reachable from nodes[i] inside the subdigraph.
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(b), std::vector<char>(b, 0));
  for (int i = 0; i < b; ++i) {
    std::deque<int> queue{i};
    reach[i][i] = 1;
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int j = 0; j < b; ++j) {
        if (reach[i][j] || !has_arc(nodes[cur], nodes[j])) continue;
        reach[i][j] = 1;
        queue.push_back(j);
      }
    }
  }
  std::vector<int> comp(static_cast<std::size_t>(b), -1);
  for (int i = 0; i < b; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = static_cast<int>(out.components.size());
    out.components.push_back({nodes[i]});
    for (int j = i + 1; j < b; ++j) {
      if (comp[j] < 0 && reach[i][j] && reach[j][i]) {
        comp[j] = comp[i];
        out.components.back().push_back(nodes[j]);
      }
    }
  }
  for (int k = 0; k < static_cast<int>(out.components.size()); ++k)
    if (out.largest < 0 || out.components[k].size() > out.components[out.largest].size())
      out.largest = k;
  return out;
}

SoloData ClassDigraph::solo_analysis(int v) const {
  int c = class_of(v);
  if (c < 0 || !accessible_[c])
    throw PreconditionError("solo analysis needs a vertex of an accessible class");
  SoloData d;
  d.vertex = v;
  for (int w : graph_->neighbors(v)) {
    int k = class_of(w);
    if (k >= 0 && !accessible_[k] && neighbor_count(w, c) == 1) d.solo.push_back(w);
  }
  for (int u : d.solo) {
    for (int u2 : d.solo) {
      if (u2 != u && !graph_->has_edge(u, u2)) {
        d.nice.push_back(u);
        break;
      }
    }
  }
  for (int k = 0; k < r_; ++k)
    if (!accessible_[k] && neighbor_count(v, k) == 0) d.free_classes.push_back(k);
  return d;
}

namespace {

std::vector<char> halved_mask(int r, std::span<const int> halved) {
  std::vector<char> mask(static_cast<std::size_t>(r), 0);
  for (int k : halved) {
    if (k < 0 || k >= r) throw PreconditionError("weight: class out of range");
    mask[k] = 1;
  }
  return mask;
}

}  // namespace

Rational ClassDigraph::weight_of(int v, std::span<const int> halved) const {
  int c = class_of(v);
  if (c < 0 || !accessible_[c]) throw PreconditionError("weight needs a vertex of an accessible class");
  auto mask = halved_mask(r_, halved);
  for (int k : halved)
    if (accessible_[k]) throw PreconditionError("weight: halved class is accessible");
  Rational sum = 0;
  for (int w : graph_->neighbors(v)) {
    int k = class_of(w);
    if (k < 0 || accessible_[k]) continue;
    Rational share(1, neighbor_count(w, c));
    if (mask[k]) share /= 2;
    sum += share;
  }
  return sum;
}

WeightQuery ClassDigraph::weight(int cls, std::span<const int> halved) const {
  if (cls < 0 || cls >= r_ || !accessible_[cls])
    throw PreconditionError("weight needs an accessible class");
  WeightQuery q;
  q.cls = cls;
  q.halved.assign(halved.begin(), halved.end());
  std::sort(q.halved.begin(), q.halved.end());
  for (int v : coloring_.members(cls)) {
    q.vertices.push_back(v);
    q.values.push_back(weight_of(v, halved));
  }
  return q;
}

bool ClassDigraph::same_structure(const ClassDigraph& o) const {
  return r_ == o.r_ && s_ == o.s_ && deficient_ == o.deficient_ && arcs_ == o.arcs_ &&
         accessible_ == o.accessible_ && terminal_ == o.terminal_ && counts_ == o.counts_ &&
         coloring_ == o.coloring_;
}

}  // namespace equicolor
