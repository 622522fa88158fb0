#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "search.hpp"

namespace equicolor::detail {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Eval {
  bool one_deficient = false;
  int reach = 0;        // classes that reach an undersized class
  int arcs_in = 0;      // arcs ending in such classes
  bool insertable = false;
};

class Searcher {
 public:
  Searcher(const ClassDigraph& d, int heldout, long long max_nodes)
      : g_(d.graph()), n_(g_.num_vertices()), r_(d.r()), s_(d.s()), heldout_(heldout),
        a0_(d.a()), max_nodes_(max_nodes) {
    cls_ = d.coloring().assignment();
    size_ = d.coloring().class_sizes();
    counts_.assign(static_cast<std::size_t>(n_) * r_, 0);
    for (int v = 0; v < n_; ++v)
      for (int c = 0; c < r_; ++c) counts_[idx(v, c)] = d.neighbor_count(v, c);
    for (int v = 0; v < n_; ++v)
      if (cls_[v] >= 0) hash_ ^= key(v, cls_[v]);
  }

  std::optional<std::vector<Move>> run(int max_depth, long long& nodes) {
    for (int depth = 1; depth <= max_depth; ++depth) {
      path_.clear();
      if (dfs(depth)) {
        nodes = nodes_;
        std::vector<Move> out;
        int step = 0;
        for (const auto& group : path_) {
          for (Move m : group) {
            m.step = step;
            out.push_back(m);
          }
          ++step;
        }
        return out;
      }
      if (nodes_ >= max_nodes_) break;
    }
    nodes = nodes_;
    return std::nullopt;
  }

 private:
  std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * r_ + c; }
  std::uint64_t key(int v, int c) const { return mix(static_cast<std::uint64_t>(idx(v, c)) + 1); }

  void relocate(int v, int to) {
    int from = cls_[v];
    for (int w : g_.neighbors(v)) {
      --counts_[idx(w, from)];
      ++counts_[idx(w, to)];
    }
    --size_[from];
    ++size_[to];
    hash_ ^= key(v, from) ^ key(v, to);
    cls_[v] = to;
  }

  void apply(const std::vector<Move>& group) {
    for (const Move& m : group) relocate(m.vertex, m.to);
  }
  void undo(const std::vector<Move>& group) {
    for (auto it = group.rbegin(); it != group.rend(); ++it) relocate(it->vertex, it->from);
  }

  Eval evaluate() const {
    Eval e;
    int small = 0;
    int full = 0;
    for (int c = 0; c < r_; ++c) {
      if (size_[c] == s_ - 1) ++small;
      else if (size_[c] == s_) ++full;
    }
    e.one_deficient = small == 1 && full == r_ - 1;
    std::vector<char> arc(static_cast<std::size_t>(r_) * r_, 0);
    for (int v = 0; v < n_; ++v) {
      int c = cls_[v];
      if (c < 0) continue;
      for (int j = 0; j < r_; ++j)
        if (j != c && counts_[idx(v, j)] == 0) arc[static_cast<std::size_t>(c) * r_ + j] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(r_), 0);
    std::vector<int> queue;
    for (int c = 0; c < r_; ++c)
      if (size_[c] < s_) {
        seen[c] = 1;
        queue.push_back(c);
      }
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int cur = queue[q];
      for (int k = 0; k < r_; ++k) {
        if (!arc[static_cast<std::size_t>(k) * r_ + cur]) continue;
        if (seen[k]) {
          ++e.arcs_in;
          continue;
        }
        ++e.arcs_in;
        seen[k] = 1;
        queue.push_back(k);
      }
    }
    e.reach = static_cast<int>(queue.size());
    if (e.one_deficient)
      for (int c = 0; c < r_; ++c)
        if (seen[c] && counts_[idx(heldout_, c)] == 0) e.insertable = true;
    return e;
  }

  bool goal(const Eval& e) const { return e.one_deficient && (e.reach > a0_ || e.insertable); }

  std::vector<std::vector<Move>> children() const {
    std::vector<std::vector<Move>> out;
    for (int v = 0; v < n_; ++v) {
      int from = cls_[v];
      if (from < 0 || size_[from] - 1 < s_ - 2) continue;
      for (int to = 0; to < r_; ++to) {
        if (to == from || counts_[idx(v, to)] != 0 || size_[to] + 1 > s_ + 1) continue;
        out.push_back({{v, from, to, "fallback", 0}});
      }
    }
    for (int v = 0; v < n_; ++v) {
      int i = cls_[v];
      if (i < 0) continue;
      for (int u : g_.neighbors(v)) {
        int j = cls_[u];
        if (u < v || j < 0 || j == i) continue;
        if (counts_[idx(v, j)] == 1 && counts_[idx(u, i)] == 1)
          out.push_back({{v, i, j, "fallback", 0}, {u, j, i, "fallback", 0}});
      }
    }
    return out;
  }

  bool dfs(int depth_left) {
    if (nodes_ >= max_nodes_) return false;
    ++nodes_;
    if (goal(evaluate())) return true;
    if (depth_left == 0) return false;
    auto it = seen_.find(hash_);
    if (it != seen_.end() && it->second >= depth_left) return false;
    seen_[hash_] = depth_left;

    auto kids = children();
    std::vector<std::pair<std::pair<int, int>, std::size_t>> order;
    order.reserve(kids.size());
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (nodes_ >= max_nodes_) return false;
      ++nodes_;
      apply(kids[k]);
      Eval e = evaluate();
      bool hit = goal(e);
      if (hit) {
        path_.push_back(kids[k]);
        return true;
      }
      undo(kids[k]);
      order.push_back({{e.reach, e.arcs_in}, k});
    }
    if (depth_left == 1) return false;
    std::stable_sort(order.begin(), order.end(),
                     [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& [score, k] : order) {
      apply(kids[k]);
      path_.push_back(kids[k]);
      if (dfs(depth_left - 1)) return true;
      path_.pop_back();
      undo(kids[k]);
      if (nodes_ >= max_nodes_) return false;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int r_;
  int s_;
  int heldout_;
  int a0_;
  long long max_nodes_;
  long long nodes_ = 0;
  std::vector<int> cls_;
  std::vector<int> size_;
  std::vector<int> counts_;
  std::uint64_t hash_ = 0;
  std::unordered_map<std::uint64_t, int> seen_;
  std::vector<std::vector<Move>> path_;
};

}  // namespace

std::optional<std::vector<Move>> fallback_search(const ClassDigraph& d, int heldout, int max_depth,
                                                 long long max_nodes, long long& nodes) {
  Searcher search(d, heldout, max_nodes);
  return search.run(max_depth, nodes);
}

}  // namespace equicolor::detail
