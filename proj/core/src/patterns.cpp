#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "equicolor/errors.hpp"
#include "search.hpp"

namespace equicolor::detail {

namespace {

std::vector<Move> shift_moves(const ClassDigraph& d, std::span<const int> path, int first_step,
                              int first_witness = -1) {
  std::vector<Move> out;
  if (path.size() < 2) return out;
  int step = first_step;
  for (std::size_t k = path.size() - 1; k >= 1; --k) {
    int from = path[k - 1];
    int to = path[k];
    int wit = (k == 1 && first_witness >= 0) ? first_witness : d.witnesses(from, to).front();
    out.push_back({wit, from, to, "path-shift", step++});
  }
  return out;
}

int last_step(const std::vector<Move>& moves) { return moves.empty() ? -1 : moves.back().step; }

class PatternSearch {
 public:
  PatternSearch(const ClassDigraph& base, int heldout, int max_attempts)
      : work_(base), heldout_(heldout), a0_(base.a()), max_attempts_(max_attempts) {}

  std::optional<PatternFound> run(int& tried) {
    const int a = a0_;
    if (a == 3 || a == 4)
      case_high(a);
    else if (a == 2)
      case_two();
    else if (a == 1)
      case_one();
    if (!found_) {
      restore();
      generic();
    }
    tried += tried_;
    return found_;
  }

 private:
  // The stage currently offering candidates; attempts are budgeted per
  // (stage, family) pair.
  std::string stage_ = "case";

  void restore() {
    if (!prefix_.empty()) {
      work_ = base_copy();
      prefix_.clear();
    }
    stage_ = "generic";
  }

  ClassDigraph base_copy() const { return original_; }

  bool offer(const std::string& family, const std::vector<Move>& moves) {
    if (found_) return true;
    int& used = attempts_[stage_ + ":" + family];
    if (used >= max_attempts_) return false;
    ++used;
    ++tried_;
    ClassDigraph copy = work_;
    if (apply_raw(copy, moves)) return false;
    if (copy.a() <= a0_) return false;
    PatternFound f;
    f.pattern = family;
    f.moves = prefix_;
    int shift = last_step(prefix_) + 1;
    for (Move m : moves) {
      m.step += shift;
      f.moves.push_back(m);
    }
    found_ = std::move(f);
    return true;
  }

  bool exhausted(const std::string& family) {
    return found_ || attempts_[stage_ + ":" + family] >= max_attempts_;
  }

  std::vector<char> nonaccessible_mask() const {
    std::vector<char> mask(static_cast<std::size_t>(work_.r()), 0);
    for (int c : work_.nonaccessible_classes()) mask[c] = 1;
    return mask;
  }

  std::vector<char> largest_component_mask() const {
    std::vector<char> mask(static_cast<std::size_t>(work_.r()), 0);
    auto sc = work_.strong_components_nonaccessible();
    if (sc.largest >= 0)
      for (int c : sc.components[sc.largest]) mask[c] = 1;
    return mask;
  }

  std::vector<int> outside(const std::vector<char>& mask) const {
    std::vector<int> out;
    for (int c : work_.nonaccessible_classes())
      if (!mask[c]) out.push_back(c);
    return out;
  }

  // Members of `cls` by decreasing f_W, ties by id; at most k, skipping `skip`.
  std::vector<int> ranked(int cls, const std::vector<int>& halved, std::span<const int> skip,
                          std::size_t k) const {
    WeightQuery q = work_.weight(cls, halved);
    std::vector<std::size_t> idx(q.vertices.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return q.values[x] > q.values[y]; });
    std::vector<int> out;
    for (std::size_t i : idx) {
      if (out.size() >= k) break;
      int v = q.vertices[i];
      if (std::find(skip.begin(), skip.end(), v) != skip.end()) continue;
      out.push_back(v);
    }
    return out;
  }

  // Ordinary v trades places with a nice solo neighbor that is its only
  // neighbor in that class.
  void solo_swap(int v) {
    if (exhausted("solo-swap") || !work_.is_ordinary(v)) return;
    int i = work_.class_of(v);
    SoloData sd = work_.solo_analysis(v);
    for (int u : sd.nice) {
      int j = work_.class_of(u);
      if (work_.neighbor_count(v, j) != 1) continue;
      if (offer("solo-swap", {{v, i, j, "solo-swap", 0}, {u, j, i, "solo-swap", 0}})) return;
    }
  }

  // Ordinary v moves to a nonaccessible class free of its neighbors, a nice
  // solo neighbor u takes its place, and witnesses refill u's class along a
  // path that avoids the class of u's nonadjacent partner.
  void solo_exchange(int v) {
    if (exhausted("solo-exchange") || !work_.is_ordinary(v)) return;
    int i = work_.class_of(v);
    SoloData sd = work_.solo_analysis(v);
    if (sd.free_classes.empty()) return;
    const auto base_mask = nonaccessible_mask();
    std::set<std::tuple<int, int, int>> tried;
    for (int u : sd.nice) {
      int j = work_.class_of(u);
      for (int partner : sd.solo) {
        if (partner == u || work_.graph().has_edge(u, partner)) continue;
        int m = work_.class_of(partner);
        auto mask = base_mask;
        if (m != j) mask[m] = 0;
        for (int k : sd.free_classes) {
          if (k == j || !tried.insert({u, k, m == j ? -1 : m}).second) continue;
          auto path = work_.shortest_path(k, j, mask);
          if (path.empty()) continue;
          std::vector<Move> moves{{v, i, k, "solo-exchange", 0}, {u, j, i, "solo-exchange", 1}};
          auto shift = shift_moves(work_, path, 2);
          moves.insert(moves.end(), shift.begin(), shift.end());
          if (offer("solo-exchange", moves) || exhausted("solo-exchange")) return;
        }
      }
    }
  }

  // Solo v of a terminal class moves to an accessible class with none of
  // its neighbors; the deficit travels from there to the deficient class on
  // a path avoiding v's class, so v's class becomes the deficient one.
  void solo_relocate(int v) {
    if (exhausted("solo-relocate")) return;
    int i = work_.class_of(v);
    if (i < 0 || !work_.is_terminal(i)) return;
    SoloData sd = work_.solo_analysis(v);
    if (sd.solo.empty()) return;
    std::vector<char> mask(static_cast<std::size_t>(work_.r()), 1);
    mask[i] = 0;
    for (int l : work_.accessible_classes()) {
      if (l == i || work_.neighbor_count(v, l) != 0) continue;
      auto path = work_.shortest_path(l, work_.deficient(), mask);
      if (path.empty()) continue;
      std::vector<Move> moves{{v, i, l, "solo-relocate", 0}};
      auto shift = shift_moves(work_, path, 1);
      moves.insert(moves.end(), shift.begin(), shift.end());
      if (offer("solo-relocate", moves) || exhausted("solo-relocate")) return;
    }
  }

  // v (terminal class, movable to the deficient class) with its solo
  // neighbors packed in one class: a partner w of v's class takes that
  // class, v leaves for a free class of the large component, one solo
  // neighbor of v and one non-nice solo neighbor of w fill v's class, and
  // witnesses close the gap along a path in the component.
  void double_relocate(int v) {
    if (exhausted("double-relocate")) return;
    int i = work_.class_of(v);
    if (i < 0 || !work_.is_terminal(i) || !work_.movable(v, work_.deficient())) return;
    SoloData sv = work_.solo_analysis(v);
    if (sv.solo.empty()) return;
    const auto comp = largest_component_mask();
    const Graph& g = work_.graph();
    for (int w : work_.coloring().members(i)) {
      if (w == v || !work_.is_ordinary(w)) continue;
      SoloData sw = work_.solo_analysis(w);
      for (int home : sw.free_classes) {
        for (int z1 : sv.solo) {
          if (work_.class_of(z1) != home) continue;
          for (int z0 : sw.solo) {
            int far = work_.class_of(z0);
            if (!comp[far] || far == home || g.has_edge(z0, z1) ||
                std::find(sw.nice.begin(), sw.nice.end(), z0) != sw.nice.end())
              continue;
            for (int start : sv.free_classes) {
              if (!comp[start]) continue;
              auto path = work_.shortest_path(start, far, comp);
              if (path.empty()) continue;
              std::vector<Move> moves{{w, i, home, "double-relocate", 0},
                                      {v, i, start, "double-relocate", 1},
                                      {z1, home, i, "double-relocate", 2}};
              auto shift = shift_moves(work_, path, 3);
              moves.insert(moves.end(), shift.begin(), shift.end());
              moves.push_back({z0, far, i, "double-relocate", last_step(moves) + 1});
              if (offer("double-relocate", moves) || exhausted("double-relocate")) return;
            }
          }
        }
      }
    }
  }

  // Two high-weight vertices of class `home` leave it (one to a free class
  // of the large component, one to a class outside it) and two solo
  // neighbors come in; witnesses along a component path rebalance.
  void compound(int first, int second, int home, const std::string& family) {
    if (exhausted(family) || first == second) return;
    SoloData sa = work_.solo_analysis(first);
    SoloData sb = work_.solo_analysis(second);
    const auto comp = largest_component_mask();
    const Graph& g = work_.graph();
    for (int z0 : sb.solo) {
      int far = work_.class_of(z0);
      if (!comp[far] || std::find(sb.nice.begin(), sb.nice.end(), z0) != sb.nice.end()) continue;
      for (int side : sb.free_classes) {
        if (side == far) continue;
        for (int z1 : sa.nice) {
          if (work_.class_of(z1) != side || g.has_edge(z0, z1)) continue;
          for (int start : sa.free_classes) {
            if (!comp[start]) continue;
            auto path = work_.shortest_path(start, far, comp);
            if (path.empty()) continue;
            std::vector<Move> moves{{second, home, side, family, 0},
                                    {first, home, start, family, 1},
                                    {z1, side, home, family, 2},
                                    {z0, far, home, family, 3}};
            auto shift = shift_moves(work_, path, 4);
            moves.insert(moves.end(), shift.begin(), shift.end());
            if (offer(family, moves) || exhausted(family)) return;
          }
        }
      }
    }
  }

  // v's only neighbors in some nonaccessible class are two nonadjacent solo
  // neighbors: they join v's class while v takes their place, either
  // directly or after shifting a path whose witness is adjacent to v.
  void pair_release(int v) {
    int home = work_.class_of(v);
    const Graph& g = work_.graph();
    const auto nonacc = nonaccessible_mask();
    std::set<std::vector<int>> seen;
    for (int target : work_.nonaccessible_classes()) {
      if (exhausted("pair-group") && exhausted("pair-subpath")) return;
      std::vector<int> inside;
      for (int w : g.neighbors(v))
        if (work_.class_of(w) == target) inside.push_back(w);
      if (inside.size() != 2) continue;
      int w1 = inside[0];
      int w2 = inside[1];
      if (g.has_edge(w1, w2) || work_.neighbor_count(w1, home) != 1 ||
          work_.neighbor_count(w2, home) != 1)
        continue;
      if (offer("pair-group", {{w1, target, home, "pair-group", 0},
                                 {w2, target, home, "pair-group", 0},
                                 {v, home, target, "pair-group", 0}}))
        return;
      for (int source : work_.nonaccessible_classes()) {
        if (source == target) continue;
        auto path = work_.shortest_path(source, target, nonacc);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
          const auto& wits = work_.witnesses(path[t], path[t + 1]);
          auto it = std::find_if(wits.begin(), wits.end(),
                                 [&](int z) { return g.has_edge(z, v); });
          if (it == wits.end()) continue;
          std::vector<int> sub(path.begin() + static_cast<long>(t), path.end());
          if (!seen.insert(sub).second) continue;
          auto moves = shift_moves(work_, sub, 0, *it);
          int step = last_step(moves) + 1;
          moves.push_back({v, home, sub.front(), "pair-subpath", step});
          moves.push_back({w1, target, home, "pair-subpath", step + 1});
          moves.push_back({w2, target, home, "pair-subpath", step + 1});
          if (offer("pair-subpath", moves)) return;
        }
      }
    }
  }

  // a in {3, 4}: normalize so that a terminal class T has an arc into the
  // deficient class, then work through the vertices of T the averaging
  // arguments single out.
  void case_high(int a) {
    std::vector<Move> pre;
    auto terminal = plan_normalize(work_, pre);
    if (!terminal) return;
    if (!pre.empty()) {
      if (apply_raw(work_, pre)) {
        work_ = original_;
        return;
      }
      prefix_ = pre;
      if (work_.a() > a0_) {
        found_ = PatternFound{"arc-reversal", prefix_};
        return;
      }
    }
    const int t = *terminal;
    const int def = work_.deficient();
    const int v1 = work_.witnesses(t, def).front();
    solo_relocate(v1);
    auto tops = ranked(t, {}, {}, 3);
    for (int v2 : tops) {
      solo_relocate(v2);
      solo_swap(v2);
      solo_exchange(v2);
    }
    if (a != 3 || found_) return;
    double_relocate(v1);
    for (int v2 : tops) double_relocate(v2);
    for (int side : outside(largest_component_mask())) {
      std::vector<int> halved{side};
      for (int v3 : ranked(t, halved, {}, 3)) {
        solo_relocate(v3);
        solo_swap(v3);
        solo_exchange(v3);
        double_relocate(v3);
      }
    }
  }

  void case_two() {
    std::vector<Move> pre;
    auto terminal = plan_normalize(work_, pre);
    if (!terminal) return;
    const int t = *terminal;
    const int def = work_.deficient();
    if (!work_.has_arc(t, def)) return;
    const int v1 = work_.witnesses(t, def).front();
    solo_relocate(v1);
    auto tops = ranked(t, {}, {}, 3);
    for (int v2 : tops) {
      solo_relocate(v2);
      solo_swap(v2);
      solo_exchange(v2);
    }
    auto halved = outside(largest_component_mask());
    std::vector<int> skip{v1};
    auto thirds = ranked(t, halved, skip, 4);
    for (int v3 : thirds) {
      solo_relocate(v3);
      solo_swap(v3);
      solo_exchange(v3);
    }
    for (int v2 : tops)
      for (int v3 : thirds) compound(v2, v3, t, "terminal-compound");
  }

  void case_one() {
    const int def = work_.deficient();
    auto tops = ranked(def, {}, {}, 3);
    for (int v2 : tops) {
      solo_swap(v2);
      solo_exchange(v2);
    }
    auto halved = outside(largest_component_mask());
    auto thirds = ranked(def, halved, {}, 4);
    for (int v3 : thirds) {
      solo_swap(v3);
      solo_exchange(v3);
      pair_release(v3);
    }
    for (int v2 : tops)
      for (int v3 : thirds) compound(v2, v3, def, "deficient-compound");
  }

  void generic() {
    for (int c : work_.accessible_classes()) {
      for (int v : work_.coloring().members(c)) {
        solo_swap(v);
        solo_exchange(v);
        solo_relocate(v);
        if (found_) return;
      }
    }
  }

  ClassDigraph work_;
  const ClassDigraph original_ = work_;
  int heldout_;
  int a0_;
  int max_attempts_;
  std::vector<Move> prefix_;
  std::map<std::string, int> attempts_;
  int tried_ = 0;
  std::optional<PatternFound> found_;
};

}  // namespace

std::optional<PatternFound> find_pattern(const ClassDigraph& d, int heldout, int max_attempts,
                                         int& tried) {
  if (d.a() < 1 || d.deficient() < 0) return std::nullopt;
  PatternSearch search(d, heldout, max_attempts);
  return search.run(tried);
}

}  // namespace equicolor::detail
