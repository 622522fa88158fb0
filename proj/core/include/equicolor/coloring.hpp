#pragma once

#include <optional>
#include <span>
#include <vector>

#include "equicolor/graph.hpp"

namespace equicolor {

/// Vertex -> class assignment over r classes with sorted member lists.
/// A vertex may be unassigned (class -1); properness is not an invariant.
class Coloring {
 public:
  Coloring() = default;
  Coloring(int n, int r);

  /// Entries must lie in [-1, r). Throws InvalidInput otherwise.
  static Coloring from_assignment(int r, std::vector<int> assignment);

  int num_vertices() const noexcept { return static_cast<int>(assignment_.size()); }
  int num_classes() const noexcept { return static_cast<int>(classes_.size()); }
  int class_of(int v) const { return assignment_[v]; }
  std::span<const int> members(int c) const { return classes_[c]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  std::vector<int> class_sizes() const;
  int num_assigned() const;
  bool is_total() const { return num_assigned() == num_vertices(); }

  void assign(int v, int c);
  void unassign(int v);
  void move(int v, int c);

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> classes_;
};

struct BalanceProfile {
  std::vector<int> sizes;
  int min_size = 0;
  int max_size = 0;
  bool equitable = true;
  /// Set when exactly one class has size s-1 and all others have size s.
  std::optional<int> deficient;
  int full_size = 0;  // s
};

BalanceProfile balance_profile(const Coloring& c);

/// Throws PreconditionError if some vertex is unassigned or the sizes differ.
bool verify_proper(const Graph& g, const Coloring& c);
bool verify_equitable(const Coloring& c);

/// Colors the unassigned vertices of `order` one by one. Each goes to an
/// admissible class (no neighbor there, size below `cap`): smallest class
/// first, then lowest index. Throws StuckVertex when none exists.
Coloring greedy_balanced_extend(const Graph& g, Coloring c, std::span<const int> order, int cap);

/// v mod r for every vertex.
Coloring round_robin(int n, int r);

}  // namespace equicolor
