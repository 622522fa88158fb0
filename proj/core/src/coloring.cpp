#include "equicolor/coloring.hpp"

#include <algorithm>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

Coloring::Coloring(int n, int r) {
  if (n < 0 || r < 1) throw InvalidInput("coloring needs n >= 0 and r >= 1");
  assignment_.assign(static_cast<std::size_t>(n), -1);
  classes_.resize(static_cast<std::size_t>(r));
}

Coloring Coloring::from_assignment(int r, std::vector<int> assignment) {
  Coloring c(static_cast<int>(assignment.size()), r);
  for (int v = 0; v < c.num_vertices(); ++v) {
    int k = assignment[v];
    if (k < -1 || k >= r)
      throw InvalidInput("vertex " + std::to_string(v) + " has class " + std::to_string(k) +
                         " outside [0, " + std::to_string(r) + ")");
    c.assignment_[v] = k;
    if (k >= 0) c.classes_[k].push_back(v);
  }
  return c;
}

std::vector<int> Coloring::class_sizes() const {
  std::vector<int> out;
  out.reserve(classes_.size());
  for (const auto& m : classes_) out.push_back(static_cast<int>(m.size()));
  return out;
}

int Coloring::num_assigned() const {
  int total = 0;
  for (const auto& m : classes_) total += static_cast<int>(m.size());
  return total;
}

void Coloring::assign(int v, int c) {
  if (assignment_[v] != -1) throw PreconditionError("vertex already assigned");
  if (c < 0 || c >= num_classes()) throw PreconditionError("class out of range");
  assignment_[v] = c;
  auto& m = classes_[c];
  m.insert(std::lower_bound(m.begin(), m.end(), v), v);
}

void Coloring::unassign(int v) {
  int c = assignment_[v];
  if (c < 0) throw PreconditionError("vertex not assigned");
  auto& m = classes_[c];
  m.erase(std::lower_bound(m.begin(), m.end(), v));
  assignment_[v] = -1;
}

void Coloring::move(int v, int c) {
  unassign(v);
  assign(v, c);
}

BalanceProfile balance_profile(const Coloring& c) {
  BalanceProfile p;
  p.sizes = c.class_sizes();
  if (p.sizes.empty()) return p;
  p.min_size = *std::min_element(p.sizes.begin(), p.sizes.end());
  p.max_size = *std::max_element(p.sizes.begin(), p.sizes.end());
  p.equitable = p.max_size - p.min_size <= 1;
  if (p.sizes.size() == 1) {
    p.deficient = 0;
    p.full_size = p.sizes[0] + 1;
    return p;
  }
  if (p.max_size - p.min_size == 1 &&
      std::count(p.sizes.begin(), p.sizes.end(), p.min_size) == 1) {
    p.deficient = static_cast<int>(std::find(p.sizes.begin(), p.sizes.end(), p.min_size) -
                                   p.sizes.begin());
    p.full_size = p.max_size;
  }
  return p;
}

bool verify_proper(const Graph& g, const Coloring& c) {
  if (c.num_vertices() != g.num_vertices())
    throw PreconditionError("coloring covers " + std::to_string(c.num_vertices()) +
                            " vertices, graph has " + std::to_string(g.num_vertices()));
  for (int v = 0; v < g.num_vertices(); ++v)
    if (c.class_of(v) < 0) throw PreconditionError("vertex " + std::to_string(v) + " is uncolored");
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.neighbors(v))
      if (v < w && c.class_of(v) == c.class_of(w)) return false;
  return true;
}

bool verify_equitable(const Coloring& c) { return balance_profile(c).equitable; }

Coloring greedy_balanced_extend(const Graph& g, Coloring c, std::span<const int> order, int cap) {
  if (c.num_vertices() != g.num_vertices())
    throw PreconditionError("coloring and graph sizes differ");
  const int r = c.num_classes();
  std::vector<char> blocked(static_cast<std::size_t>(r));
  for (int v : order) {
    if (c.class_of(v) >= 0) continue;
    std::fill(blocked.begin(), blocked.end(), 0);
    for (int w : g.neighbors(v))
      if (c.class_of(w) >= 0) blocked[c.class_of(w)] = 1;
    int best = -1;
    for (int k = 0; k < r; ++k) {
      if (blocked[k] || c.class_size(k) >= cap) continue;
      if (best < 0 || c.class_size(k) < c.class_size(best)) best = k;
    }
    if (best < 0) throw StuckVertex("no admissible class for vertex " + std::to_string(v), v);
    c.assign(v, best);
  }
  return c;
}

Coloring round_robin(int n, int r) {
  Coloring c(n, r);
  for (int v = 0; v < n; ++v) c.assign(v, v % r);
  return c;
}

}  // namespace equicolor
