#include "equicolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "equicolor/errors.hpp"

namespace equicolor {

namespace {

class Search {
 public:
  Search(const Graph& g, int k) : g_(g), k_(k) {
    const int n = g.num_vertices();
    low_ = n / k;
    big_allowed_ = n % k;
    order_.resize(static_cast<std::size_t>(n));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    cls_.assign(static_cast<std::size_t>(n), -1);
    size_.assign(static_cast<std::size_t>(k), 0);
  }

  bool run() { return place(0, 0); }
  const std::vector<int>& assignment() const { return cls_; }

 private:
  bool fits(int c) const {
    if (size_[c] < low_) return true;
    return size_[c] == low_ && big_used_ < big_allowed_;
  }

  bool place(std::size_t idx, int used) {
    if (idx == order_.size()) return true;
    // every class must still reach the lower size
    long long missing = 0;
    for (int c = 0; c < k_; ++c) missing += std::max(0, low_ - size_[c]);
    if (missing > static_cast<long long>(order_.size() - idx)) return false;
    const int v = order_[idx];
    // classes beyond the first empty one are interchangeable with it
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (!fits(c)) continue;
      bool clash = false;
      for (int w : g_.neighbors(v))
        if (cls_[w] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      const bool grows_big = size_[c] == low_;
      cls_[v] = c;
      ++size_[c];
      if (grows_big) ++big_used_;
      if (place(idx + 1, std::max(used, c + 1))) return true;
      if (grows_big) --big_used_;
      --size_[c];
      cls_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  int low_ = 0;
  int big_allowed_ = 0;
  int big_used_ = 0;
  std::vector<int> order_;
  std::vector<int> cls_;
  std::vector<int> size_;
};

}  // namespace

std::optional<Coloring> brute_force_equitable(const Graph& g, int k) {
  if (k < 1) throw InvalidInput("oracle: k must be positive");
  if (g.num_vertices() > kOracleMaxVertices)
    throw PreconditionError("oracle: at most " + std::to_string(kOracleMaxVertices) +
                            " vertices supported");
  Search search(g, k);
  if (!search.run()) return std::nullopt;
  return Coloring::from_assignment(k, search.assignment());
}

std::set<int> chi_e_profile(const Graph& g, int k_max) {
  if (g.num_vertices() > kOracleMaxVertices)
    throw PreconditionError("oracle: at most " + std::to_string(kOracleMaxVertices) +
                            " vertices supported");
  std::set<int> out;
  for (int k = 1; k <= k_max; ++k)
    if (brute_force_equitable(g, k)) out.insert(k);
  return out;
}

}  // namespace equicolor
