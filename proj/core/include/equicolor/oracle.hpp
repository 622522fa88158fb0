#pragma once

#include <optional>
#include <set>

#include "equicolor/coloring.hpp"
#include "equicolor/graph.hpp"

namespace equicolor {

inline constexpr int kOracleMaxVertices = 24;

/// Exact search for a proper coloring with k classes whose sizes differ by
/// at most one. Throws PreconditionError above kOracleMaxVertices vertices
/// and InvalidInput for k < 1.
std::optional<Coloring> brute_force_equitable(const Graph& g, int k);

/// Every k in [1, k_max] for which g has an equitable k-coloring.
std::set<int> chi_e_profile(const Graph& g, int k_max);

}  // namespace equicolor
