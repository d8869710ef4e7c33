#pragma once

#include "persist/hpolytope.hpp"

#include <cstdint>
#include <vector>

namespace persist {

// Default work budget for vertex enumeration; an engineering choice, flagged
// wherever it is exceeded.
inline constexpr std::uint64_t kDefaultVertexBudget = 10'000'000;

// All vertices of a bounded HPolytope, exact, deduplicated, sorted
// lexicographically in variable order. Double description over an initial
// bounding simplex; the adjacency test uses fully evaluated tight-row sets,
// so degenerate inputs are handled exactly. Empty polytope yields {}.
// Throws DimensionTooLarge when the work counter exceeds the budget.
std::vector<std::vector<Rational>>
enumerate_vertices_dense(const HPolytope& p, std::uint64_t budget = kDefaultVertexBudget);

std::vector<RationalPoint>
enumerate_vertices(const HPolytope& p, std::uint64_t budget = kDefaultVertexBudget);

} // namespace persist
