#pragma once

#include "persist/rational.hpp"

#include <optional>
#include <vector>

namespace persist {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

std::size_t rank(RatMatrix rows);

// Reduced row echelon form. Returns the nonzero rows together with their
// pivot columns, in pivot order.
struct Rref {
    RatMatrix rows;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(RatMatrix rows);

// Solves A x = b for square A. Empty result when A is singular.
std::optional<RatRow> solve_square(const RatMatrix& a, const RatRow& b);

// Eliminates the pivot variables of `basis` (an rref) from `row`, yielding a
// canonical representative of `row` modulo the row space of the basis.
RatRow reduce_against(const Rref& basis, RatRow row);

} // namespace persist
