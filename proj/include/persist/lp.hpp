#pragma once

#include "persist/hpolytope.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace persist {

enum class LpStatus { Optimal, Infeasible };

struct LpResult {
    Rational value;
    RationalPoint witness;
    LpStatus status = LpStatus::Infeasible;
};

// Raw exact solve of max objective.x over p. The witness is an optimal point
// but not necessarily a vertex. Bland's rule on the fixed column order makes
// the outcome deterministic. Unboundedness is reported as a status here;
// the public operations turn it into a hard error, since a well-formed
// HPolytope is bounded.
enum class RawLpStatus { Optimal, Infeasible, Unbounded };
struct DenseLpResult {
    RawLpStatus status = RawLpStatus::Infeasible;
    Rational value;
    std::vector<Rational> point;
};
DenseLpResult solve_raw(const HPolytope& p, const std::vector<Rational>& objective);

bool is_feasible(const HPolytope& p);

// max objective.x with a vertex witness: the lexicographically smallest point
// of the optimal face, which is a vertex of p attaining the optimum.
LpResult maximize(const HPolytope& p, const RationalPoint& objective);

// p with objective.x = max appended as two opposite inequalities.
HPolytope optimal_face(const HPolytope& p, const RationalPoint& objective);

// (min, max) of one coordinate over p, via two LP calls.
std::pair<Rational, Rational> coordinate_bounds(const HPolytope& p, const std::string& var);

// -1 for the empty polytope, otherwise the dimension of the affine hull:
// n minus the rank of the implicit-equality normals.
int affine_dimension(const HPolytope& p);

// Irredundant description: implicit equalities emitted first as canonical
// opposite row pairs, then one facet-defining row per facet, each scaled to
// coprime integers and reduced against the equality system, in canonical
// order. Throws InfeasibleSystem on an empty polytope.
HPolytope remove_redundancies(const HPolytope& p);

namespace detail {
// Rows that always hold with equality over p (empty p yields nullopt).
std::optional<std::vector<bool>> implicit_equalities(const HPolytope& p);
} // namespace detail

} // namespace persist
