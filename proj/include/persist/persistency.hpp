#pragma once

#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"
#include "persist/vertices.hpp"

#include <optional>
#include <string>
#include <vector>

namespace persist {

// All c-maximal stable sets of g, exhaustively enumerated, sorted.
struct StableSetList {
    std::vector<std::vector<std::string>> sets;
    Rational value;
};
StableSetList max_weight_stable_sets(const Graph& g, const RationalPoint& c);

enum class PersistencyMode { Weak, Strong };
std::string to_string(PersistencyMode mode);

struct PersistencyWitness {
    RationalPoint lp_vertex;
    RationalPoint fixed_pattern; // the unmatched partial 0/1 assignment
    std::string reason;
};

struct PersistencyReport {
    PersistencyMode mode = PersistencyMode::Weak;
    bool holds = true;
    std::optional<PersistencyWitness> witness;
};

// Weak persistency: every optimal point of p whose coordinates are partially
// integer must be matched on those coordinates by some c-maximal integer
// candidate. Checking the vertices of the optimal face suffices: an integer
// coordinate of a point in [0,1]^n is integer in every vertex of the minimal
// face containing it.
PersistencyReport weak_persistency_core(const HPolytope& p, const RationalPoint& c,
                                        const std::vector<RationalPoint>& integer_optima,
                                        std::uint64_t budget = kDefaultVertexBudget);

// Strong persistency: a coordinate fixed to b in {0,1} across the whole
// optimal face of p must equal b in every c-maximal integer candidate.
PersistencyReport strong_persistency_core(const HPolytope& p, const RationalPoint& c,
                                          const std::vector<RationalPoint>& integer_optima);

// The stable-set instantiations: the integer side is the set of c-maximal
// stable sets of g. p.vars must equal V(g).
PersistencyReport check_weak_persistency(const Graph& g, const RationalPoint& c,
                                         const HPolytope& p,
                                         std::uint64_t budget = kDefaultVertexBudget);
PersistencyReport check_strong_persistency(const Graph& g, const RationalPoint& c,
                                           const HPolytope& p);

// Coordinates fixed to 0 or 1 across the optimal face of p under c.
RationalPoint fixed_coordinates(const HPolytope& p, const RationalPoint& c);

// Image of p under x -> 1 - x per coordinate, as an H-system.
HPolytope vertex_cover_transform(const HPolytope& p);

// 0/1 indicator vectors of the c-maximal stable sets, as named points.
std::vector<RationalPoint> stable_set_indicators(const Graph& g, const StableSetList& list);

} // namespace persist
