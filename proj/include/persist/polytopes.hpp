#pragma once

#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"
#include "persist/relaxations.hpp"

#include <optional>
#include <string>
#include <vector>

namespace persist {

// Irredundant facet system of the stable set polytope P_stab(g), canonical
// row order. Exponential in |V|, hence the node budget.
HPolytope stable_set_polytope(const Graph& g, std::size_t node_budget = 10);

// Facets of the full-dimensional hull of the given points, via vertex
// enumeration of the polar body around the centroid.
std::vector<Inequality> facet_enumeration(const std::vector<std::vector<Rational>>& points,
                                          const std::vector<std::string>& vars);

// 1-sum: q's rows with y_j substituted by x_i, appended to p's rows; the
// variable set is p.vars plus q.vars minus j.
HPolytope one_sum_polytopes(const HPolytope& p, const std::string& i, const HPolytope& q,
                            const std::string& j);

// true iff max of ineq.coeffs over p is <= ineq.rhs (one exact LP).
bool is_valid_inequality(const HPolytope& p, const Inequality& ineq);

// true iff the induced face has dimension dim(p) - 1. Throws NotValid when
// the inequality is not valid for p.
bool is_facet_defining(const HPolytope& p, const Inequality& ineq);

// Canonical irredundant description as a sorted list of name-keyed rows;
// two polytopes over the same variables are equal iff these lists are equal.
std::vector<Inequality> canonical_inequality_system(const HPolytope& p);
bool same_polytope(const HPolytope& p, const HPolytope& q);

// First row of `description` that is not valid for p, in canonical order.
std::optional<Inequality> inclusion_violation(const HPolytope& p, const HPolytope& description);

enum class Condition { A, B, C };
std::string to_string(Condition c);

struct ConditionReport {
    Condition condition = Condition::A;
    bool holds = true;
    std::optional<Inequality> witness_inequality;
    std::optional<Graph> witness_graph;
    std::string detail;
};

// Condition (A)/(B) on one graph: every facet row of build(f, g) with support
// U must be facet-defining for P_stab(g[U]) (A), resp. valid for f(g[U]) (B).
ConditionReport check_condition(const Formulation& f, Condition cond, const Graph& g);

// Condition (C) on a 1-sum instance: f(g1 (+) g2) must be contained in
// f(g1) (+) f(g2), checked by row-wise validity of the right description.
ConditionReport check_condition(const Formulation& f, const Graph& g1, const std::string& v1,
                                const Graph& g2, const std::string& v2);

// Facet classification for the defect bound: bounds and edge rows are exempt,
// every other stable-set facet must satisfy max coeff <= sum coeffs - 2 rhs.
bool is_bound_row(const Inequality& ineq);
bool is_edge_row(const Graph& g, const Inequality& ineq);
bool satisfies_defect_bound(const Inequality& ineq);

} // namespace persist
