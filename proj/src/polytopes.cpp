#include "persist/polytopes.hpp"

#include "persist/errors.hpp"
#include "persist/lp.hpp"
#include "persist/matrix.hpp"
#include "persist/vertices.hpp"

#include <algorithm>

namespace persist {

std::vector<Inequality> facet_enumeration(const std::vector<std::vector<Rational>>& points,
                                          const std::vector<std::string>& vars)
{
    if (points.empty())
        throw Error("facet enumeration needs points");
    std::size_t n = vars.size();
    {
        RatMatrix shifted;
        for (std::size_t i = 1; i < points.size(); ++i) {
            RatRow d(n);
            for (std::size_t j = 0; j < n; ++j)
                d[j] = points[i][j] - points[0][j];
            shifted.push_back(std::move(d));
        }
        if (rank(std::move(shifted)) != n)
            throw Error("facet enumeration requires a full-dimensional point set");
    }

    std::vector<Rational> centroid(n, Rational(0));
    for (const auto& p : points)
        for (std::size_t j = 0; j < n; ++j)
            centroid[j] += p[j];
    for (auto& c : centroid)
        c /= Rational(static_cast<long>(points.size()));

    // polar of the hull around the centroid; its vertices are the facets
    std::vector<std::string> polar_vars;
    for (std::size_t j = 0; j < n; ++j)
        polar_vars.push_back("y" + std::to_string(j));
    HPolytope polar(polar_vars);
    for (const auto& p : points) {
        Row row;
        row.coeffs.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            row.coeffs[j] = p[j] - centroid[j];
        row.rhs = Rational(1);
        polar.add_row(std::move(row));
    }

    std::vector<Inequality> out;
    for (const auto& y : enumerate_vertices_dense(polar)) {
        Inequality ineq;
        ineq.rhs = Rational(1);
        for (std::size_t j = 0; j < n; ++j) {
            ineq.rhs += y[j] * centroid[j];
            if (sign(y[j]) != 0)
                ineq.coeffs[vars[j]] = y[j];
        }
        out.push_back(ineq.canonical());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

HPolytope stable_set_polytope(const Graph& g, std::size_t node_budget)
{
    if (g.nodes().empty())
        throw UnsupportedGraph("stable set polytope needs at least one node");
    if (g.nodes().size() > node_budget)
        throw BudgetExceeded("stable set polytope capped at " + std::to_string(node_budget) +
                             " nodes");
    std::size_t n = g.nodes().size();
    std::vector<std::vector<Rational>> points;
    for (const auto& s : all_stable_sets(g)) {
        std::vector<Rational> x(n, Rational(0));
        for (const auto& v : s)
            x[static_cast<std::size_t>(std::lower_bound(g.nodes().begin(), g.nodes().end(), v) -
                                       g.nodes().begin())] = Rational(1);
        points.push_back(std::move(x));
    }
    HPolytope out(g.nodes());
    for (const auto& ineq : facet_enumeration(points, g.nodes()))
        out.add_row(ineq);
    return out;
}

HPolytope one_sum_polytopes(const HPolytope& p, const std::string& i, const HPolytope& q,
                            const std::string& j)
{
    std::size_t pi = p.var_index(i);
    std::size_t qj = q.var_index(j);
    std::vector<std::string> vars = p.vars();
    for (const auto& v : q.vars()) {
        if (v == j)
            continue;
        if (p.has_var(v))
            throw NameCollision("1-sum would duplicate variable '" + v + "'");
        vars.push_back(v);
    }
    HPolytope out(vars);
    for (const auto& row : p.rows()) {
        Row r;
        r.coeffs = row.coeffs;
        r.coeffs.resize(vars.size(), Rational(0));
        r.rhs = row.rhs;
        out.add_row(std::move(r));
    }
    for (const auto& row : q.rows()) {
        Row r;
        r.coeffs.assign(vars.size(), Rational(0));
        r.rhs = row.rhs;
        for (std::size_t k = 0; k < q.vars().size(); ++k) {
            if (sign(row.coeffs[k]) == 0)
                continue;
            if (k == qj)
                r.coeffs[pi] += row.coeffs[k];
            else
                r.coeffs[out.var_index(q.vars()[k])] += row.coeffs[k];
        }
        out.add_row(std::move(r));
    }
    return out;
}

bool is_valid_inequality(const HPolytope& p, const Inequality& ineq)
{
    std::vector<Rational> obj = p.inequality_as_row(ineq).coeffs;
    DenseLpResult r = solve_raw(p, obj);
    if (r.status == RawLpStatus::Infeasible)
        return true; // vacuous over the empty polytope
    if (r.status == RawLpStatus::Unbounded)
        return false;
    return cmp(r.value, ineq.rhs) <= 0;
}

bool is_facet_defining(const HPolytope& p, const Inequality& ineq)
{
    if (!is_valid_inequality(p, ineq))
        throw NotValid("inequality is not valid for the polytope");
    int dim = affine_dimension(p);
    HPolytope face = p;
    face.add_equality(ineq);
    return affine_dimension(face) == dim - 1;
}

std::vector<Inequality> canonical_inequality_system(const HPolytope& p)
{
    HPolytope reduced = remove_redundancies(p);
    std::vector<Inequality> rows;
    for (std::size_t i = 0; i < reduced.rows().size(); ++i)
        rows.push_back(reduced.row_as_inequality(i).canonical());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

bool same_polytope(const HPolytope& p, const HPolytope& q)
{
    std::vector<std::string> pv = p.vars(), qv = q.vars();
    std::sort(pv.begin(), pv.end());
    std::sort(qv.begin(), qv.end());
    if (pv != qv)
        return false;
    // cheap syntactic pass first
    auto as_rows = [](const HPolytope& h) {
        std::vector<Inequality> rows;
        for (std::size_t i = 0; i < h.rows().size(); ++i)
            rows.push_back(h.row_as_inequality(i).canonical());
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        return rows;
    };
    if (as_rows(p) == as_rows(q))
        return true;
    return !inclusion_violation(p, q) && !inclusion_violation(q, p);
}

std::optional<Inequality> inclusion_violation(const HPolytope& p, const HPolytope& description)
{
    std::vector<Inequality> rows;
    for (std::size_t i = 0; i < description.rows().size(); ++i)
        rows.push_back(description.row_as_inequality(i).canonical());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (const auto& row : rows)
        if (!is_valid_inequality(p, row))
            return row;
    return std::nullopt;
}

std::string to_string(Condition c)
{
    switch (c) {
    case Condition::A:
        return "A";
    case Condition::B:
        return "B";
    case Condition::C:
        return "C";
    }
    throw Error("unreachable");
}

ConditionReport check_condition(const Formulation& f, Condition cond, const Graph& g)
{
    if (cond == Condition::C)
        throw Error("condition C takes a 1-sum instance");
    ConditionReport report;
    report.condition = cond;
    HPolytope reduced = remove_redundancies(build(f, g));
    for (std::size_t i = 0; i < reduced.rows().size(); ++i) {
        Inequality ineq = reduced.row_as_inequality(i).canonical();
        auto support = ineq.support();
        if (support.empty())
            continue;
        std::set<std::string> u(support.begin(), support.end());
        Graph sub = induced_subgraph(g, u);
        if (cond == Condition::A) {
            HPolytope hull = stable_set_polytope(sub);
            if (!is_valid_inequality(hull, ineq) || !is_facet_defining(hull, ineq)) {
                report.holds = false;
                report.witness_inequality = ineq;
                report.witness_graph = g;
                report.detail = "row is not facet-defining for the stable set polytope of its "
                                "support subgraph";
                return report;
            }
        } else {
            if (!is_valid_inequality(build(f, sub), ineq)) {
                report.holds = false;
                report.witness_inequality = ineq;
                report.witness_graph = g;
                report.detail = "row is not valid for the formulation on its support subgraph";
                return report;
            }
        }
    }
    return report;
}

ConditionReport check_condition(const Formulation& f, const Graph& g1, const std::string& v1,
                                const Graph& g2, const std::string& v2)
{
    ConditionReport report;
    report.condition = Condition::C;
    auto [sum_graph, map] = one_sum_graphs(g1, v1, g2, v2);
    Graph g2r;
    for (const auto& v : g2.nodes())
        g2r.add_node(map.at(v));
    for (const auto& [a, b] : g2.edges())
        g2r.add_edge(map.at(a), map.at(b));
    HPolytope left = build(f, sum_graph);
    HPolytope right = one_sum_polytopes(build(f, g1), v1, build(f, g2r), map.at(v2));
    if (auto violated = inclusion_violation(left, right)) {
        report.holds = false;
        report.witness_inequality = *violated;
        report.witness_graph = sum_graph;
        report.detail = "row of the 1-sum description is not valid for the formulation on the "
                        "1-sum graph";
    }
    return report;
}

bool is_bound_row(const Inequality& ineq)
{
    return ineq.support().size() <= 1;
}

bool is_edge_row(const Graph& g, const Inequality& ineq)
{
    auto support = ineq.support();
    if (support.size() != 2)
        return false;
    if (!g.has_edge(support[0], support[1]))
        return false;
    Inequality c = ineq.canonical();
    return c.coeffs.begin()->second == 1 && std::next(c.coeffs.begin())->second == 1 &&
           c.rhs == 1;
}

bool satisfies_defect_bound(const Inequality& ineq)
{
    Rational sum(0);
    Rational biggest(0);
    for (const auto& [name, coeff] : ineq.coeffs) {
        sum += coeff;
        if (cmp(coeff, biggest) > 0)
            biggest = coeff;
    }
    return cmp(biggest, sum - Rational(2) * ineq.rhs) <= 0;
}

} // namespace persist
