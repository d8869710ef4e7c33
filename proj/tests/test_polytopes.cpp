#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persist/catalog.hpp"
#include "persist/errors.hpp"
#include "persist/lp.hpp"
#include "persist/polytopes.hpp"
#include "persist/relaxations.hpp"
#include "persist/vertices.hpp"

using namespace persist;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

Inequality sum_row(std::initializer_list<const char*> names, const Rational& rhs)
{
    Inequality ineq;
    for (const char* n : names)
        ineq.coeffs[n] = 1;
    ineq.rhs = rhs;
    return ineq;
}

} // namespace

TEST_CASE("stable set polytope of complete graphs")
{
    HPolytope k3 = stable_set_polytope(complete_graph({"A", "B", "C"}));
    REQUIRE(k3.rows().size() == 4);
    CHECK(k3.row_as_inequality(3) == sum_row({"A", "B", "C"}, 1));
    HPolytope k2 = stable_set_polytope(complete_graph({"1", "2"}));
    REQUIRE(k2.rows().size() == 3);
    CHECK(k2.row_as_inequality(2) == sum_row({"1", "2"}, 1));
}

TEST_CASE("stable set polytope of the five cycle")
{
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    HPolytope p = stable_set_polytope(c5);
    // nonnegativity, five edges, and the odd-cycle row
    REQUIRE(p.rows().size() == 11);
    CHECK(p.row_as_inequality(10) == sum_row({"1", "2", "3", "4", "5"}, 2));
    // hull vertices are exactly the stable set indicators
    auto vertices = enumerate_vertices(p);
    CHECK(vertices.size() == 11);
    for (const auto& v : vertices)
        for (const auto& [name, value] : v)
            CHECK((value == 0 || value == 1));
}

TEST_CASE("one sum of polytopes")
{
    HPolytope k2a = stable_set_polytope(complete_graph({"a", "b"}));
    HPolytope k2b = stable_set_polytope(complete_graph({"b~", "c"}));
    // identify b with b~: the result is the stable set polytope of the path
    HPolytope sum = one_sum_polytopes(k2a, "b", k2b, "b~");
    Graph path = path_graph({"a", "b", "c"});
    CHECK(same_polytope(sum, stable_set_polytope(path)));
    CHECK_THROWS_AS(one_sum_polytopes(k2a, "b", stable_set_polytope(complete_graph({"a", "x"})),
                                      "x"),
                    NameCollision);
}

TEST_CASE("one sum with an interval is the identity")
{
    HPolytope a = unit_box({"x"});
    HPolytope b = unit_box({"y"});
    HPolytope sum = one_sum_polytopes(a, "x", b, "y");
    CHECK(sum.vars() == std::vector<std::string>{"x"});
    CHECK(same_polytope(sum, a));
}

TEST_CASE("validity checks")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    HPolytope edge_relax = build(Formulation::edge(), k3);
    Inequality clique = sum_row({"A", "B", "C"}, 1);
    CHECK(!is_valid_inequality(edge_relax, clique));
    CHECK(is_valid_inequality(stable_set_polytope(k3), clique));
    Inequality trivial;
    trivial.rhs = 1;
    CHECK(is_valid_inequality(edge_relax, trivial));
}

TEST_CASE("facet tests on the triangle hull")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    HPolytope hull = stable_set_polytope(k3);
    CHECK(is_facet_defining(hull, sum_row({"A", "B", "C"}, 1)));
    // the weakened clique row is valid but its face is empty
    Inequality weak = sum_row({"A", "B", "C"}, q("7/5"));
    CHECK(!is_facet_defining(hull, weak));
    Inequality invalid = sum_row({"A", "B", "C"}, q("1/2"));
    CHECK_THROWS_AS(is_facet_defining(hull, invalid), NotValid);
}

TEST_CASE("odd cycle inequality is facet defining for the cycle hull")
{
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    CHECK(is_facet_defining(stable_set_polytope(c5), sum_row({"1", "2", "3", "4", "5"}, 2)));
}

TEST_CASE("1-sum of stable set polytopes equals the stable set polytope of the 1-sum")
{
    // clique-sum composition on a few battery pairs
    std::vector<std::tuple<Graph, std::string, Graph, std::string>> pairs;
    pairs.emplace_back(complete_graph({"a", "b"}), "b", complete_graph({"A", "B", "C"}), "A");
    pairs.emplace_back(cycle_graph({"1", "2", "3", "4", "5"}), "1", complete_graph({"x", "y"}),
                       "x");
    pairs.emplace_back(path_graph({"p", "q", "r"}), "q", complete_graph({"s", "t", "u"}), "s");
    for (const auto& [g1, v1, g2, v2] : pairs) {
        auto [sum_graph, map] = one_sum_graphs(g1, v1, g2, v2);
        Graph g2r;
        for (const auto& v : g2.nodes())
            g2r.add_node(map.at(v));
        for (const auto& [a, b] : g2.edges())
            g2r.add_edge(map.at(a), map.at(b));
        HPolytope combined =
            one_sum_polytopes(stable_set_polytope(g1), v1, stable_set_polytope(g2r), map.at(v2));
        CHECK(canonical_inequality_system(combined) ==
              canonical_inequality_system(stable_set_polytope(sum_graph)));
    }
}

TEST_CASE("condition checks on the clique relaxation")
{
    CHECK(check_condition(Formulation::clique(), Condition::A, complete_graph({"A", "B", "C", "D"}))
              .holds);
    CHECK(check_condition(Formulation::clique(), Condition::B, complete_graph({"A", "B", "C", "D"}))
              .holds);
}

TEST_CASE("necessity A fails exactly condition A")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    ConditionReport a = check_condition(Formulation::necessity_a(), Condition::A, k3);
    REQUIRE(!a.holds);
    REQUIRE(a.witness_inequality.has_value());
    // the witness is the weakened clique row x(C) <= 1.4, scaled to integers
    Inequality expected = sum_row({"A", "B", "C"}, q("7/5")).canonical();
    CHECK(*a.witness_inequality == expected);
    CHECK(check_condition(Formulation::necessity_a(), Condition::B, k3).holds);
    CHECK(check_condition(Formulation::necessity_a(), complete_graph({"a", "b"}), "b", k3, "A")
              .holds);
}

TEST_CASE("necessity B fails exactly condition B")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    Graph paw;
    for (const char* v : {"A", "B", "C", "D"})
        paw.add_node(v);
    for (auto [u, v] : std::vector<std::pair<const char*, const char*>>{
             {"A", "B"}, {"A", "C"}, {"B", "C"}, {"C", "D"}})
        paw.add_edge(u, v);
    CHECK(check_condition(Formulation::necessity_b(), Condition::A, paw).holds);
    ConditionReport b = check_condition(Formulation::necessity_b(), Condition::B, paw);
    CHECK(!b.holds);
    CHECK(check_condition(Formulation::necessity_b(), complete_graph({"a", "b"}), "b", k3, "A")
              .holds);
}

TEST_CASE("necessity C fails exactly condition C")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    Graph k2 = complete_graph({"a", "b"});
    CHECK(check_condition(Formulation::necessity_c(), Condition::A, k3).holds);
    CHECK(check_condition(Formulation::necessity_c(), Condition::B, k3).holds);
    ConditionReport c = check_condition(Formulation::necessity_c(), k2, "b", k3, "A");
    REQUIRE(!c.holds);
    // the violated row is the triangle inequality contributed by the K3 side
    REQUIRE(c.witness_inequality.has_value());
    CHECK(c.witness_inequality->coeffs.size() == 3);
    CHECK(c.witness_inequality->rhs == 1);
}

TEST_CASE("defect bound classification")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    CHECK(is_edge_row(k3, sum_row({"A", "B"}, 1)));
    CHECK(!is_edge_row(path_graph({"A", "B", "C"}), sum_row({"A", "C"}, 1)));
    Inequality bound;
    bound.coeffs["A"] = -1;
    bound.rhs = 0;
    CHECK(is_bound_row(bound));
    CHECK(satisfies_defect_bound(sum_row({"A", "B", "C"}, 1)));
    // an edge row does not satisfy the bound, which is why it is exempt
    CHECK(!satisfies_defect_bound(sum_row({"A", "B"}, 1)));
}

TEST_CASE("defect bound holds on all non-bound non-edge facets of small hulls")
{
    for (const auto& g : connected_graphs_with(5)) {
        HPolytope hull = stable_set_polytope(g);
        for (std::size_t i = 0; i < hull.rows().size(); ++i) {
            Inequality row = hull.row_as_inequality(i);
            if (is_bound_row(row) || is_edge_row(g, row))
                continue;
            CHECK(satisfies_defect_bound(row));
        }
    }
}
