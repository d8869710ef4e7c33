#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persist/errors.hpp"
#include "persist/graphs.hpp"
#include "persist/lp.hpp"
#include "persist/polytopes.hpp"
#include "persist/relaxations.hpp"
#include "persist/sampling.hpp"
#include "persist/vertices.hpp"

using namespace persist;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

// brute-force 0/1 membership against the stable set indicators
void check_integer_points(const Formulation& f, const Graph& g)
{
    HPolytope p = build(f, g);
    std::size_t n = g.nodes().size();
    std::set<std::vector<Rational>> stable;
    for (const auto& s : all_stable_sets(g)) {
        std::vector<Rational> x(n, Rational(0));
        for (const auto& v : s)
            x[static_cast<std::size_t>(std::lower_bound(g.nodes().begin(), g.nodes().end(), v) -
                                       g.nodes().begin())] = 1;
        stable.insert(std::move(x));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::vector<Rational> x(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i))
                x[i] = 1;
        CHECK(p.contains_dense(x) == (stable.count(x) != 0));
    }
}

} // namespace

TEST_CASE("formulation spec strings round trip")
{
    for (const char* spec : {"edge", "clique", "oddcycle:3", "oddcycle:5",
                             "intersect:clique+oddcycle:3", "stable", "w5", "necA", "necB",
                             "necC"})
        CHECK(Formulation::parse(spec).spec() == spec);
    CHECK_THROWS_AS(Formulation::parse("oddcycle:4"), ParseError);
    CHECK_THROWS_AS(Formulation::parse("frob"), ParseError);
    CHECK_THROWS_AS(Formulation::parse("intersect:edge"), ParseError);
}

TEST_CASE("odd cycle relaxation of K4 has the four triangle rows")
{
    Graph k4 = complete_graph({"A", "B", "C", "D"});
    auto rows = list_generators(Formulation::odd_cycle(3), k4);
    std::size_t triangles = 0;
    for (const auto& row : rows)
        if (row.family == "odd_cycle") {
            ++triangles;
            CHECK(row.inequality.rhs == 1);
            CHECK(row.members.size() == 3);
        }
    CHECK(triangles == 4);

    // with minimum length five there is nothing beyond the edge rows
    auto sparse = list_generators(Formulation::odd_cycle(5), complete_graph({"A", "B", "C"}));
    for (const auto& row : sparse)
        CHECK(row.family == "edge");
}

TEST_CASE("odd cycle five relaxation of C5 carries one cycle row")
{
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    auto rows = list_generators(Formulation::odd_cycle(3), c5);
    std::size_t cycles = 0;
    for (const auto& row : rows)
        if (row.family == "odd_cycle") {
            ++cycles;
            CHECK(row.inequality.rhs == 2);
            CHECK(row.members.size() == 5);
        }
    CHECK(cycles == 1);
    CHECK(list_generators(Formulation::edge(), Graph({"a", "b"}, {})).empty());
}

TEST_CASE("clique generators dominate after redundancy removal")
{
    Graph k4 = complete_graph({"A", "B", "C", "D"});
    HPolytope reduced = remove_redundancies(build(Formulation::clique(), k4));
    // nonnegativity plus the maximal clique row only
    REQUIRE(reduced.rows().size() == 5);
    Inequality top = reduced.row_as_inequality(4);
    CHECK(top.coeffs.size() == 4);
    CHECK(top.rhs == 1);
}

TEST_CASE("w5 formulation matches the published system")
{
    Graph w5 = w5_graph();
    HPolytope p = build(Formulation::w5_example(), w5);
    // six nonnegativity rows, the hub row, five rim edges
    CHECK(p.rows().size() == 12);
    RationalPoint witness{{"1", 1}, {"2", 0}, {"3", 0}, {"4", 0}, {"5", 0}, {"6", q("1/2")}};
    CHECK(p.contains(witness));
    Inequality spoke;
    spoke.coeffs["1"] = 1;
    spoke.coeffs["6"] = 1;
    spoke.rhs = 1;
    CHECK(!is_valid_inequality(p, spoke));
    for (int i = 1; i <= 5; ++i) {
        Inequality wheel;
        wheel.coeffs[std::to_string(i)] = 2;
        wheel.coeffs["6"] = 2;
        wheel.rhs = 3;
        CHECK(is_valid_inequality(p, wheel));
    }
    check_integer_points(Formulation::w5_example(), w5);
    CHECK_THROWS_AS(build(Formulation::w5_example(), complete_graph({"A", "B"})),
                    UnsupportedGraph);
}

TEST_CASE("integer points equal stable set indicators across the registry")
{
    Sampler sampler(sampling_seed() + 17);
    std::vector<Formulation> registry{
        Formulation::edge(),
        Formulation::clique(),
        Formulation::odd_cycle(3),
        Formulation::odd_cycle(5),
        Formulation::intersection({Formulation::clique(), Formulation::odd_cycle(3)}),
        Formulation::stable_set(),
        Formulation::necessity_a(),
        Formulation::necessity_b(),
        Formulation::necessity_c()};
    for (int i = 0; i < 6; ++i) {
        Graph g = sampler.random_graph(sampler.random_size(2, 5));
        for (const auto& f : registry)
            check_integer_points(f, g);
    }
}

TEST_CASE("monotonicity of the registry")
{
    Sampler sampler(sampling_seed() + 18);
    for (int i = 0; i < 4; ++i) {
        Graph g = sampler.random_graph(sampler.random_size(2, 5));
        HPolytope stab = build(Formulation::stable_set(), g);
        HPolytope clique = build(Formulation::clique(), g);
        HPolytope oc3 = build(Formulation::odd_cycle(3), g);
        HPolytope edge = build(Formulation::edge(), g);
        CHECK(!inclusion_violation(stab, clique));
        CHECK(!inclusion_violation(clique, edge));
        CHECK(!inclusion_violation(stab, oc3));
        CHECK(!inclusion_violation(oc3, edge));
    }
}

TEST_CASE("necessity builders branch on the triangle shape")
{
    Graph k3 = complete_graph({"x", "y", "z"});
    CHECK(same_polytope(build(Formulation::necessity_b(), k3), build(Formulation::edge(), k3)));
    CHECK(same_polytope(build(Formulation::necessity_c(), k3), stable_set_polytope(k3)));
    Graph p3 = path_graph({"x", "y", "z"});
    CHECK(same_polytope(build(Formulation::necessity_b(), p3), stable_set_polytope(p3)));
    CHECK(same_polytope(build(Formulation::necessity_c(), p3), build(Formulation::edge(), p3)));
}
