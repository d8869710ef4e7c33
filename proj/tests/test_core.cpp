#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "persist/errors.hpp"
#include "persist/lp.hpp"
#include "persist/matrix.hpp"
#include "persist/plc.hpp"
#include "persist/rational.hpp"
#include "persist/sampling.hpp"
#include "persist/vertices.hpp"

using namespace persist;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

HPolytope edge_relaxation_k3()
{
    HPolytope p = unit_box({"A", "B", "C"});
    for (auto [u, v] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        Row row;
        row.coeffs.assign(3, Rational(0));
        row.coeffs[static_cast<std::size_t>(u)] = 1;
        row.coeffs[static_cast<std::size_t>(v)] = 1;
        row.rhs = 1;
        p.add_row(std::move(row));
    }
    return p;
}

} // namespace

TEST_CASE("rational parsing and printing")
{
    CHECK(to_string(q("3/6")) == "1/2");
    CHECK(to_string(q("-4/2")) == "-2");
    CHECK(to_string(q("7")) == "7");
    CHECK(q("2/-4") == Rational(-1, 2));
    CHECK_THROWS_AS(q("0.5"), ParseError);
    CHECK_THROWS_AS(q("1/0"), ParseError);
    CHECK_THROWS_AS(q(""), ParseError);
    CHECK_THROWS_AS(q("a"), ParseError);
}

TEST_CASE("rank and solve")
{
    RatMatrix m{{q("1"), q("2")}, {q("2"), q("4")}};
    CHECK(rank(m) == 1);
    RatMatrix a{{q("2"), q("1")}, {q("1"), q("-1")}};
    RatRow b{q("3"), q("0")};
    auto x = solve_square(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 1);
    CHECK(!solve_square(m, b).has_value());
}

TEST_CASE("maximize on the triangle edge relaxation")
{
    HPolytope p = edge_relaxation_k3();
    RationalPoint ones{{"A", 1}, {"B", 1}, {"C", 1}};
    LpResult r = maximize(p, ones);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == q("3/2"));
    CHECK(r.witness.at("A") == q("1/2"));
    CHECK(r.witness.at("B") == q("1/2"));
    CHECK(r.witness.at("C") == q("1/2"));
}

TEST_CASE("maximize with zero objective")
{
    HPolytope p = unit_box({"x"});
    RationalPoint zero{{"x", 0}};
    LpResult r = maximize(p, zero);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 0);
    // the witness is a vertex: the lexicographically smallest optimum
    CHECK(r.witness.at("x") == 0);
}

TEST_CASE("infeasible system reported as such")
{
    HPolytope p = unit_box({"x"});
    Inequality below;
    below.coeffs["x"] = -1;
    below.rhs = q("-2"); // x >= 2 inside [0,1]
    p.add_row(below);
    CHECK(maximize(p, {{"x", 1}}).status == LpStatus::Infeasible);
    CHECK(!is_feasible(p));
    CHECK(affine_dimension(p) == -1);
}

TEST_CASE("unbounded input is a hard error")
{
    HPolytope p({"x"});
    Inequality low;
    low.coeffs["x"] = -1;
    low.rhs = 0;
    p.add_row(low);
    CHECK_THROWS_AS(maximize(p, {{"x", 1}}), UnboundedSystem);
}

TEST_CASE("coordinate bounds")
{
    HPolytope box = unit_box({"x", "y"});
    auto [lo, hi] = coordinate_bounds(box, "x");
    CHECK(lo == 0);
    CHECK(hi == 1);
}

TEST_CASE("affine dimension of faces")
{
    HPolytope p = edge_relaxation_k3();
    CHECK(affine_dimension(p) == 3);
    RationalPoint ones{{"A", 1}, {"B", 1}, {"C", 1}};
    HPolytope face = optimal_face(p, ones);
    CHECK(affine_dimension(face) == 0);
    auto [lo, hi] = coordinate_bounds(face, "A");
    CHECK(lo == q("1/2"));
    CHECK(hi == q("1/2"));
}

TEST_CASE("vertex enumeration of the unit square")
{
    HPolytope p = unit_box({"x", "y"});
    auto vertices = enumerate_vertices_dense(p);
    REQUIRE(vertices.size() == 4);
    CHECK(vertices.front() == std::vector<Rational>{0, 0});
    CHECK(vertices.back() == std::vector<Rational>{1, 1});
}

TEST_CASE("vertex enumeration of the triangle edge relaxation")
{
    HPolytope p = edge_relaxation_k3();
    auto vertices = enumerate_vertices_dense(p);
    CHECK(vertices.size() == 5);
    CHECK(vertices == oracle::brute_force_vertices(p));
}

TEST_CASE("vertex enumeration matches brute force on random polytopes")
{
    Sampler sampler(sampling_seed());
    for (int i = 0; i < 30; ++i) {
        HPolytope p = sampler.random_polytope(sampler.random_size(2, 4), sampler.random_size(1, 4));
        auto dd = enumerate_vertices_dense(p);
        auto brute = oracle::brute_force_vertices(p);
        REQUIRE(dd == brute);
    }
}

TEST_CASE("maximize agrees with the vertex maximum")
{
    Sampler sampler(sampling_seed() + 1);
    for (int i = 0; i < 20; ++i) {
        HPolytope p = sampler.random_polytope(3, 3);
        RationalPoint c;
        std::vector<Rational> dense;
        for (const auto& v : p.vars()) {
            c[v] = sampler.random_rational();
            dense.push_back(c[v]);
        }
        LpResult r = maximize(p, c);
        REQUIRE(r.status == LpStatus::Optimal);
        bool attained = false;
        for (const auto& vertex : enumerate_vertices_dense(p)) {
            Rational value(0);
            for (std::size_t j = 0; j < dense.size(); ++j)
                value += dense[j] * vertex[j];
            CHECK(cmp(value, r.value) <= 0);
            if (cmp(value, r.value) == 0)
                attained = true;
        }
        CHECK(attained);
        // witnesses re-substitute exactly
        CHECK(p.contains(r.witness));
    }
}

TEST_CASE("vertex budget surfaces as DimensionTooLarge")
{
    HPolytope p = unit_box({"a", "b", "c", "d", "e"});
    CHECK_THROWS_AS(enumerate_vertices_dense(p, 3), DimensionTooLarge);
}

TEST_CASE("remove_redundancies drops implied rows")
{
    HPolytope p = edge_relaxation_k3();
    HPolytope reduced = remove_redundancies(p);
    // the upper bounds are implied by edges plus nonnegativity
    CHECK(reduced.rows().size() == 6);
    for (std::size_t i = 0; i < reduced.rows().size(); ++i) {
        Inequality ineq = reduced.row_as_inequality(i);
        bool nonneg = ineq.coeffs.size() == 1 && ineq.coeffs.begin()->second == -1;
        bool edge = ineq.coeffs.size() == 2 && ineq.rhs == 1;
        CHECK((nonneg || edge));
    }
}

TEST_CASE("remove_redundancies keeps a duplicated box only once")
{
    HPolytope p = unit_box({"x"});
    Inequality dup;
    dup.coeffs["x"] = 1;
    dup.rhs = 1;
    p.add_row(dup);
    p.add_row(dup);
    HPolytope reduced = remove_redundancies(p);
    CHECK(reduced.rows().size() == 2);
}

TEST_CASE("remove_redundancies reports the clique facet system")
{
    // the triangle hull given redundantly: edges plus the clique row
    HPolytope p = edge_relaxation_k3();
    Inequality clique;
    clique.coeffs["A"] = 1;
    clique.coeffs["B"] = 1;
    clique.coeffs["C"] = 1;
    clique.rhs = 1;
    p.add_row(clique);
    HPolytope reduced = remove_redundancies(p);
    REQUIRE(reduced.rows().size() == 4);
    CHECK(reduced.row_as_inequality(3) == clique);
}

TEST_CASE("parametric value function of the triangle gadget")
{
    HPolytope p = edge_relaxation_k3();
    RationalPoint ones{{"A", 1}, {"B", 1}, {"C", 1}};
    RationalPoint level{{"A", 1}, {"B", 0}, {"C", 0}};
    PiecewiseLinearConcave f = parametric_max(p, ones, level, ParametricMode::Eq);
    REQUIRE(f.breakpoints().size() == 3);
    CHECK(f.breakpoints()[0].arg == 0);
    CHECK(f.breakpoints()[0].value == 1);
    CHECK(f.peak().arg == q("1/2"));
    CHECK(f.peak().value == q("3/2"));
    CHECK(f.breakpoints()[2].arg == 1);
    CHECK(f.breakpoints()[2].value == 1);
    CHECK(f.eval(q("1/4")) == q("5/4"));
}

TEST_CASE("le mode is identical then constant")
{
    HPolytope p = unit_box({"x"});
    RationalPoint c{{"x", 1}};
    PiecewiseLinearConcave h = parametric_max(p, c, c, ParametricMode::Le);
    CHECK(h.domain_start() == 0);
    CHECK(h.eval(q("1/3")) == q("1/3"));
    CHECK(h.eval(q("5")) == 1);
    CHECK(h.constant_tail());
}

TEST_CASE("parametric functions agree with a grid oracle")
{
    Sampler sampler(sampling_seed() + 2);
    int done = 0;
    while (done < 25) {
        HPolytope p = sampler.random_polytope(sampler.random_size(2, 4), sampler.random_size(0, 3));
        RationalPoint c, a;
        for (const auto& v : p.vars()) {
            c[v] = sampler.random_rational();
            a[v] = sampler.random_rational();
        }
        PiecewiseLinearConcave eq = parametric_max(p, c, a, ParametricMode::Eq);
        PiecewiseLinearConcave le = parametric_max(p, c, a, ParametricMode::Le);
        ++done;

        Rational lo = eq.domain_start();
        Rational hi = eq.domain_end();
        for (int step = 0; step <= 16; ++step) {
            Rational grid_step(step, 16);
            grid_step.canonicalize();
            Rational beta = lo + (hi - lo) * grid_step;
            std::vector<Rational> dense_c = p.dense_point(c);
            // eq oracle
            {
                HPolytope face = p;
                Inequality pin;
                for (const auto& [name, value] : a)
                    if (sign(value) != 0)
                        pin.coeffs[name] = value;
                pin.rhs = beta;
                face.add_equality(pin);
                DenseLpResult r = solve_raw(face, dense_c);
                REQUIRE(r.status == RawLpStatus::Optimal);
                REQUIRE(cmp(r.value, eq.eval(beta)) == 0);
            }
            // le oracle
            {
                HPolytope cut = p;
                Inequality pin;
                for (const auto& [name, value] : a)
                    if (sign(value) != 0)
                        pin.coeffs[name] = value;
                pin.rhs = beta;
                cut.add_row(pin);
                DenseLpResult r = solve_raw(cut, dense_c);
                REQUIRE(r.status == RawLpStatus::Optimal);
                REQUIRE(cmp(r.value, le.eval(beta)) == 0);
            }
        }
        // concavity: strictly decreasing slopes is a construction invariant,
        // monotone-then-constant shape for the le form
        for (std::size_t i = 0; i + 1 < le.breakpoints().size(); ++i)
            CHECK(sign(le.slope(i)) > 0);
    }
}

TEST_CASE("edge relaxation vertices are half integral")
{
    Sampler sampler(sampling_seed() + 3);
    for (int i = 0; i < 10; ++i) {
        Graph g = sampler.random_graph(sampler.random_size(2, 6));
        HPolytope p = unit_box(g.nodes());
        for (const auto& [u, v] : g.edges()) {
            Inequality e;
            e.coeffs[u] = 1;
            e.coeffs[v] = 1;
            e.rhs = 1;
            p.add_row(e);
        }
        for (const auto& vertex : enumerate_vertices_dense(p))
            for (const auto& coord : vertex)
                CHECK((coord == 0 || coord == q("1/2") || coord == 1));
    }
}
