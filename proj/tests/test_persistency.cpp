#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persist/lp.hpp"
#include "persist/persistency.hpp"
#include "persist/polytopes.hpp"
#include "persist/relaxations.hpp"
#include "persist/sampling.hpp"

using namespace persist;

namespace {

Rational q(const char* text)
{
    return parse_rational(text);
}

RationalPoint ones(const Graph& g)
{
    RationalPoint c;
    for (const auto& v : g.nodes())
        c[v] = 1;
    return c;
}

} // namespace

TEST_CASE("maximal stable sets of the triangle")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    StableSetList list = max_weight_stable_sets(k3, ones(k3));
    CHECK(list.value == 1);
    CHECK(list.sets == std::vector<std::vector<std::string>>{{"A"}, {"B"}, {"C"}});
}

TEST_CASE("maximal stable set of an edgeless graph is everything")
{
    Graph g({"a", "b", "c"}, {});
    StableSetList list = max_weight_stable_sets(g, ones(g));
    CHECK(list.sets == std::vector<std::vector<std::string>>{{"a", "b", "c"}});
    CHECK(list.value == 3);
}

TEST_CASE("negative weights are excluded from optima")
{
    Graph g({"a", "b"}, {});
    RationalPoint c{{"a", 1}, {"b", q("-2")}};
    StableSetList list = max_weight_stable_sets(g, c);
    CHECK(list.sets == std::vector<std::vector<std::string>>{{"a"}});
    CHECK(list.value == 1);
}

TEST_CASE("edge relaxation of the triangle is weakly persistent")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    HPolytope p = build(Formulation::edge(), k3);
    PersistencyReport weak = check_weak_persistency(k3, ones(k3), p);
    CHECK(weak.holds);
    PersistencyReport strong = check_strong_persistency(k3, ones(k3), p);
    CHECK(strong.holds);
    // the unique LP optimum is fully fractional
    CHECK(fixed_coordinates(p, ones(k3)).empty());
}

TEST_CASE("a dominated node is fixed on both sides")
{
    Graph k2 = complete_graph({"1", "2"});
    HPolytope p = build(Formulation::edge(), k2);
    RationalPoint c{{"1", 1}, {"2", 3}};
    RationalPoint fixed = fixed_coordinates(p, c);
    REQUIRE(fixed.size() == 2);
    CHECK(fixed.at("1") == 0);
    CHECK(fixed.at("2") == 1);
    CHECK(check_weak_persistency(k2, c, p).holds);
    CHECK(check_strong_persistency(k2, c, p).holds);
}

TEST_CASE("single node trivially persists")
{
    Graph g({"v"}, {});
    HPolytope p = unit_box({"v"});
    RationalPoint c{{"v", 1}};
    CHECK(check_weak_persistency(g, c, p).holds);
    CHECK(check_strong_persistency(g, c, p).holds);
}

TEST_CASE("a broken relaxation is caught with a witness")
{
    // a deliberately wrong polytope for K2: it fixes node 1 to one while
    // the only maximal stable set is node 2
    Graph k2 = complete_graph({"1", "2"});
    HPolytope p = unit_box(k2.nodes());
    Inequality pin;
    pin.coeffs["1"] = -1;
    pin.rhs = -1; // x1 >= 1
    p.add_row(pin);
    Inequality cap;
    cap.coeffs["2"] = 1;
    cap.rhs = 0; // x2 <= 0
    p.add_row(cap);
    RationalPoint c{{"1", 1}, {"2", 3}};
    PersistencyReport weak = check_weak_persistency(k2, c, p);
    REQUIRE(!weak.holds);
    REQUIRE(weak.witness.has_value());
    CHECK(weak.witness->fixed_pattern.at("1") == 1);
    PersistencyReport strong = check_strong_persistency(k2, c, p);
    CHECK(!strong.holds);
}

TEST_CASE("vertex cover transform is an involution and preserves verdicts")
{
    Sampler sampler(sampling_seed() + 5);
    for (int i = 0; i < 8; ++i) {
        Graph g = sampler.random_graph(sampler.random_size(2, 5));
        HPolytope p = build(Formulation::edge(), g);
        HPolytope twice = vertex_cover_transform(vertex_cover_transform(p));
        CHECK(canonical_inequality_system(twice) == canonical_inequality_system(p));

        RationalPoint c = sampler.random_objective(g);
        RationalPoint negated;
        for (const auto& [name, value] : c)
            negated[name] = -value;
        // complements of the maximal stable sets are the optimal covers
        StableSetList optima = max_weight_stable_sets(g, c);
        std::vector<RationalPoint> covers;
        for (const auto& x : stable_set_indicators(g, optima)) {
            RationalPoint y;
            for (const auto& [name, value] : x)
                y[name] = Rational(1) - value;
            covers.push_back(std::move(y));
        }
        HPolytope image = vertex_cover_transform(p);
        PersistencyReport weak = check_weak_persistency(g, c, p);
        PersistencyReport weak_cover = weak_persistency_core(image, negated, covers);
        CHECK(weak.holds == weak_cover.holds);
        PersistencyReport strong = check_strong_persistency(g, c, p);
        PersistencyReport strong_cover = strong_persistency_core(image, negated, covers);
        CHECK(strong.holds == strong_cover.holds);
    }
}

TEST_CASE("vertex reduction soundness on random polytopes")
{
    // An integer coordinate of a convex combination of [0,1] points is
    // integer with the same value in every participating vertex. This is
    // what makes checking weak persistency at the face vertices equivalent
    // to checking it at every optimal point.
    Sampler sampler(sampling_seed() + 6);
    for (int i = 0; i < 10; ++i) {
        HPolytope p = sampler.random_polytope(sampler.random_size(2, 5), sampler.random_size(0, 3));
        RationalPoint c;
        for (const auto& v : p.vars())
            c[v] = sampler.random_rational();
        HPolytope face = optimal_face(p, c);
        auto vertices = enumerate_vertices(face);
        REQUIRE(!vertices.empty());
        for (int trial = 0; trial < 12; ++trial) {
            // dense rational point of the face with known support
            std::vector<Rational> weights;
            Rational total(0);
            for (std::size_t k = 0; k < vertices.size(); ++k) {
                Rational w(static_cast<long>(sampler.random_size(0, 4)));
                weights.push_back(w);
                total += w;
            }
            if (sign(total) == 0)
                continue;
            RationalPoint x;
            for (const auto& v : p.vars())
                x[v] = 0;
            for (std::size_t k = 0; k < vertices.size(); ++k)
                for (const auto& [name, value] : vertices[k])
                    x[name] += weights[k] / total * value;
            for (const auto& [name, value] : x) {
                if (value != 0 && value != 1)
                    continue;
                for (std::size_t k = 0; k < vertices.size(); ++k)
                    if (sign(weights[k]) != 0)
                        CHECK(cmp(vertices[k].at(name), value) == 0);
            }
        }
        // with the face vertices themselves as candidates the check holds
        PersistencyReport self = weak_persistency_core(p, c, vertices);
        CHECK(self.holds);
    }
}
