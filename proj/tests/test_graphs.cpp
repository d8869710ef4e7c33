#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "persist/catalog.hpp"
#include "persist/errors.hpp"
#include "persist/graphs.hpp"

#include <set>

using namespace persist;

TEST_CASE("graph invariants")
{
    Graph g;
    g.add_node("a");
    g.add_node("b");
    CHECK_THROWS_AS(g.add_node("a"), Error);
    CHECK_THROWS_AS(g.add_edge("a", "a"), Error);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), UnknownNode);
    g.add_edge("b", "a");
    g.add_edge("a", "b"); // set semantics
    CHECK(g.edges().size() == 1);
}

TEST_CASE("text round trip is bit exact")
{
    Graph g = Graph::from_text("nodes: b,a,c\nedge: c a\nedge: a b\n");
    CHECK(g.to_text() == "nodes: a,b,c\nedge: a b\nedge: a c\n");
    CHECK(Graph::from_text(g.to_text()) == g);
    CHECK_THROWS_AS(Graph::from_text("edge: a b\n"), ParseError);
    CHECK_THROWS_AS(Graph::from_text("nodes: a\nedges: a b\n"), ParseError);
}

TEST_CASE("induced subgraphs")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    Graph sub = induced_subgraph(k3, {"A", "B"});
    CHECK(sub == complete_graph({"A", "B"}));
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    Graph path = induced_subgraph(c5, {"1", "2", "3"});
    CHECK(path == path_graph({"1", "2", "3"}));
    CHECK(induced_subgraph(c5, {"1", "2", "3", "4", "5"}) == c5);
    CHECK_THROWS_AS(induced_subgraph(k3, {"A", "zz"}), UnknownNode);
}

TEST_CASE("one sum of two edges is a path")
{
    Graph k2a = complete_graph({"a", "b"});
    Graph k2b = complete_graph({"c", "d"});
    auto [sum, map] = one_sum_graphs(k2a, "b", k2b, "c");
    CHECK(sum == Graph({"a", "b", "d"}, {{"a", "b"}, {"b", "d"}}));
    CHECK(map.at("c") == "b");
    CHECK(map.at("d") == "d");
}

TEST_CASE("one sum relabels on collision and keeps counts")
{
    Graph g1 = cycle_graph({"1", "2", "3"});
    Graph g2 = complete_graph({"1", "2", "3"});
    auto [sum, map] = one_sum_graphs(g1, "2", g2, "1");
    CHECK(sum.nodes().size() == g1.nodes().size() + g2.nodes().size() - 1);
    CHECK(sum.edges().size() == g1.edges().size() + g2.edges().size());
    CHECK(map.at("1") == "2");
    // the collision-relabeled survivors keep their edges
    CHECK(sum.has_edge("2", map.at("2")));
    CHECK(sum.has_edge(map.at("2"), map.at("3")));
}

TEST_CASE("one sum with a single node leaves the graph unchanged")
{
    Graph g = cycle_graph({"1", "2", "3"});
    Graph single;
    single.add_node("w");
    auto [sum, map] = one_sum_graphs(g, "1", single, "w");
    CHECK(sum == g);
    CHECK(map.at("w") == "1");
}

TEST_CASE("disjoint copies")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    auto [copy, map] = disjoint_copy(k3, "2");
    CHECK(copy == complete_graph({"A2", "B2", "C2"}));
    CHECK(map.at("A") == "A2");
    Graph empty;
    CHECK(disjoint_copy(empty, "t").first == empty);
}

TEST_CASE("clique enumeration")
{
    Graph k3 = complete_graph({"A", "B", "C"});
    auto cliques = enumerate_cliques(k3, 3);
    CHECK(cliques == std::vector<std::vector<std::string>>{
                         {"A"}, {"A", "B"}, {"A", "B", "C"}, {"A", "C"}, {"B"}, {"B", "C"}, {"C"}});
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    auto c5_cliques = enumerate_cliques(c5, 5);
    CHECK(c5_cliques.size() == 10); // 5 singletons plus 5 edges, no triangle
    for (const auto& c : c5_cliques)
        CHECK(c.size() <= 2);
    Graph edgeless({"a", "b"}, {});
    CHECK(enumerate_cliques(edgeless, 2).size() == 2);
}

TEST_CASE("chordless odd cycles")
{
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    auto cycles = enumerate_chordless_odd_cycles(c5, 5);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<std::string>{"1", "2", "3", "4", "5"});

    Graph k4 = complete_graph({"A", "B", "C", "D"});
    CHECK(enumerate_chordless_odd_cycles(k4, 3).size() == 4);
    CHECK(enumerate_chordless_odd_cycles(k4, 5).empty());

    // a canonical cycle starts at its smallest label and turns to the
    // smaller neighbor
    Graph c5b = cycle_graph({"3", "1", "4", "2", "5"});
    auto canon = enumerate_chordless_odd_cycles(c5b, 5);
    REQUIRE(canon.size() == 1);
    CHECK(canon[0][0] == "1");
    CHECK(canon[0][1] < canon[0].back());
}

TEST_CASE("wheel cycles")
{
    Graph w5;
    for (int i = 1; i <= 6; ++i)
        w5.add_node(std::to_string(i));
    for (int i = 1; i <= 5; ++i) {
        w5.add_edge(std::to_string(i), std::to_string(i % 5 + 1));
        w5.add_edge(std::to_string(i), "6");
    }
    CHECK(enumerate_chordless_odd_cycles(w5, 3).size() == 5); // the five spoke triangles
    CHECK(enumerate_chordless_odd_cycles(w5, 5).size() == 1); // the rim
}

TEST_CASE("stable set enumeration")
{
    Graph c5 = cycle_graph({"1", "2", "3", "4", "5"});
    CHECK(all_stable_sets(c5).size() == 11);
    Graph k3 = complete_graph({"A", "B", "C"});
    CHECK(all_stable_sets(k3).size() == 4);
}

TEST_CASE("catalog sizes match the known counts")
{
    CHECK(connected_graphs_with(1).size() == 1);
    CHECK(connected_graphs_with(2).size() == 1);
    CHECK(connected_graphs_with(3).size() == 2);
    CHECK(connected_graphs_with(4).size() == 6);
    CHECK(connected_graphs_with(5).size() == 21);
    CHECK(connected_graphs_with(6).size() == 112);
    for (const auto& g : connected_graphs_with(5))
        CHECK(is_connected(g));
}

TEST_CASE("k3 recognition is shape based")
{
    CHECK(is_isomorphic_to_k3(complete_graph({"x", "y", "z"})));
    CHECK(!is_isomorphic_to_k3(path_graph({"x", "y", "z"})));
    CHECK(!is_isomorphic_to_k3(complete_graph({"x", "y"})));
}
