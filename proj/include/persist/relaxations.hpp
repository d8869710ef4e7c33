#pragma once

#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"

#include <string>
#include <vector>

namespace persist {

// The formulation registry: named rules mapping graphs to H-polytopes. Every
// registered rule is a stable set formulation, i.e. its 0/1 points are
// exactly the stable set indicators of the graph.
class Formulation {
public:
    enum class Id {
        Edge,
        Clique,
        OddCycle,     // parameter: minimum odd cycle length
        Intersection, // parameter: member formulations
        StableSet,
        W5Example,
        NecessityA,
        NecessityB,
        NecessityC,
    };

    static Formulation edge();
    static Formulation clique();
    static Formulation odd_cycle(std::size_t min_len);
    static Formulation intersection(std::vector<Formulation> members);
    static Formulation stable_set();
    static Formulation w5_example();
    static Formulation necessity_a();
    static Formulation necessity_b();
    static Formulation necessity_c();

    // CLI spec strings: "edge", "clique", "oddcycle:3", "oddcycle:5",
    // "intersect:clique+oddcycle:3", "stable", "w5", "necA", "necB", "necC".
    static Formulation parse(const std::string& spec);
    std::string spec() const;

    Id id() const { return id_; }
    std::size_t min_len() const { return min_len_; }
    const std::vector<Formulation>& members() const { return members_; }

    bool operator==(const Formulation& other) const;

private:
    Formulation() = default;
    Id id_ = Id::Edge;
    std::size_t min_len_ = 3;
    std::vector<Formulation> members_;
};

// A family row together with the clique/cycle/... that generated it.
struct GeneratedInequality {
    std::string family;
    std::vector<std::string> members;
    Inequality inequality;
};

// The H-polytope of formulation f on g: [0,1] box rows first, then the
// family rows. The w5_example rule accepts only the six-node wheel with the
// fixed labeling 1..6 (cycle 1-2-3-4-5, center 6).
HPolytope build(const Formulation& f, const Graph& g);

// Every non-box row of build(f, g) with its provenance tag.
std::vector<GeneratedInequality> list_generators(const Formulation& f, const Graph& g);

// The wheel accepted by the w5_example rule.
Graph w5_graph();

} // namespace persist
