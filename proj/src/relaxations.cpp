#include "persist/relaxations.hpp"

#include "persist/errors.hpp"
#include "persist/lp.hpp"
#include "persist/polytopes.hpp"

#include <algorithm>

namespace persist {

Formulation Formulation::edge()
{
    Formulation f;
    f.id_ = Id::Edge;
    return f;
}

Formulation Formulation::clique()
{
    Formulation f;
    f.id_ = Id::Clique;
    return f;
}

Formulation Formulation::odd_cycle(std::size_t min_len)
{
    if (min_len < 3 || min_len % 2 == 0)
        throw ParseError("odd cycle length must be an odd integer >= 3");
    Formulation f;
    f.id_ = Id::OddCycle;
    f.min_len_ = min_len;
    return f;
}

Formulation Formulation::intersection(std::vector<Formulation> members)
{
    if (members.size() < 2)
        throw ParseError("intersection needs at least two members");
    Formulation f;
    f.id_ = Id::Intersection;
    f.members_ = std::move(members);
    return f;
}

Formulation Formulation::stable_set()
{
    Formulation f;
    f.id_ = Id::StableSet;
    return f;
}

Formulation Formulation::w5_example()
{
    Formulation f;
    f.id_ = Id::W5Example;
    return f;
}

Formulation Formulation::necessity_a()
{
    Formulation f;
    f.id_ = Id::NecessityA;
    return f;
}

Formulation Formulation::necessity_b()
{
    Formulation f;
    f.id_ = Id::NecessityB;
    return f;
}

Formulation Formulation::necessity_c()
{
    Formulation f;
    f.id_ = Id::NecessityC;
    return f;
}

Formulation Formulation::parse(const std::string& spec)
{
    if (spec == "edge")
        return edge();
    if (spec == "clique")
        return clique();
    if (spec == "stable")
        return stable_set();
    if (spec == "w5")
        return w5_example();
    if (spec == "necA")
        return necessity_a();
    if (spec == "necB")
        return necessity_b();
    if (spec == "necC")
        return necessity_c();
    if (spec.rfind("oddcycle:", 0) == 0) {
        std::string num = spec.substr(9);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad odd cycle length in '" + spec + "'");
        return odd_cycle(std::stoul(num));
    }
    if (spec.rfind("intersect:", 0) == 0) {
        std::vector<Formulation> members;
        std::string rest = spec.substr(10);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t plus = rest.find('+', start);
            std::string part =
                rest.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
            if (part.empty())
                throw ParseError("empty member in '" + spec + "'");
            if (part.rfind("intersect:", 0) == 0)
                throw ParseError("nested intersection in '" + spec + "'");
            members.push_back(parse(part));
            if (plus == std::string::npos)
                break;
            start = plus + 1;
        }
        return intersection(std::move(members));
    }
    throw ParseError("unknown formulation spec '" + spec + "'");
}

std::string Formulation::spec() const
{
    switch (id_) {
    case Id::Edge:
        return "edge";
    case Id::Clique:
        return "clique";
    case Id::OddCycle:
        return "oddcycle:" + std::to_string(min_len_);
    case Id::Intersection: {
        std::string out = "intersect:";
        for (std::size_t i = 0; i < members_.size(); ++i)
            out += (i ? "+" : "") + members_[i].spec();
        return out;
    }
    case Id::StableSet:
        return "stable";
    case Id::W5Example:
        return "w5";
    case Id::NecessityA:
        return "necA";
    case Id::NecessityB:
        return "necB";
    case Id::NecessityC:
        return "necC";
    }
    throw Error("unreachable");
}

bool Formulation::operator==(const Formulation& other) const
{
    return spec() == other.spec();
}

Graph w5_graph()
{
    Graph g;
    for (int i = 1; i <= 6; ++i)
        g.add_node(std::to_string(i));
    for (int i = 1; i <= 5; ++i) {
        g.add_edge(std::to_string(i), std::to_string(i % 5 + 1));
        g.add_edge(std::to_string(i), "6");
    }
    return g;
}

namespace {

Inequality sum_inequality(const std::vector<std::string>& members, const Rational& rhs)
{
    Inequality ineq;
    ineq.rhs = rhs;
    for (const auto& v : members)
        ineq.coeffs[v] = Rational(1);
    return ineq;
}

std::vector<GeneratedInequality> edge_rows(const Graph& g)
{
    std::vector<GeneratedInequality> out;
    for (const auto& [u, v] : g.edges())
        out.push_back({"edge", {u, v}, sum_inequality({u, v}, Rational(1))});
    return out;
}

std::vector<GeneratedInequality> clique_rows(const Graph& g)
{
    std::vector<GeneratedInequality> out;
    for (const auto& clique : enumerate_cliques(g, g.nodes().size()))
        if (clique.size() >= 2)
            out.push_back({"clique", clique, sum_inequality(clique, Rational(1))});
    return out;
}

std::vector<GeneratedInequality> odd_cycle_rows(const Graph& g, std::size_t min_len)
{
    // the odd-cycle families live inside the edge relaxation
    std::vector<GeneratedInequality> out = edge_rows(g);
    for (const auto& cycle : enumerate_chordless_odd_cycles(g, min_len)) {
        Rational rhs(static_cast<long>((cycle.size() - 1) / 2));
        std::vector<std::string> sorted = cycle;
        std::sort(sorted.begin(), sorted.end());
        out.push_back({"odd_cycle", cycle, sum_inequality(sorted, rhs)});
    }
    return out;
}

std::vector<GeneratedInequality> necessity_a_rows(const Graph& g)
{
    std::vector<GeneratedInequality> out = edge_rows(g);
    for (const auto& clique : enumerate_cliques(g, 3))
        if (clique.size() == 3)
            out.push_back({"three_clique", clique, sum_inequality(clique, Rational(7, 5))});
    return out;
}

std::vector<GeneratedInequality> w5_rows(const Graph& g)
{
    if (!(g == w5_graph()))
        throw UnsupportedGraph("the w5 rule only applies to the wheel on 1..5 with center 6");
    std::vector<GeneratedInequality> out;
    Inequality hub = sum_inequality({"1", "2", "3", "4", "5"}, Rational(2));
    hub.coeffs["6"] = Rational(2);
    out.push_back({"w5_hub", {"1", "2", "3", "4", "5", "6"}, hub});
    for (int i = 1; i <= 5; ++i) {
        std::string u = std::to_string(i);
        std::string v = std::to_string(i % 5 + 1);
        if (v < u)
            std::swap(u, v);
        out.push_back({"edge", {u, v}, sum_inequality({u, v}, Rational(1))});
    }
    return out;
}

std::vector<GeneratedInequality> facet_rows(const Graph& g)
{
    std::vector<GeneratedInequality> out;
    HPolytope p = stable_set_polytope(g);
    for (std::size_t i = 0; i < p.rows().size(); ++i) {
        Inequality ineq = p.row_as_inequality(i);
        if (is_bound_row(ineq))
            continue;
        out.push_back({"facet", ineq.support(), ineq});
    }
    return out;
}

std::vector<GeneratedInequality> generators(const Formulation& f, const Graph& g)
{
    switch (f.id()) {
    case Formulation::Id::Edge:
        return edge_rows(g);
    case Formulation::Id::Clique:
        return clique_rows(g);
    case Formulation::Id::OddCycle:
        return odd_cycle_rows(g, f.min_len());
    case Formulation::Id::NecessityA:
        return necessity_a_rows(g);
    case Formulation::Id::W5Example:
        return w5_rows(g);
    case Formulation::Id::StableSet:
        return facet_rows(g);
    case Formulation::Id::NecessityB:
        return is_isomorphic_to_k3(g) ? edge_rows(g) : facet_rows(g);
    case Formulation::Id::NecessityC:
        return is_isomorphic_to_k3(g) ? facet_rows(g) : edge_rows(g);
    case Formulation::Id::Intersection: {
        std::vector<GeneratedInequality> out;
        for (const auto& member : f.members())
            for (auto& row : generators(member, g))
                out.push_back(std::move(row));
        return out;
    }
    }
    throw Error("unreachable");
}

} // namespace

HPolytope build(const Formulation& f, const Graph& g)
{
    if (g.nodes().empty())
        throw UnsupportedGraph("relaxations need at least one node");
    if (f.id() == Formulation::Id::W5Example) {
        // box rows except the upper bounds, matching the published system
        HPolytope p(g.nodes());
        std::size_t n = g.nodes().size();
        for (std::size_t i = 0; i < n; ++i) {
            Row low;
            low.coeffs.assign(n, Rational(0));
            low.coeffs[i] = Rational(-1);
            low.rhs = Rational(0);
            p.add_row(std::move(low));
        }
        for (const auto& row : w5_rows(g))
            p.add_row(row.inequality);
        return p;
    }
    HPolytope p = unit_box(g.nodes());
    if (f.id() == Formulation::Id::Intersection) {
        for (const auto& row : generators(f, g))
            p.add_row(row.inequality);
        // condition checks reason about individual rows, so the concatenated
        // description is reduced to an irredundant one
        return remove_redundancies(p);
    }
    for (const auto& row : generators(f, g))
        p.add_row(row.inequality);
    return p;
}

std::vector<GeneratedInequality> list_generators(const Formulation& f, const Graph& g)
{
    if (g.nodes().empty())
        throw UnsupportedGraph("relaxations need at least one node");
    auto rows = generators(f, g);
    for (auto& row : rows) {
        std::sort(row.members.begin(), row.members.end());
        row.inequality = row.inequality.canonical();
    }
    return rows;
}

} // namespace persist
