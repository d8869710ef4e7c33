#pragma once

#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"
#include "persist/persistency.hpp"
#include "persist/plc.hpp"
#include "persist/polytopes.hpp"
#include "persist/relaxations.hpp"
#include "persist/vertices.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace persist {

// Lemma-style objective refinement: given dim(opt(q, c)) < dim(opt(p, c)),
// produces c' such that opt(q, c') is a vertex of q while opt(p, c') is not a
// vertex of p. Implemented as the descent over facet normals of the current
// optimal face of p, with exactly certified step sizes 1/2^k.
RationalPoint refine_objective(const HPolytope& p, const HPolytope& q, const RationalPoint& c);

// One attachable gadget: a graph whose relaxation has a unique optimum that
// is at least 1/2 at v_out, while some maximal stable set avoids v_out.
struct OuterGadget {
    Graph g_out;
    RationalPoint c_out;
    std::string v_out;
    RationalPoint xhat; // the unique relaxation optimum
    RationalPoint xbar; // a c_out-maximal stable set indicator avoiding v_out
    PiecewiseLinearConcave f; // value at v_out level y
    bool pendant = false;
    Rational pendant_epsilon; // certified gadget step when pendant

    PiecewiseLinearConcave::Breakpoint f_peak() const { return f.peak(); }
};

// The inner core: the node-minimal catalog graph whose relaxation differs
// from its edge relaxation, along with the system of facet rows responsible.
struct InnerCore {
    Graph g_in;
    Graph g_in_edge; // same nodes, only the edges whose inequality is valid
    std::vector<Inequality> system; // integer rows A x <= b, full support
    std::string node_one; // the node that stays unattached
};

struct CounterexampleBundle {
    Formulation formulation = Formulation::edge();
    InnerCore inner;
    OuterGadget gadget;
    // inner node j -> relabeling of gadget nodes into the copy attached at j
    std::vector<std::pair<std::string, NodeMap>> attachments;
    Graph g_star;
    RationalPoint c_star;
    PiecewiseLinearConcave g_function;
    Rational gamma;
    Rational lambda;
    Rational epsilon_bound;
    Rational epsilon;
    bool epsilon_within_bound = true;
};

// Machine-checkable record that persistency fails on the bundle, re-derived
// from (g_star, c_star, formulation) alone.
struct Certificate {
    Rational lp_value;
    std::pair<Rational, Rational> node_one_bounds;
    RationalPoint lp_point; // canonical optimal vertex
    std::vector<RationalPoint> lp_face_vertices;
    bool face_vertices_within_budget = true;
    StableSetList ip_optima;
    bool node_one_in_all_optima = false;
    PersistencyReport weak;
    PersistencyReport strong;
};

struct PipelineOptions {
    std::size_t catalog_max_nodes = 7;
    std::optional<Rational> pendant_epsilon;
    std::optional<Rational> epsilon;
    std::uint64_t vertex_budget = kDefaultVertexBudget;
};

OuterGadget build_outer_gadget(const Formulation& f, const Graph& g,
                               std::optional<Rational> pendant_epsilon = std::nullopt);

InnerCore find_inner_core(const Formulation& f, const std::vector<Graph>& catalog);

// First catalog graph whose relaxation differs from its stable set polytope,
// relabeled to letters A, B, C, ...
Graph find_outer_base(const Formulation& f, std::size_t catalog_max_nodes);

// n-1 disjoint copies of the gadget, copy j attached by identifying its
// v_out with inner node j; node_one stays untouched.
std::pair<Graph, std::vector<std::pair<std::string, NodeMap>>>
assemble_gstar(const InnerCore& inner, const OuterGadget& gadget);

Rational eval_f(const OuterGadget& gadget, const Rational& y);

// The composite polytope behind g: the edge relaxation of g_in_edge 1-summed
// with the gadget relaxations, plus its objective and level direction.
struct GComposite {
    HPolytope polytope;
    RationalPoint objective;
    RationalPoint direction;
};
GComposite g_composite(const Formulation& f, const InnerCore& inner, const OuterGadget& gadget,
                       const std::vector<std::pair<std::string, NodeMap>>& attachments);

PiecewiseLinearConcave g_function(const Formulation& f, const InnerCore& inner,
                                  const OuterGadget& gadget,
                                  const std::vector<std::pair<std::string, NodeMap>>& attachments);

struct EpsilonData {
    Rational gamma;
    Rational lambda;
    Rational epsilon_bound;
    Rational epsilon;
    bool within_bound = true;
};
EpsilonData compute_epsilon(const InnerCore& inner, const PiecewiseLinearConcave& g_function,
                            const HPolytope& g_star_polytope, const std::string& node_one,
                            std::optional<Rational> epsilon_override = std::nullopt,
                            std::uint64_t budget = kDefaultVertexBudget);

CounterexampleBundle build_counterexample(const Formulation& f, const PipelineOptions& options = {});

// Checks every claim from scratch; throws VerificationFailed naming the first
// failing sub-check.
Certificate verify_counterexample(const CounterexampleBundle& bundle, const Formulation& f,
                                  std::uint64_t budget = kDefaultVertexBudget);

} // namespace persist
