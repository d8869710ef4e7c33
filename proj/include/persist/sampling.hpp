#pragma once

#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"

#include <cstdint>
#include <random>

namespace persist {

// Deterministic sampling for the property suites. The seed comes from
// PERSISTLAB_SEED when set; it never influences certificates or pipelines.
std::uint64_t sampling_seed();

class Sampler {
public:
    explicit Sampler(std::uint64_t seed);

    // Erdos-Renyi-style graph on node_count labeled nodes "1".."n".
    Graph random_graph(std::size_t node_count, int edge_percent = 50);

    std::size_t random_size(std::size_t lo, std::size_t hi);

    // Rational with numerator in [-6, 6] and denominator in [1, 6]; zeros and
    // negatives included on purpose.
    Rational random_rational();

    // Objective over all nodes of g.
    RationalPoint random_objective(const Graph& g);

    // Bounded random polytope: [0,1]^d plus extra random rows that keep the
    // box center feasible.
    HPolytope random_polytope(std::size_t dims, std::size_t extra_rows);

private:
    std::mt19937_64 rng_;
};

} // namespace persist
