#include "persist/sampling.hpp"

#include "persist/errors.hpp"

#include <cstdlib>
#include <string>

namespace persist {

std::uint64_t sampling_seed()
{
    if (const char* env = std::getenv("PERSISTLAB_SEED")) {
        std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("PERSISTLAB_SEED must be a nonnegative integer");
        return std::stoull(text);
    }
    return 987654321u;
}

Sampler::Sampler(std::uint64_t seed) : rng_(seed) {}

Graph Sampler::random_graph(std::size_t node_count, int edge_percent)
{
    Graph g;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= node_count; ++i) {
        labels.push_back(std::to_string(i));
        g.add_node(labels.back());
    }
    std::uniform_int_distribution<int> coin(0, 99);
    for (std::size_t i = 0; i < node_count; ++i)
        for (std::size_t j = i + 1; j < node_count; ++j)
            if (coin(rng_) < edge_percent)
                g.add_edge(labels[i], labels[j]);
    return g;
}

std::size_t Sampler::random_size(std::size_t lo, std::size_t hi)
{
    std::uniform_int_distribution<std::size_t> dist(lo, hi);
    return dist(rng_);
}

Rational Sampler::random_rational()
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 6);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
}

RationalPoint Sampler::random_objective(const Graph& g)
{
    RationalPoint c;
    for (const auto& v : g.nodes())
        c[v] = random_rational();
    return c;
}

HPolytope Sampler::random_polytope(std::size_t dims, std::size_t extra_rows)
{
    std::vector<std::string> vars;
    for (std::size_t i = 1; i <= dims; ++i)
        vars.push_back("x" + std::to_string(i));
    HPolytope p = unit_box(vars);
    std::uniform_int_distribution<long> coeff(-3, 3);
    for (std::size_t r = 0; r < extra_rows; ++r) {
        Row row;
        row.coeffs.resize(dims);
        Rational center_value(0);
        for (std::size_t j = 0; j < dims; ++j) {
            row.coeffs[j] = Rational(coeff(rng_));
            center_value += row.coeffs[j] / 2;
        }
        // keep the box center inside so the polytope stays nonempty
        std::uniform_int_distribution<long> slack_num(0, 3);
        Rational slack(slack_num(rng_), 2);
        slack.canonicalize();
        row.rhs = center_value + slack;
        p.add_row(std::move(row));
    }
    return p;
}

} // namespace persist
