#include "persist/catalog.hpp"

#include "persist/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>

namespace persist {

namespace {

// Adjacency codes pack the strict upper triangle, bit per pair (i, j) with
// i < j, low bits first.
std::uint64_t canonical_code(const std::vector<std::vector<bool>>& adj, std::size_t n)
{
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i)
        perm[i] = i;
    std::uint64_t best = ~std::uint64_t(0);
    do {
        std::uint64_t code = 0;
        std::uint64_t bit = 1;
        bool prune = false;
        for (std::size_t i = 0; i < n && !prune; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (adj[perm[i]][perm[j]])
                    code |= bit;
                if (code > best) {
                    prune = true;
                    break;
                }
                bit <<= 1;
            }
        }
        if (!prune && code < best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_code(std::uint64_t code, std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(std::to_string(i));
    Graph g;
    for (const auto& v : labels)
        g.add_node(v);
    std::uint64_t bit = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (code & bit)
                g.add_edge(labels[i], labels[j]);
            bit <<= 1;
        }
    return g;
}

std::vector<std::uint64_t> level_codes(std::size_t n);

std::vector<std::uint64_t> build_level(std::size_t n)
{
    if (n == 1)
        return {0};
    const std::vector<std::uint64_t>& prev = level_codes(n - 1);
    std::set<std::uint64_t> canon;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::uint64_t base : prev) {
        // decode the parent into the first n-1 slots
        for (auto& row : adj)
            std::fill(row.begin(), row.end(), false);
        std::uint64_t bit = 1;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j + 1 < n; ++j) {
                if (base & bit) {
                    adj[i][j] = true;
                    adj[j][i] = true;
                }
                bit <<= 1;
            }
        // attach the new node to every non-empty neighbor subset; every
        // connected graph has a non-cut node, so this reaches all of them
        std::uint64_t subsets = std::uint64_t(1) << (n - 1);
        for (std::uint64_t s = 1; s < subsets; ++s) {
            for (std::size_t j = 0; j + 1 < n; ++j) {
                bool on = (s >> j) & 1;
                adj[n - 1][j] = on;
                adj[j][n - 1] = on;
            }
            canon.insert(canonical_code(adj, n));
        }
    }
    return {canon.begin(), canon.end()};
}

std::vector<std::uint64_t> level_codes(std::size_t n)
{
    static std::map<std::size_t, std::vector<std::uint64_t>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    auto codes = build_level(n);
    cache[n] = codes;
    return codes;
}

} // namespace

const std::vector<Graph>& connected_graphs_with(std::size_t n)
{
    if (n == 0 || n > 8)
        throw BudgetExceeded("graph catalog supports 1..8 nodes");
    static std::map<std::size_t, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<Graph> graphs;
    for (std::uint64_t code : level_codes(n))
        graphs.push_back(graph_from_code(code, n));
    return cache.emplace(n, std::move(graphs)).first->second;
}

std::vector<Graph> connected_graph_catalog(std::size_t max_nodes)
{
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_nodes; ++n)
        for (const auto& g : connected_graphs_with(n))
            out.push_back(g);
    return out;
}

} // namespace persist
