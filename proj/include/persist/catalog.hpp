#pragma once

#include "persist/graphs.hpp"

#include <vector>

namespace persist {

// Connected graphs on exactly n nodes, one per isomorphism class, with labels
// "1".."n" in canonical form, ordered by canonical adjacency code. Generated
// by extending the (n-1)-node catalog with one new node and memoized per
// process. n is capped at 8.
const std::vector<Graph>& connected_graphs_with(std::size_t n);

// Concatenation of the per-level catalogs for 1..max_nodes, smallest first.
std::vector<Graph> connected_graph_catalog(std::size_t max_nodes);

} // namespace persist
