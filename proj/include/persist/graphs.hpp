#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace persist {

// Labeled simple undirected graph. Nodes are kept sorted; edges are stored as
// ordered label pairs (min, max). No loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<std::string> nodes, std::vector<std::pair<std::string, std::string>> edges);

    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::set<std::pair<std::string, std::string>>& edges() const { return edges_; }

    bool has_node(const std::string& v) const;
    bool has_edge(const std::string& u, const std::string& v) const;
    std::vector<std::string> neighbors(const std::string& v) const;
    std::size_t degree(const std::string& v) const;

    void add_node(const std::string& v);
    void add_edge(const std::string& u, const std::string& v);

    bool operator==(const Graph&) const = default;

    // "nodes: a,b,c" line followed by "edge: a b" lines, both sorted.
    std::string to_text() const;
    static Graph from_text(const std::string& text);

private:
    std::vector<std::string> nodes_;
    std::set<std::string> node_set_;
    std::set<std::pair<std::string, std::string>> edges_;
};

// Records a relabeling, e.g. the isomorphism produced by a disjoint copy or
// the merge performed by a 1-sum. Injective on its domain.
struct NodeMap {
    std::map<std::string, std::string> pairs;

    const std::string& at(const std::string& v) const;
    void insert(const std::string& from, const std::string& to);
};

Graph induced_subgraph(const Graph& g, const std::set<std::string>& keep);

// Disjoint union of g1 and g2 with v1 and v2 identified; the merged node
// keeps v1's label. Nodes of g2 that would collide with g1 are suffixed with
// "~" until fresh; the returned NodeMap records where every g2 node went.
std::pair<Graph, NodeMap> one_sum_graphs(const Graph& g1, const std::string& v1, const Graph& g2,
                                         const std::string& v2);

// Isomorphic copy with every label suffixed by tag.
std::pair<Graph, NodeMap> disjoint_copy(const Graph& g, const std::string& tag);

// All cliques of size 1..max_size, each sorted, list sorted lexicographically.
std::vector<std::vector<std::string>> enumerate_cliques(const Graph& g, std::size_t max_size);

// Every chordless cycle of odd length >= min_len, once per cycle, in the
// canonical rotation: smallest label first, direction with the smaller second
// label. A chordless cycle is exactly a node set whose induced subgraph is a
// cycle.
std::vector<std::vector<std::string>> enumerate_chordless_odd_cycles(const Graph& g,
                                                                     std::size_t min_len);

bool is_connected(const Graph& g);
bool is_isomorphic_to_k3(const Graph& g);

// Every stable set of g including the empty one, each sorted, in
// lexicographic order. Exhaustive; capped at 24 nodes.
std::vector<std::set<std::string>> all_stable_sets(const Graph& g);

Graph complete_graph(const std::vector<std::string>& labels);
Graph cycle_graph(const std::vector<std::string>& labels);
Graph path_graph(const std::vector<std::string>& labels);

} // namespace persist
