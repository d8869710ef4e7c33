#include "persist/graphs.hpp"

#include "persist/errors.hpp"

#include <algorithm>
#include <sstream>

namespace persist {

Graph::Graph(std::vector<std::string> nodes,
             std::vector<std::pair<std::string, std::string>> edges)
{
    for (auto& v : nodes)
        add_node(v);
    for (auto& [u, v] : edges)
        add_edge(u, v);
}

void Graph::add_node(const std::string& v)
{
    if (v.empty())
        throw Error("empty node label");
    if (!node_set_.insert(v).second)
        throw Error("duplicate node label '" + v + "'");
    nodes_.insert(std::lower_bound(nodes_.begin(), nodes_.end(), v), v);
}

void Graph::add_edge(const std::string& u, const std::string& v)
{
    if (u == v)
        throw Error("loop edge at '" + u + "'");
    if (!has_node(u))
        throw UnknownNode("edge endpoint '" + u + "' is not a node");
    if (!has_node(v))
        throw UnknownNode("edge endpoint '" + v + "' is not a node");
    edges_.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
}

bool Graph::has_node(const std::string& v) const
{
    return node_set_.count(v) != 0;
}

bool Graph::has_edge(const std::string& u, const std::string& v) const
{
    return edges_.count(u < v ? std::make_pair(u, v) : std::make_pair(v, u)) != 0;
}

std::vector<std::string> Graph::neighbors(const std::string& v) const
{
    std::vector<std::string> out;
    for (const auto& [a, b] : edges_) {
        if (a == v)
            out.push_back(b);
        else if (b == v)
            out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Graph::degree(const std::string& v) const
{
    return neighbors(v).size();
}

std::string Graph::to_text() const
{
    std::ostringstream out;
    out << "nodes:";
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        out << (i == 0 ? " " : ",") << nodes_[i];
    out << "\n";
    for (const auto& [u, v] : edges_)
        out << "edge: " << u << " " << v << "\n";
    return out.str();
}

Graph Graph::from_text(const std::string& text)
{
    Graph g;
    std::istringstream in(text);
    std::string line;
    bool saw_nodes = false;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("nodes:", 0) == 0) {
            if (saw_nodes)
                throw ParseError("duplicate nodes line");
            saw_nodes = true;
            std::string rest = line.substr(6);
            std::string current;
            for (char c : rest + ",") {
                if (c == ',') {
                    if (!current.empty())
                        g.add_node(current);
                    current.clear();
                } else if (c != ' ') {
                    current += c;
                }
            }
        } else if (line.rfind("edge:", 0) == 0) {
            std::istringstream es(line.substr(5));
            std::string u, v, extra;
            if (!(es >> u >> v) || (es >> extra))
                throw ParseError("malformed edge line '" + line + "'");
            g.add_edge(u, v);
        } else {
            throw ParseError("unrecognized graph line '" + line + "'");
        }
    }
    if (!saw_nodes)
        throw ParseError("graph text needs a nodes line");
    return g;
}

const std::string& NodeMap::at(const std::string& v) const
{
    auto it = pairs.find(v);
    if (it == pairs.end())
        throw UnknownNode("node map has no entry for '" + v + "'");
    return it->second;
}

void NodeMap::insert(const std::string& from, const std::string& to)
{
    for (const auto& [a, b] : pairs)
        if (b == to)
            throw Error("node map would not be injective at '" + to + "'");
    pairs[from] = to;
}

Graph induced_subgraph(const Graph& g, const std::set<std::string>& keep)
{
    Graph out;
    for (const auto& v : keep) {
        if (!g.has_node(v))
            throw UnknownNode("induced subgraph on unknown node '" + v + "'");
        out.add_node(v);
    }
    for (const auto& [u, v] : g.edges())
        if (keep.count(u) && keep.count(v))
            out.add_edge(u, v);
    return out;
}

std::pair<Graph, NodeMap> one_sum_graphs(const Graph& g1, const std::string& v1, const Graph& g2,
                                         const std::string& v2)
{
    if (!g1.has_node(v1))
        throw UnknownNode("1-sum node '" + v1 + "' missing in first graph");
    if (!g2.has_node(v2))
        throw UnknownNode("1-sum node '" + v2 + "' missing in second graph");
    Graph out;
    NodeMap map;
    for (const auto& v : g1.nodes())
        out.add_node(v);
    for (const auto& v : g2.nodes()) {
        if (v == v2) {
            map.insert(v, v1);
            continue;
        }
        std::string name = v;
        while (out.has_node(name))
            name += "~";
        map.insert(v, name);
        out.add_node(name);
    }
    for (const auto& [u, v] : g1.edges())
        out.add_edge(u, v);
    for (const auto& [u, v] : g2.edges())
        out.add_edge(map.at(u), map.at(v));
    return {out, map};
}

std::pair<Graph, NodeMap> disjoint_copy(const Graph& g, const std::string& tag)
{
    if (tag.empty())
        throw Error("disjoint copy needs a non-empty tag");
    Graph out;
    NodeMap map;
    for (const auto& v : g.nodes()) {
        map.insert(v, v + tag);
        out.add_node(v + tag);
    }
    for (const auto& [u, v] : g.edges())
        out.add_edge(map.at(u), map.at(v));
    return {out, map};
}

namespace {

void extend_clique(const Graph& g, std::vector<std::string>& current, std::size_t next,
                   std::size_t max_size, std::vector<std::vector<std::string>>& out)
{
    if (!current.empty())
        out.push_back(current);
    if (current.size() == max_size)
        return;
    const auto& nodes = g.nodes();
    for (std::size_t i = next; i < nodes.size(); ++i) {
        bool ok = true;
        for (const auto& v : current) {
            if (!g.has_edge(v, nodes[i])) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        current.push_back(nodes[i]);
        extend_clique(g, current, i + 1, max_size, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::string>> enumerate_cliques(const Graph& g, std::size_t max_size)
{
    if (max_size < 1)
        throw Error("clique size bound must be positive");
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    extend_clique(g, current, 0, max_size, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Walks the induced cycle starting from its smallest label, choosing the
// direction whose second label is smaller.
std::vector<std::string> canonical_cycle(const Graph& g, const std::vector<std::string>& nodes)
{
    std::set<std::string> in_cycle(nodes.begin(), nodes.end());
    std::string start = *std::min_element(nodes.begin(), nodes.end());
    std::vector<std::string> around;
    for (const auto& v : g.neighbors(start))
        if (in_cycle.count(v))
            around.push_back(v);
    std::sort(around.begin(), around.end());
    std::vector<std::string> seq{start, around.front()};
    while (seq.size() < nodes.size()) {
        const std::string& last = seq.back();
        const std::string& before = seq[seq.size() - 2];
        for (const auto& v : g.neighbors(last)) {
            if (v != before && in_cycle.count(v)) {
                seq.push_back(v);
                break;
            }
        }
    }
    return seq;
}

} // namespace

std::vector<std::vector<std::string>> enumerate_chordless_odd_cycles(const Graph& g,
                                                                     std::size_t min_len)
{
    if (min_len < 3 || min_len % 2 == 0)
        throw Error("minimum cycle length must be an odd integer >= 3");
    std::size_t n = g.nodes().size();
    if (n > 24)
        throw BudgetExceeded("chordless cycle enumeration capped at 24 nodes");
    std::vector<std::vector<std::string>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size < min_len || size % 2 == 0)
            continue;
        std::vector<std::string> sel;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t(1) << i))
                sel.push_back(g.nodes()[i]);
        // the induced subgraph is a cycle iff it is connected with all degrees 2
        std::set<std::string> keep(sel.begin(), sel.end());
        Graph sub = induced_subgraph(g, keep);
        if (sub.edges().size() != size)
            continue;
        bool all_two = true;
        for (const auto& v : sub.nodes())
            if (sub.degree(v) != 2) {
                all_two = false;
                break;
            }
        if (!all_two || !is_connected(sub))
            continue;
        out.push_back(canonical_cycle(g, sel));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool is_connected(const Graph& g)
{
    if (g.nodes().empty())
        return true;
    std::set<std::string> seen{g.nodes().front()};
    std::vector<std::string> stack{g.nodes().front()};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (const auto& w : g.neighbors(v))
            if (seen.insert(w).second)
                stack.push_back(w);
    }
    return seen.size() == g.nodes().size();
}

bool is_isomorphic_to_k3(const Graph& g)
{
    return g.nodes().size() == 3 && g.edges().size() == 3;
}

namespace {

void grow_stable_sets(const Graph& g, std::size_t next, std::vector<std::string>& current,
                      std::vector<std::set<std::string>>& out)
{
    out.emplace_back(current.begin(), current.end());
    const auto& nodes = g.nodes();
    for (std::size_t i = next; i < nodes.size(); ++i) {
        bool ok = true;
        for (const auto& v : current) {
            if (g.has_edge(v, nodes[i])) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        current.push_back(nodes[i]);
        grow_stable_sets(g, i + 1, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<std::set<std::string>> all_stable_sets(const Graph& g)
{
    if (g.nodes().size() > 24)
        throw BudgetExceeded("stable set enumeration capped at 24 nodes");
    std::vector<std::set<std::string>> out;
    std::vector<std::string> current;
    grow_stable_sets(g, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

Graph complete_graph(const std::vector<std::string>& labels)
{
    Graph g;
    for (const auto& v : labels)
        g.add_node(v);
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            g.add_edge(labels[i], labels[j]);
    return g;
}

Graph cycle_graph(const std::vector<std::string>& labels)
{
    Graph g;
    for (const auto& v : labels)
        g.add_node(v);
    for (std::size_t i = 0; i < labels.size(); ++i)
        g.add_edge(labels[i], labels[(i + 1) % labels.size()]);
    return g;
}

Graph path_graph(const std::vector<std::string>& labels)
{
    Graph g;
    for (const auto& v : labels)
        g.add_node(v);
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        g.add_edge(labels[i], labels[i + 1]);
    return g;
}

} // namespace persist
