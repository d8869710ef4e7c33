#include "persist/battery.hpp"

#include "persist/relaxations.hpp"

namespace persist {

std::vector<std::pair<std::string, Graph>> condition_battery_graphs()
{
    std::vector<std::pair<std::string, Graph>> out;
    out.emplace_back("K2", complete_graph({"A", "B"}));
    out.emplace_back("P3", path_graph({"A", "B", "C"}));
    out.emplace_back("K3", complete_graph({"A", "B", "C"}));
    Graph paw = complete_graph({"A", "B", "C"});
    paw.add_node("D");
    paw.add_edge("C", "D");
    out.emplace_back("paw", paw);
    out.emplace_back("C4", cycle_graph({"A", "B", "C", "D"}));
    Graph diamond({"A", "B", "C", "D"},
                  {{"A", "B"}, {"A", "C"}, {"A", "D"}, {"B", "C"}, {"B", "D"}});
    out.emplace_back("diamond", diamond);
    out.emplace_back("K4", complete_graph({"A", "B", "C", "D"}));
    out.emplace_back("C5", cycle_graph({"A", "B", "C", "D", "E"}));
    out.emplace_back("W5", w5_graph());
    return out;
}

std::vector<std::tuple<Graph, std::string, Graph, std::string>> condition_battery_onesums()
{
    std::vector<std::tuple<Graph, std::string, Graph, std::string>> out;
    out.emplace_back(complete_graph({"a", "b"}), "b", complete_graph({"A", "B", "C"}), "A");
    out.emplace_back(complete_graph({"A", "B", "C"}), "A", complete_graph({"D", "E", "F"}), "D");
    out.emplace_back(path_graph({"a", "b", "c"}), "b", complete_graph({"u", "v"}), "u");
    out.emplace_back(complete_graph({"a", "b"}), "a", cycle_graph({"A", "B", "C", "D", "E"}), "A");
    return out;
}

} // namespace persist
