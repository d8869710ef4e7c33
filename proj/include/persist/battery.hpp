#pragma once

#include "persist/graphs.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace persist {

// The fixed instance battery for the condition matrix: small named graphs
// plus 1-sum instances. Shared by the CLI and the acceptance suite.
std::vector<std::pair<std::string, Graph>> condition_battery_graphs();

// (g1, v1, g2, v2) instances for condition (C).
std::vector<std::tuple<Graph, std::string, Graph, std::string>> condition_battery_onesums();

} // namespace persist
