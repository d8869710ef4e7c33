#pragma once

#include "persist/counterexample.hpp"
#include "persist/graphs.hpp"
#include "persist/hpolytope.hpp"
#include "persist/persistency.hpp"
#include "persist/plc.hpp"
#include "persist/polytopes.hpp"

#include <json.hpp>

#include <string>

namespace persist {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& value);
Json to_json(const RationalPoint& point);
Json to_json(const Graph& g);
Json to_json(const Inequality& ineq);
Json to_json(const HPolytope& p);
Json to_json(const PiecewiseLinearConcave& f);
Json to_json(const ConditionReport& report);
Json to_json(const PersistencyReport& report);
Json to_json(const StableSetList& list);
Json to_json(const OuterGadget& gadget);
Json to_json(const InnerCore& core);
Json to_json(const CounterexampleBundle& bundle);
Json to_json(const Certificate& cert);

Rational rational_from_json(const Json& j);
RationalPoint point_from_json(const Json& j);
Graph graph_from_json(const Json& j);
Inequality inequality_from_json(const Json& j);
HPolytope hpolytope_from_json(const Json& j);
PiecewiseLinearConcave plc_from_json(const Json& j);

// Accepts the line-based graph text or the JSON object form.
Graph parse_graph_input(const std::string& text);

// CSV of the (arg, value) breakpoints, one per line.
std::string plc_to_csv(const PiecewiseLinearConcave& f);

} // namespace persist
