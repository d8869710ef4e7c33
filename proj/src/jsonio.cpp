#include "persist/jsonio.hpp"

#include "persist/errors.hpp"

#include <sstream>

namespace persist {

Json to_json(const Rational& value)
{
    return to_string(value);
}

Json to_json(const RationalPoint& point)
{
    Json j = Json::object();
    for (const auto& [name, value] : point)
        j[name] = to_string(value);
    return j;
}

Json to_json(const Graph& g)
{
    Json j = Json::object();
    j["nodes"] = g.nodes();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Json to_json(const Inequality& ineq)
{
    Json j = Json::object();
    Json coeffs = Json::object();
    for (const auto& [name, value] : ineq.coeffs)
        coeffs[name] = to_string(value);
    j["coeffs"] = std::move(coeffs);
    j["rhs"] = to_string(ineq.rhs);
    return j;
}

Json to_json(const HPolytope& p)
{
    Json j = Json::object();
    j["vars"] = p.vars();
    Json rows = Json::array();
    for (std::size_t i = 0; i < p.rows().size(); ++i)
        rows.push_back(to_json(p.row_as_inequality(i)));
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const PiecewiseLinearConcave& f)
{
    Json j = Json::object();
    j["domain_start"] = to_string(f.domain_start());
    Json breakpoints = Json::array();
    for (const auto& b : f.breakpoints())
        breakpoints.push_back(Json::array({to_string(b.arg), to_string(b.value)}));
    // the constant tail is written as an explicit trailing zero-slope segment
    if (f.constant_tail())
        breakpoints.push_back(Json::array(
            {to_string(f.domain_end() + 1), to_string(f.breakpoints().back().value)}));
    j["breakpoints"] = std::move(breakpoints);
    return j;
}

Json to_json(const ConditionReport& report)
{
    Json j = Json::object();
    j["condition"] = to_string(report.condition);
    j["holds"] = report.holds;
    if (!report.holds) {
        Json witness = Json::object();
        if (report.witness_inequality)
            witness["inequality"] = to_json(*report.witness_inequality);
        if (report.witness_graph)
            witness["graph"] = to_json(*report.witness_graph);
        witness["detail"] = report.detail;
        j["witness"] = std::move(witness);
    }
    return j;
}

Json to_json(const PersistencyReport& report)
{
    Json j = Json::object();
    j["mode"] = to_string(report.mode);
    j["holds"] = report.holds;
    if (report.witness) {
        Json w = Json::object();
        w["lp_vertex"] = to_json(report.witness->lp_vertex);
        Json pattern = Json::array();
        for (const auto& [name, value] : report.witness->fixed_pattern) {
            Json entry = Json::object();
            entry["node"] = name;
            entry["value"] = to_string(value);
            pattern.push_back(std::move(entry));
        }
        w["fixed_pattern"] = std::move(pattern);
        w["reason"] = report.witness->reason;
        j["witness"] = std::move(w);
    }
    return j;
}

Json to_json(const StableSetList& list)
{
    Json j = Json::object();
    j["value"] = to_string(list.value);
    Json sets = Json::array();
    for (const auto& s : list.sets)
        sets.push_back(s);
    j["sets"] = std::move(sets);
    return j;
}

Json to_json(const OuterGadget& gadget)
{
    Json j = Json::object();
    j["graph"] = to_json(gadget.g_out);
    j["objective"] = to_json(gadget.c_out);
    j["attach_node"] = gadget.v_out;
    j["relaxation_optimum"] = to_json(gadget.xhat);
    j["integer_optimum"] = to_json(gadget.xbar);
    Json peak = Json::object();
    peak["arg"] = to_string(gadget.f_peak().arg);
    peak["value"] = to_string(gadget.f_peak().value);
    j["f_peak"] = std::move(peak);
    j["f"] = to_json(gadget.f);
    j["pendant"] = gadget.pendant;
    if (gadget.pendant)
        j["pendant_epsilon"] = to_string(gadget.pendant_epsilon);
    return j;
}

Json to_json(const InnerCore& core)
{
    Json j = Json::object();
    j["graph"] = to_json(core.g_in);
    j["edge_valid_subgraph"] = to_json(core.g_in_edge);
    Json system = Json::array();
    for (const auto& row : core.system)
        system.push_back(to_json(row));
    j["system"] = std::move(system);
    j["unattached_node"] = core.node_one;
    return j;
}

Json to_json(const CounterexampleBundle& bundle)
{
    Json j = Json::object();
    j["formulation"] = bundle.formulation.spec();
    j["inner"] = to_json(bundle.inner);
    j["gadget"] = to_json(bundle.gadget);
    Json attachments = Json::object();
    for (const auto& [node, map] : bundle.attachments) {
        Json m = Json::object();
        for (const auto& [from, to] : map.pairs)
            m[from] = to;
        attachments[node] = std::move(m);
    }
    j["attachments"] = std::move(attachments);
    j["g_star"] = to_json(bundle.g_star);
    j["c_star"] = to_json(bundle.c_star);
    j["g_function"] = to_json(bundle.g_function);
    j["gamma"] = to_string(bundle.gamma);
    j["lambda"] = to_string(bundle.lambda);
    j["epsilon_bound"] = to_string(bundle.epsilon_bound);
    j["epsilon"] = to_string(bundle.epsilon);
    j["epsilon_within_bound"] = bundle.epsilon_within_bound;
    return j;
}

Json to_json(const Certificate& cert)
{
    Json j = Json::object();
    Json lp = Json::object();
    lp["value"] = to_string(cert.lp_value);
    lp["unattached_node_bounds"] = Json::array({to_string(cert.node_one_bounds.first),
                                                to_string(cert.node_one_bounds.second)});
    lp["optimal_point"] = to_json(cert.lp_point);
    if (cert.face_vertices_within_budget) {
        Json verts = Json::array();
        for (const auto& v : cert.lp_face_vertices)
            verts.push_back(to_json(v));
        lp["optimal_face_vertices"] = std::move(verts);
    } else {
        lp["optimal_face_vertices_budget_exceeded"] = true;
    }
    j["lp_side"] = std::move(lp);
    Json ip = Json::object();
    ip["optimal_stable_sets"] = to_json(cert.ip_optima);
    ip["unattached_node_in_all"] = cert.node_one_in_all_optima;
    j["ip_side"] = std::move(ip);
    Json verdicts = Json::object();
    verdicts["weak"] = to_json(cert.weak);
    verdicts["strong"] = to_json(cert.strong);
    j["persistency"] = std::move(verdicts);
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (!j.is_string())
        throw ParseError("rationals are serialized as strings");
    return parse_rational(j.get<std::string>());
}

RationalPoint point_from_json(const Json& j)
{
    RationalPoint out;
    for (const auto& [name, value] : j.items())
        out[name] = rational_from_json(value);
    return out;
}

Graph graph_from_json(const Json& j)
{
    Graph g;
    if (!j.contains("nodes"))
        throw ParseError("graph JSON needs a nodes array");
    for (const auto& v : j.at("nodes"))
        g.add_node(v.get<std::string>());
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("graph edges must be pairs");
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        }
    for (const auto& [key, value] : j.items())
        if (key != "nodes" && key != "edges")
            throw ParseError("unknown graph key '" + key + "'");
    return g;
}

Inequality inequality_from_json(const Json& j)
{
    Inequality out;
    for (const auto& [name, value] : j.at("coeffs").items())
        out.coeffs[name] = rational_from_json(value);
    out.rhs = rational_from_json(j.at("rhs"));
    return out;
}

HPolytope hpolytope_from_json(const Json& j)
{
    std::vector<std::string> vars;
    for (const auto& v : j.at("vars"))
        vars.push_back(v.get<std::string>());
    HPolytope p(vars);
    for (const auto& row : j.at("rows"))
        p.add_row(inequality_from_json(row));
    return p;
}

PiecewiseLinearConcave plc_from_json(const Json& j)
{
    std::vector<PiecewiseLinearConcave::Breakpoint> points;
    for (const auto& b : j.at("breakpoints")) {
        if (!b.is_array() || b.size() != 2)
            throw ParseError("breakpoints must be pairs");
        points.push_back({rational_from_json(b[0]), rational_from_json(b[1])});
    }
    if (points.empty())
        throw ParseError("a piecewise linear function needs breakpoints");
    // a trailing zero-slope segment encodes the constant tail
    bool tail = false;
    if (points.size() >= 2 &&
        cmp(points[points.size() - 2].value, points.back().value) == 0) {
        tail = true;
        points.pop_back();
    }
    return PiecewiseLinearConcave(std::move(points), tail);
}

Graph parse_graph_input(const std::string& text)
{
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r')
            continue;
        if (c == '{')
            return graph_from_json(Json::parse(text));
        break;
    }
    return Graph::from_text(text);
}

std::string plc_to_csv(const PiecewiseLinearConcave& f)
{
    std::ostringstream out;
    out << "arg,value\n";
    for (const auto& b : f.breakpoints())
        out << to_string(b.arg) << "," << to_string(b.value) << "\n";
    return out.str();
}

} // namespace persist
