// persistlab: exact-rational lab for stable set LP relaxations.
//
// Subcommands build relaxations, run the persistency and condition checkers,
// construct counterexample graphs with certified objectives, and reproduce
// the two packaged reference instances against golden files.
//
// Exit codes: 0 ok / property holds, 1 parse or config error, 2 budget
// exceeded, 3 property violated (a result, not a failure), 4 internal
// verification failure.

#include "persist/battery.hpp"
#include "persist/catalog.hpp"
#include "persist/counterexample.hpp"
#include "persist/errors.hpp"
#include "persist/jsonio.hpp"
#include "persist/lp.hpp"
#include "persist/persistency.hpp"
#include "persist/polytopes.hpp"
#include "persist/relaxations.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace persist;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitBudget = 2;
constexpr int kExitViolated = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_atomically(const std::string& path, const std::string& content)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error("cannot write '" + tmp + "'");
        out << content;
    }
    std::filesystem::rename(tmp, path);
}

void emit(const std::string& out_path, const std::string& content)
{
    if (out_path.empty())
        std::cout << content;
    else
        write_atomically(out_path, content);
}

RationalPoint parse_objective(const std::string& spec, const Graph& g)
{
    RationalPoint c;
    if (spec == "ones") {
        for (const auto& v : g.nodes())
            c[v] = Rational(1);
        return c;
    }
    if (std::filesystem::exists(spec)) {
        Json j = Json::parse(read_file(spec));
        c = point_from_json(j);
    } else if (spec.find('=') != std::string::npos) {
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError("bad objective entry '" + item + "'");
            c[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
        }
    } else {
        std::vector<Rational> values;
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ','))
            values.push_back(parse_rational(item));
        if (values.size() != g.nodes().size())
            throw ParseError("objective list length does not match the node count");
        for (std::size_t i = 0; i < values.size(); ++i)
            c[g.nodes()[i]] = values[i];
    }
    for (const auto& [name, value] : c)
        if (!g.has_node(name))
            throw ParseError("objective mentions unknown node '" + name + "'");
    for (const auto& v : g.nodes())
        if (!c.count(v))
            throw ParseError("objective misses node '" + v + "'");
    return c;
}

int run_relax(const std::string& formulation, const std::string& graph_path,
              const std::string& out_path)
{
    Formulation f = Formulation::parse(formulation);
    Graph g = parse_graph_input(read_file(graph_path));
    HPolytope p = build(f, g);
    emit(out_path, to_json(p).dump(2) + "\n");
    return kExitOk;
}

int run_persistency(const std::string& formulation, const std::string& graph_path,
                    const std::string& objective, const std::string& out_path,
                    std::uint64_t budget)
{
    Formulation f = Formulation::parse(formulation);
    Graph g = parse_graph_input(read_file(graph_path));
    RationalPoint c = parse_objective(objective, g);
    HPolytope p = build(f, g);
    PersistencyReport weak = check_weak_persistency(g, c, p, budget);
    PersistencyReport strong = check_strong_persistency(g, c, p);
    Json j = Json::object();
    j["formulation"] = f.spec();
    j["weak"] = to_json(weak);
    j["strong"] = to_json(strong);
    emit(out_path, j.dump(2) + "\n");
    return weak.holds && strong.holds ? kExitOk : kExitViolated;
}

int run_conditions(const std::string& formulation, const std::string& out_path)
{
    Formulation f = Formulation::parse(formulation);
    Json reports = Json::array();
    bool all_hold = true;
    for (const auto& [name, g] : condition_battery_graphs()) {
        for (Condition cond : {Condition::A, Condition::B}) {
            if (f.id() == Formulation::Id::W5Example && !(g == w5_graph()))
                continue;
            ConditionReport report = check_condition(f, cond, g);
            Json entry = to_json(report);
            entry["instance"] = name;
            reports.push_back(std::move(entry));
            all_hold = all_hold && report.holds;
        }
    }
    if (f.id() != Formulation::Id::W5Example) {
        for (const auto& [g1, v1, g2, v2] : condition_battery_onesums()) {
            ConditionReport report = check_condition(f, g1, v1, g2, v2);
            Json entry = to_json(report);
            entry["instance"] = "one_sum";
            reports.push_back(std::move(entry));
            all_hold = all_hold && report.holds;
        }
    }
    Json j = Json::object();
    j["formulation"] = f.spec();
    j["reports"] = std::move(reports);
    emit(out_path, j.dump(2) + "\n");
    return all_hold ? kExitOk : kExitViolated;
}

struct PipelineFlags {
    std::string epsilon;
    std::string gadget_epsilon;
    std::size_t catalog_max_nodes = 7;
    std::uint64_t budget = kDefaultVertexBudget;
};

PipelineOptions pipeline_options(const PipelineFlags& flags)
{
    PipelineOptions options;
    options.catalog_max_nodes = flags.catalog_max_nodes;
    options.vertex_budget = flags.budget;
    if (!flags.epsilon.empty())
        options.epsilon = parse_rational(flags.epsilon);
    if (!flags.gadget_epsilon.empty())
        options.pendant_epsilon = parse_rational(flags.gadget_epsilon);
    return options;
}

Json counterexample_document(const Formulation& f, const PipelineOptions& options)
{
    CounterexampleBundle bundle = build_counterexample(f, options);
    Certificate cert = verify_counterexample(bundle, f, options.vertex_budget);
    Json j = Json::object();
    j["bundle"] = to_json(bundle);
    j["certificate"] = to_json(cert);
    return j;
}

int run_counterexample(const std::string& formulation, const PipelineFlags& flags,
                       const std::string& out_path, const std::string& plot_path)
{
    Formulation f = Formulation::parse(formulation);
    PipelineOptions options = pipeline_options(flags);
    CounterexampleBundle bundle = build_counterexample(f, options);
    Certificate cert = verify_counterexample(bundle, f, options.vertex_budget);
    Json j = Json::object();
    j["bundle"] = to_json(bundle);
    j["certificate"] = to_json(cert);
    emit(out_path, j.dump(2) + "\n");
    if (!plot_path.empty())
        write_atomically(plot_path, plc_to_csv(bundle.g_function));
    return kExitOk;
}

int run_gfunction(const std::string& formulation, const PipelineFlags& flags,
                  const std::string& out_path)
{
    Formulation f = Formulation::parse(formulation);
    PipelineOptions options = pipeline_options(flags);
    InnerCore inner = find_inner_core(f, connected_graph_catalog(options.catalog_max_nodes));
    OuterGadget gadget =
        build_outer_gadget(f, find_outer_base(f, options.catalog_max_nodes),
                           options.pendant_epsilon);
    auto [star, attachments] = assemble_gstar(inner, gadget);
    (void)star;
    PiecewiseLinearConcave g = g_function(f, inner, gadget, attachments);
    emit(out_path, plc_to_csv(g));
    return kExitOk;
}

struct PaperExample {
    std::string name;
    std::string formulation;
    PipelineFlags flags;
};

int run_paper_examples(const std::string& golden_dir, const std::string& out_dir)
{
    std::vector<PaperExample> examples;
    examples.push_back({"example_c5_k3", "oddcycle:5", {"1/20", "", 7, kDefaultVertexBudget}});
    examples.push_back({"example_c3_k4", "oddcycle:3", {"1/300", "1/3", 7, kDefaultVertexBudget}});
    bool all_match = true;
    for (const auto& example : examples) {
        Formulation f = Formulation::parse(example.formulation);
        Json j = counterexample_document(f, pipeline_options(example.flags));
        std::string fresh = j.dump(2) + "\n";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            write_atomically(out_dir + "/" + example.name + ".json", fresh);
        }
        std::string golden_path = golden_dir + "/" + example.name + ".json";
        if (!std::filesystem::exists(golden_path)) {
            std::cerr << example.name << ": missing golden file " << golden_path << "\n";
            all_match = false;
            continue;
        }
        std::string golden = read_file(golden_path);
        if (golden == fresh) {
            std::cout << example.name << ": matches golden file\n";
        } else {
            std::cerr << example.name << ": differs from golden file " << golden_path << "\n";
            all_match = false;
        }
    }
    return all_match ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-rational lab for stable set LP relaxations"};
    app.require_subcommand(1);

    std::string formulation, graph_path, objective, out_path, plot_path;
    std::string golden_dir = "data/golden", out_dir;
    PipelineFlags flags;

    auto* relax = app.add_subcommand("relax", "emit the H-polytope of a formulation on a graph");
    relax->add_option("--formulation", formulation)->required();
    relax->add_option("--graph", graph_path)->required();
    relax->add_option("--out", out_path);

    auto* persistency =
        app.add_subcommand("persistency", "check weak and strong persistency on one instance");
    persistency->add_option("--formulation", formulation)->required();
    persistency->add_option("--graph", graph_path)->required();
    persistency->add_option("--objective", objective)->required();
    persistency->add_option("--out", out_path);
    persistency->add_option("--budget-vertices", flags.budget);

    auto* conditions =
        app.add_subcommand("conditions", "run the structural condition checks on the battery");
    conditions->add_option("--formulation", formulation)->required();
    conditions->add_option("--out", out_path);

    auto* counterexample =
        app.add_subcommand("counterexample", "construct and verify a persistency counterexample");
    counterexample->add_option("--formulation", formulation)->required();
    counterexample->add_option("--epsilon", flags.epsilon);
    counterexample->add_option("--gadget-epsilon", flags.gadget_epsilon);
    counterexample->add_option("--catalog-max-nodes", flags.catalog_max_nodes);
    counterexample->add_option("--budget-vertices", flags.budget);
    counterexample->add_option("--out", out_path);
    counterexample->add_option("--emit-plot-data", plot_path);

    auto* gfunction =
        app.add_subcommand("gfunction", "emit the composite value function breakpoints as CSV");
    gfunction->add_option("--formulation", formulation)->required();
    gfunction->add_option("--gadget-epsilon", flags.gadget_epsilon);
    gfunction->add_option("--catalog-max-nodes", flags.catalog_max_nodes);
    gfunction->add_option("--budget-vertices", flags.budget);
    gfunction->add_option("--out", out_path);

    auto* paper =
        app.add_subcommand("paper-examples", "reproduce both packaged examples end to end");
    paper->add_option("--golden", golden_dir);
    paper->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (relax->parsed())
            return run_relax(formulation, graph_path, out_path);
        if (persistency->parsed())
            return run_persistency(formulation, graph_path, objective, out_path, flags.budget);
        if (conditions->parsed())
            return run_conditions(formulation, out_path);
        if (counterexample->parsed())
            return run_counterexample(formulation, flags, out_path, plot_path);
        if (gfunction->parsed())
            return run_gfunction(formulation, flags, out_path);
        if (paper->parsed())
            return run_paper_examples(golden_dir, out_dir);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NoCore& e) {
        std::cerr << "no counterexample: " << e.what() << "\n";
        return kExitViolated;
    } catch (const NotSeparable& e) {
        std::cerr << "no counterexample: " << e.what() << "\n";
        return kExitViolated;
    } catch (const VerificationFailed& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kExitVerification;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitConfig;
}
