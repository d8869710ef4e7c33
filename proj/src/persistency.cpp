#include "persist/persistency.hpp"

#include "persist/errors.hpp"
#include "persist/lp.hpp"

#include <algorithm>

namespace persist {

std::string to_string(PersistencyMode mode)
{
    return mode == PersistencyMode::Weak ? "weak" : "strong";
}

StableSetList max_weight_stable_sets(const Graph& g, const RationalPoint& c)
{
    for (const auto& [name, value] : c)
        if (!g.has_node(name))
            throw UnknownNode("objective mentions unknown node '" + name + "'");
    auto weight = [&](const std::string& v) {
        auto it = c.find(v);
        return it == c.end() ? Rational(0) : it->second;
    };
    StableSetList out;
    bool first = true;
    for (const auto& s : all_stable_sets(g)) {
        Rational value(0);
        for (const auto& v : s)
            value += weight(v);
        int rel = first ? 1 : cmp(value, out.value);
        first = false;
        if (rel > 0) {
            out.value = value;
            out.sets.clear();
        }
        if (rel >= 0)
            out.sets.emplace_back(s.begin(), s.end());
    }
    std::sort(out.sets.begin(), out.sets.end());
    return out;
}

std::vector<RationalPoint> stable_set_indicators(const Graph& g, const StableSetList& list)
{
    std::vector<RationalPoint> out;
    for (const auto& s : list.sets) {
        RationalPoint x;
        for (const auto& v : g.nodes())
            x[v] = Rational(0);
        for (const auto& v : s)
            x[v] = Rational(1);
        out.push_back(std::move(x));
    }
    return out;
}

namespace {

RationalPoint integer_pattern(const RationalPoint& x)
{
    RationalPoint pattern;
    for (const auto& [name, value] : x)
        if (value == 0 || value == 1)
            pattern[name] = value;
    return pattern;
}

bool matches(const RationalPoint& candidate, const RationalPoint& pattern)
{
    for (const auto& [name, value] : pattern) {
        auto it = candidate.find(name);
        if (it == candidate.end() || cmp(it->second, value) != 0)
            return false;
    }
    return true;
}

} // namespace

PersistencyReport weak_persistency_core(const HPolytope& p, const RationalPoint& c,
                                        const std::vector<RationalPoint>& integer_optima,
                                        std::uint64_t budget)
{
    PersistencyReport report;
    report.mode = PersistencyMode::Weak;
    HPolytope face = optimal_face(p, c);
    for (const auto& vertex : enumerate_vertices(face, budget)) {
        RationalPoint pattern = integer_pattern(vertex);
        bool matched = false;
        for (const auto& y : integer_optima) {
            if (matches(y, pattern)) {
                matched = true;
                break;
            }
        }
        if (!matched) {
            report.holds = false;
            report.witness = PersistencyWitness{
                vertex, pattern,
                "no maximal integer solution matches the integer coordinates of this optimal "
                "vertex"};
            return report;
        }
    }
    return report;
}

PersistencyReport strong_persistency_core(const HPolytope& p, const RationalPoint& c,
                                          const std::vector<RationalPoint>& integer_optima)
{
    PersistencyReport report;
    report.mode = PersistencyMode::Strong;
    HPolytope face = optimal_face(p, c);
    for (const auto& var : p.vars()) {
        auto [lo, hi] = coordinate_bounds(face, var);
        if (cmp(lo, hi) != 0 || (lo != 0 && lo != 1))
            continue;
        for (const auto& y : integer_optima) {
            auto it = y.find(var);
            if (it != y.end() && cmp(it->second, lo) == 0)
                continue;
            report.holds = false;
            RationalPoint pattern;
            pattern[var] = lo;
            report.witness = PersistencyWitness{
                maximize(p, c).witness, pattern,
                "coordinate is fixed across all LP optima but differs in a maximal integer "
                "solution"};
            return report;
        }
    }
    return report;
}

PersistencyReport check_weak_persistency(const Graph& g, const RationalPoint& c,
                                         const HPolytope& p, std::uint64_t budget)
{
    StableSetList optima = max_weight_stable_sets(g, c);
    return weak_persistency_core(p, c, stable_set_indicators(g, optima), budget);
}

PersistencyReport check_strong_persistency(const Graph& g, const RationalPoint& c,
                                           const HPolytope& p)
{
    StableSetList optima = max_weight_stable_sets(g, c);
    return strong_persistency_core(p, c, stable_set_indicators(g, optima));
}

RationalPoint fixed_coordinates(const HPolytope& p, const RationalPoint& c)
{
    HPolytope face = optimal_face(p, c);
    RationalPoint out;
    for (const auto& var : p.vars()) {
        auto [lo, hi] = coordinate_bounds(face, var);
        if (cmp(lo, hi) == 0 && (lo == 0 || lo == 1))
            out[var] = lo;
    }
    return out;
}

HPolytope vertex_cover_transform(const HPolytope& p)
{
    HPolytope out(p.vars());
    for (const auto& row : p.rows()) {
        Row r;
        r.coeffs.resize(row.coeffs.size());
        Rational shift(0);
        for (std::size_t j = 0; j < row.coeffs.size(); ++j) {
            r.coeffs[j] = -row.coeffs[j];
            shift += row.coeffs[j];
        }
        r.rhs = row.rhs - shift;
        out.add_row(std::move(r));
    }
    return out;
}

} // namespace persist
