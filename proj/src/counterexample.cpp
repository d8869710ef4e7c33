#include "persist/counterexample.hpp"

#include "persist/catalog.hpp"
#include "persist/errors.hpp"
#include "persist/lp.hpp"
#include "persist/matrix.hpp"

#include <algorithm>

namespace persist {

namespace {

int optimal_face_dimension(const HPolytope& p, const RationalPoint& c)
{
    return affine_dimension(optimal_face(p, c));
}

// Facet normals of a (possibly non-full-dimensional) polytope, canonical
// order: the non-equation rows of its irredundant description.
std::vector<Inequality> facet_rows(const HPolytope& p)
{
    HPolytope reduced = remove_redundancies(p);
    auto eq = detail::implicit_equalities(reduced);
    std::vector<Inequality> out;
    for (std::size_t i = 0; i < reduced.rows().size(); ++i)
        if (!(*eq)[i])
            out.push_back(reduced.row_as_inequality(i).canonical());
    std::sort(out.begin(), out.end());
    return out;
}

RatMatrix equation_normals(const HPolytope& p)
{
    auto eq = detail::implicit_equalities(p);
    RatMatrix out;
    if (!eq)
        return out;
    for (std::size_t i = 0; i < p.rows().size(); ++i)
        if ((*eq)[i])
            out.push_back(p.rows()[i].coeffs);
    return out;
}

} // namespace

RationalPoint refine_objective(const HPolytope& p, const HPolytope& q, const RationalPoint& c)
{
    if (p.vars() != q.vars())
        throw PreconditionViolated("refine_objective needs identical variable sets");
    int dim_q = optimal_face_dimension(q, c);
    int dim_p = optimal_face_dimension(p, c);
    if (dim_q >= dim_p)
        throw PreconditionViolated("refine_objective needs dim(opt(q,c)) < dim(opt(p,c))");

    RationalPoint current = c;
    while (dim_q > 0) {
        HPolytope face_p = optimal_face(p, current);
        HPolytope face_q = optimal_face(q, current);
        Rref hull_q = rref(equation_normals(face_q));

        bool stepped = false;
        for (const Inequality& facet : facet_rows(face_p)) {
            // skip directions orthogonal to the affine hull of opt(q, c):
            // those cannot shrink it
            RatRow normal = p.inequality_as_row(facet).coeffs;
            RatRow reduced = reduce_against(hull_q, normal);
            bool in_rowspace = true;
            for (const auto& v : reduced)
                if (sign(v) != 0)
                    in_rowspace = false;
            if (in_rowspace)
                continue;

            Rational step(1, 2);
            for (int k = 1; k <= 64; ++k, step /= 2) {
                RationalPoint candidate = current;
                for (std::size_t j = 0; j < p.vars().size(); ++j) {
                    if (sign(normal[j]) == 0)
                        continue;
                    candidate[p.vars()[j]] += step * normal[j];
                }
                int dq = optimal_face_dimension(q, candidate);
                int dp = optimal_face_dimension(p, candidate);
                if (dq < dim_q && dq < dp) {
                    current = std::move(candidate);
                    dim_q = dq;
                    stepped = true;
                    break;
                }
            }
            if (stepped)
                break;
        }
        if (!stepped)
            throw VerificationFailed("objective refinement failed to make progress");
    }
    return current;
}

namespace {

RationalPoint lex_min_with_zero_at(const std::vector<RationalPoint>& points,
                                   const std::string& var)
{
    const RationalPoint* best = nullptr;
    for (const auto& x : points) {
        if (cmp(x.at(var), Rational(0)) != 0)
            continue;
        if (!best || x < *best)
            best = &x;
    }
    if (!best)
        throw VerificationFailed("no optimal vertex avoids '" + var + "'");
    return *best;
}

} // namespace

OuterGadget build_outer_gadget(const Formulation& f, const Graph& g,
                               std::optional<Rational> pendant_epsilon)
{
    HPolytope relaxation = build(f, g);
    HPolytope hull = stable_set_polytope(g);
    if (same_polytope(relaxation, hull))
        throw NotSeparable("the relaxation equals the stable set polytope on this graph");

    // first hull facet that the relaxation violates, in canonical row order
    std::optional<Inequality> separating;
    for (const Inequality& row : canonical_inequality_system(hull)) {
        if (!is_valid_inequality(relaxation, row)) {
            separating = row;
            break;
        }
    }
    if (!separating)
        throw VerificationFailed("relaxation differs from the hull but violates no facet");

    RationalPoint objective;
    for (const auto& v : g.nodes())
        objective[v] = Rational(0);
    for (const auto& [name, coeff] : separating->coeffs)
        objective[name] = coeff;
    objective = refine_objective(hull, relaxation, objective);

    RationalPoint xhat = maximize(relaxation, objective).witness;
    std::vector<RationalPoint> hull_optima = enumerate_vertices(optimal_face(hull, objective));
    if (hull_optima.size() < 2)
        throw VerificationFailed("expected at least two maximal stable sets");
    std::string u;
    for (const auto& v : g.nodes()) {
        bool zero = false, one = false;
        for (const auto& x : hull_optima) {
            if (x.at(v) == 0)
                zero = true;
            else if (x.at(v) == 1)
                one = true;
        }
        if (zero && one) {
            u = v;
            break;
        }
    }
    if (u.empty())
        throw VerificationFailed("maximal stable sets do not disagree on any node");

    OuterGadget gadget;
    if (cmp(xhat.at(u), Rational(1, 2)) >= 0) {
        gadget.g_out = g;
        gadget.c_out = objective;
        gadget.v_out = u;
        gadget.xhat = xhat;
        gadget.xbar = lex_min_with_zero_at(hull_optima, u);
    } else {
        // pendant-edge construction: hang a fresh node off u and bias the
        // objective so the relaxation optimum moves onto the pendant
        std::string pendant = u + "'";
        while (g.has_node(pendant))
            pendant += "'";
        Graph extended = g;
        extended.add_node(pendant);
        extended.add_edge(u, pendant);
        HPolytope extended_relaxation = build(f, extended);

        auto attempt = [&](const Rational& step, OuterGadget& out) {
            RationalPoint biased = objective;
            biased[u] += 2 * step;
            biased[pendant] = step;
            if (affine_dimension(optimal_face(extended_relaxation, biased)) != 0)
                return false;
            RationalPoint opt = maximize(extended_relaxation, biased).witness;
            if (cmp(opt.at(pendant), Rational(1, 2)) <= 0)
                return false;
            out.g_out = extended;
            out.c_out = biased;
            out.v_out = pendant;
            out.xhat = opt;
            out.pendant = true;
            out.pendant_epsilon = step;
            return true;
        };

        bool found = false;
        if (pendant_epsilon) {
            if (sign(*pendant_epsilon) <= 0)
                throw PreconditionViolated("pendant step must be positive");
            found = attempt(*pendant_epsilon, gadget);
            if (!found)
                throw VerificationFailed("requested pendant step fails certification");
        } else {
            Rational step(1, 2);
            for (int k = 1; k <= 64 && !found; ++k, step /= 2)
                found = attempt(step, gadget);
            if (!found)
                throw VerificationFailed("no pendant step 1/2^k certified");
        }
        StableSetList optima = max_weight_stable_sets(gadget.g_out, gadget.c_out);
        gadget.xbar = lex_min_with_zero_at(stable_set_indicators(gadget.g_out, optima),
                                           gadget.v_out);
    }

    RationalPoint level;
    for (const auto& v : gadget.g_out.nodes())
        level[v] = Rational(v == gadget.v_out ? 1 : 0);
    gadget.f = parametric_max(build(f, gadget.g_out), gadget.c_out, level, ParametricMode::Eq);
    for (std::size_t i = 0; i + 1 < gadget.f.breakpoints().size(); ++i)
        if (sign(gadget.f.slope(i)) == 0)
            throw VerificationFailed("gadget value function has a flat top");
    if (cmp(gadget.f.peak().arg, gadget.xhat.at(gadget.v_out)) != 0)
        throw VerificationFailed("gadget value function does not peak at the optimum level");
    return gadget;
}

InnerCore find_inner_core(const Formulation& f, const std::vector<Graph>& catalog)
{
    std::optional<Graph> found;
    for (const auto& g : catalog) {
        if (!same_polytope(build(f, g), build(Formulation::edge(), g))) {
            found = g;
            break;
        }
    }
    if (!found)
        throw NoCore("no catalog graph separates the formulation from the edge relaxation");

    InnerCore core;
    core.g_in = *found;
    if (core.g_in.nodes().size() < 3)
        throw VerificationFailed("inner core with fewer than three nodes");
    HPolytope relaxation = build(f, core.g_in);
    HPolytope edge_relaxation = build(Formulation::edge(), core.g_in);

    for (const auto& v : core.g_in.nodes())
        core.g_in_edge.add_node(v);
    for (const auto& [a, b] : core.g_in.edges()) {
        Inequality edge;
        edge.coeffs[a] = Rational(1);
        edge.coeffs[b] = Rational(1);
        edge.rhs = Rational(1);
        if (is_valid_inequality(relaxation, edge))
            core.g_in_edge.add_edge(a, b);
    }

    for (const Inequality& row : facet_rows(relaxation))
        if (!is_valid_inequality(edge_relaxation, row))
            core.system.push_back(row);
    if (core.system.empty())
        throw VerificationFailed("inner system is empty");
    for (const auto& row : core.system) {
        for (const auto& v : core.g_in.nodes()) {
            auto it = row.coeffs.find(v);
            if (it == row.coeffs.end() || cmp(it->second, Rational(1)) < 0 ||
                it->second.get_den() != 1)
                throw VerificationFailed("inner system row without full integer support");
        }
    }
    core.node_one = core.g_in.nodes().front();
    return core;
}

Graph find_outer_base(const Formulation& f, std::size_t catalog_max_nodes)
{
    for (std::size_t n = 1; n <= catalog_max_nodes; ++n) {
        for (const Graph& g : connected_graphs_with(n)) {
            if (!same_polytope(build(f, g), stable_set_polytope(g))) {
                // relabel to letters in canonical node order
                std::vector<std::pair<std::string, std::string>> renames;
                for (std::size_t i = 0; i < g.nodes().size(); ++i)
                    renames.emplace_back(g.nodes()[i], std::string(1, char('A' + i)));
                Graph out;
                NodeMap map;
                for (const auto& [from, to] : renames) {
                    map.insert(from, to);
                    out.add_node(to);
                }
                for (const auto& [a, b] : g.edges())
                    out.add_edge(map.at(a), map.at(b));
                return out;
            }
        }
    }
    throw NotSeparable("no catalog graph separates the formulation from the stable set polytope");
}

std::pair<Graph, std::vector<std::pair<std::string, NodeMap>>>
assemble_gstar(const InnerCore& inner, const OuterGadget& gadget)
{
    if (inner.g_in.nodes().size() < 3)
        throw PreconditionViolated("the inner core must have at least three nodes");
    Graph star = inner.g_in;
    std::vector<std::pair<std::string, NodeMap>> attachments;
    for (const auto& j : inner.g_in.nodes()) {
        if (j == inner.node_one)
            continue;
        auto [copy, copy_map] = disjoint_copy(gadget.g_out, j);
        auto [merged, merge_map] = one_sum_graphs(star, j, copy, copy_map.at(gadget.v_out));
        star = std::move(merged);
        NodeMap combined;
        for (const auto& v : gadget.g_out.nodes())
            combined.insert(v, merge_map.at(copy_map.at(v)));
        attachments.emplace_back(j, std::move(combined));
    }
    return {star, attachments};
}

Rational eval_f(const OuterGadget& gadget, const Rational& y)
{
    return gadget.f.eval(y);
}

GComposite g_composite(const Formulation& f, const InnerCore& inner, const OuterGadget& gadget,
                       const std::vector<std::pair<std::string, NodeMap>>& attachments)
{
    GComposite out;
    out.polytope = build(Formulation::edge(), inner.g_in_edge);
    const Inequality& first_row = inner.system.front();
    for (const auto& [j, map] : attachments) {
        Rational aj = first_row.coeffs.at(j);
        Graph copy;
        for (const auto& v : gadget.g_out.nodes())
            copy.add_node(map.at(v));
        for (const auto& [a, b] : gadget.g_out.edges())
            copy.add_edge(map.at(a), map.at(b));
        out.polytope = one_sum_polytopes(out.polytope, j, build(f, copy), j);
        for (const auto& v : gadget.g_out.nodes())
            out.objective[map.at(v)] = aj * gadget.c_out.at(v);
    }
    for (const auto& v : inner.g_in.nodes())
        out.direction[v] = first_row.coeffs.at(v);
    return out;
}

PiecewiseLinearConcave g_function(const Formulation& f, const InnerCore& inner,
                                  const OuterGadget& gadget,
                                  const std::vector<std::pair<std::string, NodeMap>>& attachments)
{
    GComposite composite = g_composite(f, inner, gadget, attachments);
    return parametric_max(composite.polytope, composite.objective, composite.direction,
                          ParametricMode::Le);
}

EpsilonData compute_epsilon(const InnerCore& inner, const PiecewiseLinearConcave& g_function,
                            const HPolytope& g_star_polytope, const std::string& node_one,
                            std::optional<Rational> epsilon_override, std::uint64_t budget)
{
    EpsilonData out;
    bool have_gamma = false;
    for (const auto& vertex : enumerate_vertices(g_star_polytope, budget)) {
        const Rational& x1 = vertex.at(node_one);
        if (sign(x1) <= 0)
            continue;
        if (!have_gamma || cmp(x1, out.gamma) < 0) {
            out.gamma = x1;
            have_gamma = true;
        }
    }
    if (!have_gamma)
        throw VerificationFailed("no relaxation vertex is positive at the unattached node");

    bool have_lambda = false;
    for (const auto& row : inner.system) {
        Rational total(0);
        for (const auto& [name, coeff] : row.coeffs)
            total += coeff;
        Rational candidate = out.gamma / total;
        if (!have_lambda || cmp(candidate, out.lambda) < 0) {
            out.lambda = candidate;
            have_lambda = true;
        }
    }

    const Inequality& first_row = inner.system.front();
    const Rational& b1 = first_row.rhs;
    const Rational& a1 = first_row.coeffs.at(node_one);
    out.epsilon_bound = out.lambda * (g_function.eval(b1) - g_function.eval(b1 - a1 * out.gamma));
    if (sign(out.epsilon_bound) <= 0)
        throw VerificationFailed("the computed objective bound is not positive");
    if (epsilon_override) {
        if (sign(*epsilon_override) <= 0)
            throw PreconditionViolated("the objective weight at the unattached node must be "
                                       "positive");
        out.epsilon = *epsilon_override;
    } else {
        out.epsilon = out.epsilon_bound / 2;
    }
    out.within_bound = cmp(out.epsilon, out.epsilon_bound) < 0;
    return out;
}

CounterexampleBundle build_counterexample(const Formulation& f, const PipelineOptions& options)
{
    CounterexampleBundle bundle;
    bundle.formulation = f;
    bundle.inner = find_inner_core(f, connected_graph_catalog(options.catalog_max_nodes));
    bundle.gadget =
        build_outer_gadget(f, find_outer_base(f, options.catalog_max_nodes), options.pendant_epsilon);
    std::tie(bundle.g_star, bundle.attachments) = assemble_gstar(bundle.inner, bundle.gadget);
    bundle.g_function = g_function(f, bundle.inner, bundle.gadget, bundle.attachments);

    // the constant tail of g must not start before b_1
    const Rational& b1 = bundle.inner.system.front().rhs;
    if (cmp(bundle.g_function.peak().arg, b1) < 0)
        throw VerificationFailed("the composite value function flattens before b_1");

    HPolytope star_polytope = build(f, bundle.g_star);
    EpsilonData eps = compute_epsilon(bundle.inner, bundle.g_function, star_polytope,
                                      bundle.inner.node_one, options.epsilon,
                                      options.vertex_budget);
    bundle.gamma = eps.gamma;
    bundle.lambda = eps.lambda;
    bundle.epsilon_bound = eps.epsilon_bound;
    bundle.epsilon = eps.epsilon;
    bundle.epsilon_within_bound = eps.within_bound;

    const Inequality& first_row = bundle.inner.system.front();
    bundle.c_star[bundle.inner.node_one] = bundle.epsilon;
    for (const auto& [j, map] : bundle.attachments) {
        Rational aj = first_row.coeffs.at(j);
        for (const auto& v : bundle.gadget.g_out.nodes())
            bundle.c_star[map.at(v)] = aj * bundle.gadget.c_out.at(v);
    }
    return bundle;
}

Certificate verify_counterexample(const CounterexampleBundle& bundle, const Formulation& f,
                                  std::uint64_t budget)
{
    Certificate cert;
    HPolytope relaxation = build(f, bundle.g_star);

    LpResult lp = maximize(relaxation, bundle.c_star);
    if (lp.status != LpStatus::Optimal)
        throw VerificationFailed("relaxation is empty");
    cert.lp_value = lp.value;
    cert.lp_point = lp.witness;

    HPolytope face = optimal_face(relaxation, bundle.c_star);
    cert.node_one_bounds = coordinate_bounds(face, bundle.inner.node_one);
    if (cmp(cert.node_one_bounds.first, Rational(0)) != 0 ||
        cmp(cert.node_one_bounds.second, Rational(0)) != 0)
        throw VerificationFailed("the LP optimal face does not fix the unattached node to zero");

    try {
        cert.lp_face_vertices = enumerate_vertices(face, budget);
    } catch (const DimensionTooLarge&) {
        cert.face_vertices_within_budget = false;
    }

    cert.ip_optima = max_weight_stable_sets(bundle.g_star, bundle.c_star);
    cert.node_one_in_all_optima = true;
    for (const auto& s : cert.ip_optima.sets) {
        if (!std::binary_search(s.begin(), s.end(), bundle.inner.node_one)) {
            cert.node_one_in_all_optima = false;
            break;
        }
    }
    if (!cert.node_one_in_all_optima)
        throw VerificationFailed("some maximal stable set avoids the unattached node");

    cert.weak = check_weak_persistency(bundle.g_star, bundle.c_star, relaxation, budget);
    cert.strong = check_strong_persistency(bundle.g_star, bundle.c_star, relaxation);
    if (cert.weak.holds)
        throw VerificationFailed("weak persistency unexpectedly holds");
    if (cert.strong.holds)
        throw VerificationFailed("strong persistency unexpectedly holds");
    return cert;
}

} // namespace persist
