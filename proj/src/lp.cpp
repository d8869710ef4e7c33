#include "persist/lp.hpp"

#include "persist/errors.hpp"
#include "persist/matrix.hpp"

#include <algorithm>
#include <cassert>

namespace persist {

namespace {

// Two-phase primal simplex on the slack form of max c.x, A x <= b with free
// x. Free variables are split x = u - w; Bland's rule keeps every pivot
// deterministic and rules out cycling. All arithmetic exact.
class Simplex {
public:
    Simplex(const HPolytope& p)
        : n_(p.vars().size())
    {
        m_ = p.rows().size();
        cols_ = 2 * n_ + m_;
        tableau_.reserve(m_);
        basis_.reserve(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const Row& row = p.rows()[i];
            std::vector<Rational> t(cols_, Rational(0));
            bool neg = sign(row.rhs) < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                const Rational& a = row.coeffs[j];
                if (sign(a) == 0)
                    continue;
                t[j] = neg ? -a : a;
                t[n_ + j] = neg ? a : -a;
            }
            t[2 * n_ + i] = neg ? Rational(-1) : Rational(1);
            rhs_.push_back(neg ? Rational(-row.rhs) : row.rhs);
            if (neg)
                artificial_rows_.push_back(i);
            tableau_.push_back(std::move(t));
            basis_.push_back(2 * n_ + i); // placeholder, fixed below
        }
        // append artificial columns for the negated rows
        art_begin_ = cols_;
        cols_ += artificial_rows_.size();
        for (auto& t : tableau_)
            t.resize(cols_, Rational(0));
        for (std::size_t k = 0; k < artificial_rows_.size(); ++k) {
            std::size_t i = artificial_rows_[k];
            tableau_[i][art_begin_ + k] = Rational(1);
            basis_[i] = art_begin_ + k;
        }
    }

    RawLpStatus run(const std::vector<Rational>& objective_x)
    {
        if (!artificial_rows_.empty()) {
            std::vector<Rational> phase1(cols_, Rational(0));
            for (std::size_t j = art_begin_; j < cols_; ++j)
                phase1[j] = Rational(-1);
            optimize(phase1, cols_); // the phase-1 objective is always bounded
            if (sign(objval_) != 0)
                return RawLpStatus::Infeasible;
            drive_out_artificials();
        }
        std::vector<Rational> phase2(cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) {
            phase2[j] = objective_x[j];
            phase2[n_ + j] = -objective_x[j];
        }
        return optimize(phase2, art_begin_) ? RawLpStatus::Optimal : RawLpStatus::Unbounded;
    }

    Rational value() const { return objval_; }

    std::vector<Rational> point() const
    {
        std::vector<Rational> val(cols_, Rational(0));
        for (std::size_t i = 0; i < tableau_.size(); ++i)
            val[basis_[i]] = rhs_[i];
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j)
            x[j] = val[j] - val[n_ + j];
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t e)
    {
        Rational inv = tableau_[r][e];
        if (inv != 1) {
            for (auto& v : tableau_[r])
                if (sign(v) != 0)
                    v /= inv;
            tableau_[r][e] = Rational(1);
            rhs_[r] /= inv;
        }
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            if (i == r)
                continue;
            Rational factor = tableau_[i][e];
            if (sign(factor) == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign(tableau_[r][j]) != 0)
                    tableau_[i][j] -= factor * tableau_[r][j];
            rhs_[i] -= factor * rhs_[r];
        }
        Rational factor = reduced_[e];
        if (sign(factor) != 0) {
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign(tableau_[r][j]) != 0)
                    reduced_[j] -= factor * tableau_[r][j];
            objval_ += factor * rhs_[r];
        }
        basis_[r] = e;
    }

    // Columns >= allowed_end are barred from entering (artificials in phase 2).
    // Returns false when the objective is unbounded over the feasible set.
    bool optimize(const std::vector<Rational>& objective, std::size_t allowed_end)
    {
        reduced_ = objective;
        objval_ = Rational(0);
        for (std::size_t i = 0; i < tableau_.size(); ++i) {
            Rational c = reduced_[basis_[i]];
            if (sign(c) == 0)
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (sign(tableau_[i][j]) != 0)
                    reduced_[j] -= c * tableau_[i][j];
            objval_ += c * rhs_[i];
        }
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < allowed_end; ++j) {
                if (sign(reduced_[j]) > 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_)
                return true;
            std::size_t leave = tableau_.size();
            Rational best;
            for (std::size_t i = 0; i < tableau_.size(); ++i) {
                if (sign(tableau_[i][enter]) <= 0)
                    continue;
                Rational ratio = rhs_[i] / tableau_[i][enter];
                if (leave == tableau_.size() || cmp(ratio, best) < 0 ||
                    (cmp(ratio, best) == 0 && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tableau_.size())
                return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials()
    {
        for (std::size_t i = 0; i < tableau_.size();) {
            if (basis_[i] < art_begin_) {
                ++i;
                continue;
            }
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < art_begin_; ++j) {
                if (sign(tableau_[i][j]) != 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols_) {
                // redundant original row
                tableau_.erase(tableau_.begin() + static_cast<long>(i));
                rhs_.erase(rhs_.begin() + static_cast<long>(i));
                basis_.erase(basis_.begin() + static_cast<long>(i));
                continue;
            }
            pivot(i, enter);
            ++i;
        }
    }

private:
    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t cols_ = 0;
    std::size_t art_begin_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> reduced_;
    Rational objval_;
    std::vector<std::size_t> artificial_rows_;
};

} // namespace

DenseLpResult solve_raw(const HPolytope& p, const std::vector<Rational>& objective)
{
    if (objective.size() != p.vars().size())
        throw Error("objective width does not match variable count");
    Simplex s(p);
    DenseLpResult out;
    out.status = s.run(objective);
    if (out.status != RawLpStatus::Optimal)
        return out;
    out.value = s.value();
    out.point = s.point();
    return out;
}

bool is_feasible(const HPolytope& p)
{
    std::vector<Rational> zero(p.vars().size(), Rational(0));
    return solve_raw(p, zero).status != RawLpStatus::Infeasible;
}

static HPolytope with_equality(const HPolytope& p, const std::vector<Rational>& normal,
                               const Rational& rhs)
{
    HPolytope out = p;
    Row le{normal, rhs};
    Row ge{normal, -rhs};
    for (auto& c : ge.coeffs)
        c = -c;
    out.add_row(std::move(le));
    out.add_row(std::move(ge));
    return out;
}

HPolytope optimal_face(const HPolytope& p, const RationalPoint& objective)
{
    std::vector<Rational> c = p.dense_point(objective);
    DenseLpResult r = solve_raw(p, c);
    if (r.status == RawLpStatus::Unbounded)
        throw UnboundedSystem("optimal_face over an unbounded direction");
    if (r.status != RawLpStatus::Optimal)
        throw InfeasibleSystem("optimal_face of an empty polytope");
    return with_equality(p, c, r.value);
}

LpResult maximize(const HPolytope& p, const RationalPoint& objective)
{
    std::vector<Rational> c = p.dense_point(objective);
    DenseLpResult r = solve_raw(p, c);
    LpResult out;
    if (r.status == RawLpStatus::Unbounded)
        throw UnboundedSystem("maximize over an unbounded direction");
    if (r.status != RawLpStatus::Optimal) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    // refine to the lexicographically smallest point of the optimal face;
    // that point is a vertex of p attaining the optimum
    HPolytope face = with_equality(p, c, r.value);
    std::vector<Rational> witness(p.vars().size(), Rational(0));
    for (std::size_t j = 0; j < p.vars().size(); ++j) {
        std::vector<Rational> obj(p.vars().size(), Rational(0));
        obj[j] = Rational(-1);
        DenseLpResult step = solve_raw(face, obj);
        if (step.status != RawLpStatus::Optimal)
            throw UnboundedSystem("optimal face is unbounded");
        witness[j] = -step.value;
        std::vector<Rational> unit(p.vars().size(), Rational(0));
        unit[j] = Rational(1);
        face = with_equality(face, unit, witness[j]);
    }
    out.status = LpStatus::Optimal;
    out.value = r.value;
    out.witness = p.named_point(witness);
    return out;
}

std::pair<Rational, Rational> coordinate_bounds(const HPolytope& p, const std::string& var)
{
    std::size_t j = p.var_index(var);
    std::vector<Rational> obj(p.vars().size(), Rational(0));
    obj[j] = Rational(-1);
    DenseLpResult lo = solve_raw(p, obj);
    if (lo.status == RawLpStatus::Infeasible)
        throw InfeasibleSystem("coordinate_bounds of an empty polytope");
    obj[j] = Rational(1);
    DenseLpResult hi = solve_raw(p, obj);
    if (lo.status != RawLpStatus::Optimal || hi.status != RawLpStatus::Optimal)
        throw UnboundedSystem("coordinate_bounds over an unbounded coordinate");
    return {-lo.value, hi.value};
}

namespace detail {

std::optional<std::vector<bool>> implicit_equalities(const HPolytope& p)
{
    if (!is_feasible(p))
        return std::nullopt;
    std::vector<bool> eq(p.rows().size(), false);
    for (std::size_t i = 0; i < p.rows().size(); ++i) {
        // row a.x <= b holds with equality everywhere iff min a.x = b
        std::vector<Rational> obj = p.rows()[i].coeffs;
        for (auto& c : obj)
            c = -c;
        DenseLpResult r = solve_raw(p, obj);
        if (r.status == RawLpStatus::Optimal && cmp(-r.value, p.rows()[i].rhs) == 0)
            eq[i] = true;
    }
    return eq;
}

} // namespace detail

int affine_dimension(const HPolytope& p)
{
    auto eq = detail::implicit_equalities(p);
    if (!eq)
        return -1;
    RatMatrix normals;
    for (std::size_t i = 0; i < p.rows().size(); ++i)
        if ((*eq)[i])
            normals.push_back(p.rows()[i].coeffs);
    return static_cast<int>(p.vars().size()) - static_cast<int>(rank(std::move(normals)));
}

HPolytope remove_redundancies(const HPolytope& p)
{
    auto eq = detail::implicit_equalities(p);
    if (!eq)
        throw InfeasibleSystem("remove_redundancies of an empty polytope");

    // canonical equation system for the affine hull
    RatMatrix eq_rows;
    for (std::size_t i = 0; i < p.rows().size(); ++i) {
        if (!(*eq)[i]) {
            continue;
        }
        RatRow r = p.rows()[i].coeffs;
        r.push_back(p.rows()[i].rhs);
        eq_rows.push_back(std::move(r));
    }
    Rref hull = rref(std::move(eq_rows));

    // reduce every strict inequality modulo the hull equations and drop the
    // ones whose normal vanishes (they are implied by the affine hull)
    std::vector<Inequality> candidates;
    for (std::size_t i = 0; i < p.rows().size(); ++i) {
        if ((*eq)[i])
            continue;
        RatRow r = p.rows()[i].coeffs;
        r.push_back(p.rows()[i].rhs);
        r = reduce_against(hull, std::move(r));
        Inequality ineq;
        ineq.rhs = r.back();
        bool nonzero = false;
        for (std::size_t j = 0; j + 1 < r.size(); ++j) {
            if (sign(r[j]) != 0) {
                ineq.coeffs[p.vars()[j]] = r[j];
                nonzero = true;
            }
        }
        if (!nonzero)
            continue;
        candidates.push_back(ineq.canonical());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // sequential exact redundancy test against the surviving system
    std::vector<bool> keep(candidates.size(), true);
    auto rebuild = [&](std::size_t skip) {
        HPolytope sys(p.vars());
        for (std::size_t i = 0; i < hull.rows.size(); ++i) {
            Row le;
            le.coeffs.assign(hull.rows[i].begin(), hull.rows[i].end() - 1);
            le.rhs = hull.rows[i].back();
            Row ge = le;
            for (auto& c : ge.coeffs)
                c = -c;
            ge.rhs = -le.rhs;
            sys.add_row(std::move(le));
            sys.add_row(std::move(ge));
        }
        for (std::size_t k = 0; k < candidates.size(); ++k)
            if (keep[k] && k != skip)
                sys.add_row(candidates[k]);
        return sys;
    };
    for (std::size_t k = 0; k < candidates.size(); ++k) {
        HPolytope rest = rebuild(k);
        std::vector<Rational> obj = rest.inequality_as_row(candidates[k]).coeffs;
        DenseLpResult r = solve_raw(rest, obj);
        if (r.status == RawLpStatus::Optimal && cmp(r.value, candidates[k].rhs) <= 0)
            keep[k] = false;
    }

    HPolytope out(p.vars());
    for (std::size_t i = 0; i < hull.rows.size(); ++i) {
        Inequality e;
        e.rhs = hull.rows[i].back();
        for (std::size_t j = 0; j + 1 < hull.rows[i].size(); ++j)
            if (sign(hull.rows[i][j]) != 0)
                e.coeffs[p.vars()[j]] = hull.rows[i][j];
        Inequality c = e.canonical();
        // equations are free to flip sign: make the leading coefficient positive
        if (!c.coeffs.empty() && sign(c.coeffs.begin()->second) < 0) {
            for (auto& [name, v] : c.coeffs)
                v = -v;
            c.rhs = -c.rhs;
        }
        out.add_equality(c);
    }
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (keep[k])
            out.add_row(candidates[k]);
    return out;
}

} // namespace persist
