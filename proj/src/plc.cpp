#include "persist/plc.hpp"

#include "persist/errors.hpp"
#include "persist/lp.hpp"

#include <cassert>

namespace persist {

PiecewiseLinearConcave::PiecewiseLinearConcave(std::vector<Breakpoint> breakpoints,
                                               bool constant_tail)
    : breakpoints_(std::move(breakpoints)), constant_tail_(constant_tail)
{
    if (breakpoints_.empty())
        throw Error("piecewise linear function needs at least one breakpoint");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (cmp(breakpoints_[i].arg, breakpoints_[i + 1].arg) >= 0)
            throw Error("breakpoint arguments must be strictly increasing");
    for (std::size_t i = 0; i + 2 < breakpoints_.size(); ++i)
        if (cmp(slope(i), slope(i + 1)) <= 0)
            throw Error("breakpoint slopes must be strictly decreasing");
    if (constant_tail_ && breakpoints_.size() >= 2 && sign(slope(breakpoints_.size() - 2)) <= 0)
        throw Error("constant tail must follow a strictly increasing segment");
}

Rational PiecewiseLinearConcave::slope(std::size_t i) const
{
    const Breakpoint& a = breakpoints_[i];
    const Breakpoint& b = breakpoints_[i + 1];
    return (b.value - a.value) / (b.arg - a.arg);
}

Rational PiecewiseLinearConcave::eval(const Rational& arg) const
{
    if (cmp(arg, domain_start()) < 0)
        throw Error("argument below the function domain");
    if (cmp(arg, domain_end()) > 0) {
        if (constant_tail_)
            return breakpoints_.back().value;
        throw Error("argument beyond the function domain");
    }
    std::size_t i = 0;
    while (i + 1 < breakpoints_.size() && cmp(breakpoints_[i + 1].arg, arg) < 0)
        ++i;
    if (i + 1 == breakpoints_.size())
        return breakpoints_.back().value;
    const Breakpoint& a = breakpoints_[i];
    return a.value + slope(i) * (arg - a.arg);
}

PiecewiseLinearConcave::Breakpoint PiecewiseLinearConcave::peak() const
{
    std::size_t i = 0;
    while (i + 1 < breakpoints_.size() && sign(slope(i)) > 0)
        ++i;
    return breakpoints_[i];
}

namespace {

struct FacePoint {
    Rational arg;
    Rational value;
};

Rational face_value(const HPolytope& p, const std::vector<Rational>& c,
                    const std::vector<Rational>& a, const Rational& beta)
{
    HPolytope face = p;
    Row le{a, beta};
    Row ge{a, -beta};
    for (auto& v : ge.coeffs)
        v = -v;
    face.add_row(std::move(le));
    face.add_row(std::move(ge));
    DenseLpResult r = solve_raw(face, c);
    assert(r.status == RawLpStatus::Optimal);
    return r.value;
}

// Chord subdivision: discovers every breakpoint of the upper boundary of the
// 2D shadow {(a.x, c.x) : x in p} between two known graph points.
void subdivide(const HPolytope& p, const std::vector<Rational>& c,
               const std::vector<Rational>& a, const FacePoint& left, const FacePoint& right,
               std::vector<FacePoint>& out)
{
    Rational s = (right.value - left.value) / (right.arg - left.arg);
    std::vector<Rational> tilted(c.size());
    for (std::size_t j = 0; j < c.size(); ++j)
        tilted[j] = c[j] - s * a[j];
    DenseLpResult r = solve_raw(p, tilted);
    assert(r.status == RawLpStatus::Optimal);
    if (cmp(r.value, left.value - s * left.arg) == 0)
        return; // the chord itself supports the shadow: no breakpoint inside
    FacePoint mid;
    mid.arg = Rational(0);
    mid.value = Rational(0);
    for (std::size_t j = 0; j < c.size(); ++j) {
        mid.arg += a[j] * r.point[j];
        mid.value += c[j] * r.point[j];
    }
    assert(cmp(left.arg, mid.arg) < 0 && cmp(mid.arg, right.arg) < 0);
    subdivide(p, c, a, left, mid, out);
    out.push_back(mid);
    subdivide(p, c, a, mid, right, out);
}

} // namespace

PiecewiseLinearConcave parametric_max(const HPolytope& p, const RationalPoint& objective,
                                      const RationalPoint& direction, ParametricMode mode)
{
    std::vector<Rational> c = p.dense_point(objective);
    std::vector<Rational> a = p.dense_point(direction);

    std::vector<Rational> neg_a(a.size());
    for (std::size_t j = 0; j < a.size(); ++j)
        neg_a[j] = -a[j];
    DenseLpResult lo = solve_raw(p, neg_a);
    if (lo.status != RawLpStatus::Optimal)
        throw InfeasibleSystem("parametric_max over an empty polytope");
    DenseLpResult hi = solve_raw(p, a);
    Rational ell = -lo.value;
    Rational top = hi.value;

    std::vector<FacePoint> points;
    points.push_back({ell, face_value(p, c, a, ell)});
    if (cmp(ell, top) < 0) {
        FacePoint right{top, face_value(p, c, a, top)};
        std::vector<FacePoint> inner;
        subdivide(p, c, a, points.front(), right, inner);
        for (auto& q : inner)
            points.push_back(std::move(q));
        points.push_back(std::move(right));
    }

    // merge collinear triples so that slopes decrease strictly
    std::vector<PiecewiseLinearConcave::Breakpoint> merged;
    for (const auto& q : points) {
        PiecewiseLinearConcave::Breakpoint b{q.arg, q.value};
        while (merged.size() >= 2) {
            const auto& p1 = merged[merged.size() - 2];
            const auto& p2 = merged[merged.size() - 1];
            Rational s1 = (p2.value - p1.value) / (p2.arg - p1.arg);
            Rational s2 = (b.value - p2.value) / (b.arg - p2.arg);
            if (cmp(s1, s2) == 0)
                merged.pop_back();
            else
                break;
        }
        merged.push_back(std::move(b));
    }

    if (mode == ParametricMode::Eq)
        return PiecewiseLinearConcave(std::move(merged), false);

    // Le mode: cut at the smallest maximizer and extend with a constant tail
    std::vector<PiecewiseLinearConcave::Breakpoint> head;
    head.push_back(merged.front());
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        Rational s = (merged[i + 1].value - merged[i].value) / (merged[i + 1].arg - merged[i].arg);
        if (sign(s) <= 0)
            break;
        head.push_back(merged[i + 1]);
    }
    return PiecewiseLinearConcave(std::move(head), true);
}

} // namespace persist
