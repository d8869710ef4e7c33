#pragma once

#include "persist/hpolytope.hpp"

#include <vector>

namespace persist {

// Exact breakpoint representation of a concave piecewise linear value
// function. The function is defined on [domain_start(), last breakpoint] by
// interpolation; with constant_tail it extends as a constant beyond the last
// breakpoint. Slopes are strictly decreasing between consecutive segments.
class PiecewiseLinearConcave {
public:
    struct Breakpoint {
        Rational arg;
        Rational value;
        bool operator==(const Breakpoint&) const = default;
    };

    PiecewiseLinearConcave() = default;
    PiecewiseLinearConcave(std::vector<Breakpoint> breakpoints, bool constant_tail);

    const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
    bool constant_tail() const { return constant_tail_; }
    Rational domain_start() const { return breakpoints_.front().arg; }
    Rational domain_end() const { return breakpoints_.back().arg; }

    Rational eval(const Rational& arg) const;

    // slope of the i-th segment, between breakpoints i and i+1
    Rational slope(std::size_t i) const;

    // Smallest maximizer together with the maximum value.
    Breakpoint peak() const;

    bool operator==(const PiecewiseLinearConcave&) const = default;

private:
    std::vector<Breakpoint> breakpoints_;
    bool constant_tail_ = false;
};

enum class ParametricMode { Eq, Le };

// Lemma-style value function of one exact parametric LP:
//   Eq: h(beta) = max { c.x : x in p, a.x = beta } on [min a.x, max a.x]
//   Le: h(beta) = max { c.x : x in p, a.x <= beta } on [min a.x, infinity)
// Breakpoints are computed in closed form by chord subdivision, never sampled.
PiecewiseLinearConcave parametric_max(const HPolytope& p, const RationalPoint& objective,
                                      const RationalPoint& direction, ParametricMode mode);

} // namespace persist
