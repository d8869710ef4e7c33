#pragma once

#include "persist/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace persist {

// One inequality coeffs . x <= rhs, with coefficients aligned to the owning
// polytope's variable order.
struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;

    bool operator==(const Row& other) const = default;
};

// A point keyed by variable name. Witnesses, objectives and certificates all
// use this form; dense vectors are an internal representation.
using RationalPoint = std::map<std::string, Rational>;

// A name-keyed inequality, the external form of a row. Zero coefficients are
// not stored; support() is the key set.
struct Inequality {
    std::map<std::string, Rational> coeffs;
    Rational rhs;

    std::vector<std::string> support() const;
    Rational eval(const RationalPoint& x) const;

    // Scales to coprime integer coefficients. The inequality direction is
    // fixed, so only positive scaling is applied.
    Inequality canonical() const;

    bool operator==(const Inequality& other) const = default;
    bool operator<(const Inequality& other) const;
};

// System of inequalities A x <= b over named variables. Every polytope in the
// library is bounded; construction sites are responsible for including rows
// that make that so (the relaxation builders emit [0,1] boxes).
class HPolytope {
public:
    HPolytope() = default;
    explicit HPolytope(std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t var_index(const std::string& name) const;
    bool has_var(const std::string& name) const;

    void add_row(Row row);
    void add_row(const Inequality& ineq);
    void add_equality(const Inequality& ineq);

    Inequality row_as_inequality(std::size_t i) const;
    Row inequality_as_row(const Inequality& ineq) const;

    std::vector<Rational> dense_point(const RationalPoint& x) const;
    RationalPoint named_point(const std::vector<Rational>& x) const;

    // Exact membership test: no row violated, zero tolerance.
    bool contains(const RationalPoint& x) const;
    bool contains_dense(const std::vector<Rational>& x) const;

private:
    std::vector<std::string> vars_;
    std::map<std::string, std::size_t> index_;
    std::vector<Row> rows_;
};

// [0,1]^V over the given (sorted) variable names: nonnegativity rows first,
// then the upper bounds, both in variable order.
HPolytope unit_box(std::vector<std::string> vars);

} // namespace persist
