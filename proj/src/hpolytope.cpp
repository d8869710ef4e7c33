#include "persist/hpolytope.hpp"

#include "persist/errors.hpp"

#include <algorithm>

namespace persist {

std::vector<std::string> Inequality::support() const
{
    std::vector<std::string> out;
    for (const auto& [name, coeff] : coeffs)
        if (sign(coeff) != 0)
            out.push_back(name);
    return out;
}

Rational Inequality::eval(const RationalPoint& x) const
{
    Rational sum(0);
    for (const auto& [name, coeff] : coeffs) {
        auto it = x.find(name);
        if (it == x.end())
            throw UnknownNode("inequality refers to missing coordinate '" + name + "'");
        sum += coeff * it->second;
    }
    return sum;
}

Inequality Inequality::canonical() const
{
    Inequality out;
    out.rhs = rhs;
    for (const auto& [name, coeff] : coeffs)
        if (sign(coeff) != 0)
            out.coeffs[name] = coeff;
    // common positive scale making everything a coprime integer vector
    mpz_class den_lcm(1);
    for (const auto& [name, coeff] : out.coeffs)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), out.rhs.get_den().get_mpz_t());
    mpz_class num_gcd(0);
    for (const auto& [name, coeff] : out.coeffs) {
        mpz_class scaled = coeff.get_num() * (den_lcm / coeff.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    {
        mpz_class scaled = out.rhs.get_num() * (den_lcm / out.rhs.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    if (num_gcd == 0)
        num_gcd = 1;
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    for (auto& [name, coeff] : out.coeffs)
        coeff *= scale;
    out.rhs *= scale;
    return out;
}

bool Inequality::operator<(const Inequality& other) const
{
    // bounds before edges before larger-support rows, then lexicographic
    if (coeffs.size() != other.coeffs.size())
        return coeffs.size() < other.coeffs.size();
    auto a = coeffs.begin();
    auto b = other.coeffs.begin();
    for (; a != coeffs.end() && b != other.coeffs.end(); ++a, ++b) {
        if (a->first != b->first)
            return a->first < b->first;
        int c = cmp(a->second, b->second);
        if (c != 0)
            return c < 0;
    }
    return cmp(rhs, other.rhs) < 0;
}

HPolytope::HPolytope(std::vector<std::string> vars) : vars_(std::move(vars))
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (!index_.emplace(vars_[i], i).second)
            throw NameCollision("duplicate variable '" + vars_[i] + "'");
    }
}

std::size_t HPolytope::var_index(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownNode("unknown variable '" + name + "'");
    return it->second;
}

bool HPolytope::has_var(const std::string& name) const
{
    return index_.count(name) != 0;
}

void HPolytope::add_row(Row row)
{
    if (row.coeffs.size() != vars_.size())
        throw Error("row width does not match variable count");
    rows_.push_back(std::move(row));
}

void HPolytope::add_row(const Inequality& ineq)
{
    rows_.push_back(inequality_as_row(ineq));
}

void HPolytope::add_equality(const Inequality& ineq)
{
    Row le = inequality_as_row(ineq);
    Row ge = le;
    for (auto& c : ge.coeffs)
        c = -c;
    ge.rhs = -le.rhs;
    rows_.push_back(std::move(le));
    rows_.push_back(std::move(ge));
}

Inequality HPolytope::row_as_inequality(std::size_t i) const
{
    Inequality out;
    out.rhs = rows_[i].rhs;
    for (std::size_t j = 0; j < vars_.size(); ++j)
        if (sign(rows_[i].coeffs[j]) != 0)
            out.coeffs[vars_[j]] = rows_[i].coeffs[j];
    return out;
}

Row HPolytope::inequality_as_row(const Inequality& ineq) const
{
    Row row;
    row.coeffs.assign(vars_.size(), Rational(0));
    row.rhs = ineq.rhs;
    for (const auto& [name, coeff] : ineq.coeffs)
        row.coeffs[var_index(name)] = coeff;
    return row;
}

std::vector<Rational> HPolytope::dense_point(const RationalPoint& x) const
{
    std::vector<Rational> out(vars_.size(), Rational(0));
    for (const auto& [name, value] : x)
        out[var_index(name)] = value;
    return out;
}

RationalPoint HPolytope::named_point(const std::vector<Rational>& x) const
{
    if (x.size() != vars_.size())
        throw Error("point width does not match variable count");
    RationalPoint out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        out[vars_[i]] = x[i];
    return out;
}

bool HPolytope::contains_dense(const std::vector<Rational>& x) const
{
    for (const auto& row : rows_) {
        Rational sum(0);
        for (std::size_t j = 0; j < x.size(); ++j)
            sum += row.coeffs[j] * x[j];
        if (cmp(sum, row.rhs) > 0)
            return false;
    }
    return true;
}

bool HPolytope::contains(const RationalPoint& x) const
{
    return contains_dense(dense_point(x));
}

HPolytope unit_box(std::vector<std::string> vars)
{
    HPolytope p(std::move(vars));
    std::size_t n = p.vars().size();
    for (std::size_t i = 0; i < n; ++i) {
        Row low;
        low.coeffs.assign(n, Rational(0));
        low.coeffs[i] = Rational(-1);
        low.rhs = Rational(0);
        p.add_row(std::move(low));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Row high;
        high.coeffs.assign(n, Rational(0));
        high.coeffs[i] = Rational(1);
        high.rhs = Rational(1);
        p.add_row(std::move(high));
    }
    return p;
}

} // namespace persist
