#include "persist/vertices.hpp"

#include "persist/errors.hpp"
#include "persist/lp.hpp"

#include <algorithm>
#include <map>

namespace persist {

namespace {

struct Generator {
    std::vector<Rational> coords;
    std::vector<std::uint64_t> zero; // bit i: processed row i is tight
};

bool subset_of(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & ~b[i]) != 0)
            return false;
    return true;
}

struct LexLess {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const
    {
        return lex_less(a, b);
    }
};

class DoubleDescription {
public:
    DoubleDescription(const HPolytope& p, std::uint64_t budget)
        : p_(p), budget_(budget)
    {
    }

    std::vector<std::vector<Rational>> run()
    {
        if (!prepare())
            return {};
        for (const Row& row : p_.rows())
            insert(row);
        std::vector<std::vector<Rational>> out;
        out.reserve(generators_.size());
        for (auto& g : generators_)
            out.push_back(std::move(g.coords));
        std::sort(out.begin(), out.end(), LexLess{});
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    // Builds a bounding simplex around p and seeds the generator list with
    // its vertices. Returns false when p is empty.
    bool prepare()
    {
        std::size_t n = p_.vars().size();
        std::vector<Rational> lo(n), hi(n);
        if (!bounding_box(lo, hi))
            return false;
        std::vector<std::size_t> free_dims;
        for (std::size_t j = 0; j < n; ++j)
            if (cmp(lo[j], hi[j]) < 0)
                free_dims.push_back(j);

        // lower-bound rows per free dim, and one diagonal cap
        for (std::size_t j : free_dims) {
            Row r;
            r.coeffs.assign(n, Rational(0));
            r.coeffs[j] = Rational(-1);
            r.rhs = -lo[j];
            processed_.push_back(std::move(r));
        }
        Row cap;
        cap.coeffs.assign(n, Rational(0));
        cap.rhs = Rational(free_dims.size());
        for (std::size_t j : free_dims) {
            Rational span = hi[j] - lo[j];
            cap.coeffs[j] = Rational(1) / span;
            cap.rhs += lo[j] / span;
        }
        if (!free_dims.empty())
            processed_.push_back(std::move(cap));

        std::vector<std::vector<Rational>> seeds;
        seeds.push_back(lo);
        for (std::size_t j : free_dims) {
            std::vector<Rational> apex = lo;
            apex[j] += Rational(free_dims.size()) * (hi[j] - lo[j]);
            seeds.push_back(std::move(apex));
        }
        for (auto& s : seeds) {
            Generator g;
            g.coords = std::move(s);
            g.zero = evaluate_zero_set(g.coords);
            generators_.push_back(std::move(g));
        }
        return true;
    }

    bool bounding_box(std::vector<Rational>& lo, std::vector<Rational>& hi)
    {
        std::size_t n = p_.vars().size();
        // syntactic bounds from singleton-support rows, LP fallback otherwise
        std::vector<bool> has_lo(n, false), has_hi(n, false);
        for (const Row& row : p_.rows()) {
            std::size_t support = 0, j = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (sign(row.coeffs[k]) != 0) {
                    ++support;
                    j = k;
                }
            }
            if (support != 1)
                continue;
            Rational bound = row.rhs / row.coeffs[j];
            if (sign(row.coeffs[j]) > 0) {
                if (!has_hi[j] || cmp(bound, hi[j]) < 0)
                    hi[j] = bound;
                has_hi[j] = true;
            } else {
                if (!has_lo[j] || cmp(bound, lo[j]) > 0)
                    lo[j] = bound;
                has_lo[j] = true;
            }
        }
        bool need_lp = false;
        for (std::size_t j = 0; j < n; ++j)
            if (!has_lo[j] || !has_hi[j] || cmp(lo[j], hi[j]) > 0)
                need_lp = true;
        if (!need_lp) {
            // the box may be infeasibly loose but never empty; still need a
            // feasibility check for the polytope itself
            return is_feasible(p_);
        }
        if (!is_feasible(p_))
            return false;
        for (std::size_t j = 0; j < n; ++j) {
            auto [l, h] = coordinate_bounds(p_, p_.vars()[j]);
            lo[j] = l;
            hi[j] = h;
        }
        return true;
    }

    std::vector<std::uint64_t> evaluate_zero_set(const std::vector<Rational>& x)
    {
        std::vector<std::uint64_t> z((processed_.size() + 63) / 64, 0);
        for (std::size_t i = 0; i < processed_.size(); ++i) {
            Rational sum(0);
            for (std::size_t j = 0; j < x.size(); ++j)
                if (sign(processed_[i].coeffs[j]) != 0)
                    sum += processed_[i].coeffs[j] * x[j];
            if (cmp(sum, processed_[i].rhs) == 0)
                z[i / 64] |= std::uint64_t(1) << (i % 64);
        }
        charge(processed_.size());
        return z;
    }

    void insert(const Row& row)
    {
        processed_.push_back(row);
        std::size_t words = (processed_.size() + 63) / 64;
        std::size_t bit = processed_.size() - 1;

        std::vector<std::size_t> plus, zero, minus;
        std::vector<Rational> slack(generators_.size());
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            generators_[i].zero.resize(words, 0);
            Rational sum(0);
            for (std::size_t j = 0; j < row.coeffs.size(); ++j)
                if (sign(row.coeffs[j]) != 0)
                    sum += row.coeffs[j] * generators_[i].coords[j];
            slack[i] = row.rhs - sum;
            int s = sign(slack[i]);
            if (s > 0)
                plus.push_back(i);
            else if (s < 0)
                minus.push_back(i);
            else {
                zero.push_back(i);
                generators_[i].zero[bit / 64] |= std::uint64_t(1) << (bit % 64);
            }
        }
        charge(generators_.size());
        if (minus.empty())
            return;

        std::map<std::vector<Rational>, Generator, LexLess> cuts;
        charge(static_cast<std::uint64_t>(plus.size()) * minus.size());
        for (std::size_t u : plus) {
            for (std::size_t w : minus) {
                if (!adjacent(u, w))
                    continue;
                // point on the segment where the new row becomes tight
                Rational t = slack[u] / (slack[u] - slack[w]);
                std::vector<Rational> x(row.coeffs.size());
                for (std::size_t j = 0; j < x.size(); ++j)
                    x[j] = generators_[u].coords[j] +
                           t * (generators_[w].coords[j] - generators_[u].coords[j]);
                if (cuts.count(x))
                    continue;
                Generator g;
                g.coords = x;
                g.zero = evaluate_zero_set(g.coords);
                cuts.emplace(std::move(x), std::move(g));
            }
        }

        std::vector<Generator> next;
        next.reserve(plus.size() + zero.size() + cuts.size());
        for (std::size_t i : plus)
            next.push_back(std::move(generators_[i]));
        for (std::size_t i : zero)
            next.push_back(std::move(generators_[i]));
        for (auto& [coords, g] : cuts)
            next.push_back(std::move(g));
        generators_ = std::move(next);
    }

    // Standard combinatorial adjacency: u,w are adjacent iff no other current
    // generator is tight on all rows common to both.
    bool adjacent(std::size_t u, std::size_t w)
    {
        std::vector<std::uint64_t> common(generators_[u].zero.size());
        for (std::size_t i = 0; i < common.size(); ++i)
            common[i] = generators_[u].zero[i] & generators_[w].zero[i];
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            if (g == u || g == w)
                continue;
            if (subset_of(common, generators_[g].zero))
                return false;
        }
        return true;
    }

    void charge(std::uint64_t units)
    {
        work_ += units;
        if (work_ > budget_)
            throw DimensionTooLarge("vertex enumeration exceeded its work budget");
    }

    const HPolytope& p_;
    std::uint64_t budget_;
    std::uint64_t work_ = 0;
    std::vector<Row> processed_;
    std::vector<Generator> generators_;
};

} // namespace

std::vector<std::vector<Rational>>
enumerate_vertices_dense(const HPolytope& p, std::uint64_t budget)
{
    if (p.vars().empty())
        throw Error("vertex enumeration needs at least one variable");
    DoubleDescription dd(p, budget);
    return dd.run();
}

std::vector<RationalPoint> enumerate_vertices(const HPolytope& p, std::uint64_t budget)
{
    std::vector<RationalPoint> out;
    for (const auto& v : enumerate_vertices_dense(p, budget))
        out.push_back(p.named_point(v));
    return out;
}

} // namespace persist
