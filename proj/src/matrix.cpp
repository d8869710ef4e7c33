#include "persist/matrix.hpp"

namespace persist {

Rref rref(RatMatrix rows)
{
    Rref out;
    if (rows.empty())
        return out;
    std::size_t cols = rows[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && sign(rows[pivot][col]) == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[row], rows[pivot]);
        Rational inv = rows[row][col];
        for (auto& v : rows[row])
            v /= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || sign(rows[r][col]) == 0)
                continue;
            Rational factor = rows[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                rows[r][c] -= factor * rows[row][c];
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    out.rows.assign(rows.begin(), rows.begin() + static_cast<long>(row));
    return out;
}

std::size_t rank(RatMatrix rows)
{
    return rref(std::move(rows)).rows.size();
}

std::optional<RatRow> solve_square(const RatMatrix& a, const RatRow& b)
{
    std::size_t n = a.size();
    RatMatrix aug(n, RatRow(n + 1, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    Rref r = rref(std::move(aug));
    if (r.rows.size() != n || r.pivot_cols.size() != n || r.pivot_cols.back() == n)
        return std::nullopt;
    RatRow x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        x[r.pivot_cols[i]] = r.rows[i][n];
    return x;
}

RatRow reduce_against(const Rref& basis, RatRow row)
{
    for (std::size_t i = 0; i < basis.rows.size(); ++i) {
        std::size_t col = basis.pivot_cols[i];
        if (col >= row.size())
            continue;
        if (sign(row[col]) == 0)
            continue;
        Rational factor = row[col];
        for (std::size_t c = 0; c < row.size() && c < basis.rows[i].size(); ++c)
            row[c] -= factor * basis.rows[i][c];
    }
    return row;
}

} // namespace persist
