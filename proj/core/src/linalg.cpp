#include "mfdr/linalg.hpp"

#include "mfdr/errors.hpp"

namespace mfdr {

std::optional<SolveResult> solve_linear(RatMatrix a, std::vector<Rational> b)
{
    size_t rows = a.size();
    if (b.size() != rows)
        throw DomainError("solve_linear: shape mismatch");
    size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = 1 / a[r][c];
        for (size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        b[r] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (size_t j = c; j < cols; ++j)
                if (a[r][j] != 0)
                    a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    SolveResult out;
    out.rank = static_cast<int>(r);
    out.x.assign(cols, Rational(0));
    for (size_t i = 0; i < r; ++i)
        out.x[pivot_cols[i]] = b[i];
    return out;
}

std::optional<RatMatrix> invert_matrix(const RatMatrix& a)
{
    size_t n = a.size();
    RatMatrix m(n, std::vector<Rational>(2 * n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw DomainError("invert_matrix: matrix is not square");
        for (size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(m[p], m[c]);
        Rational inv = 1 / m[c][c];
        for (auto& x : m[c])
            x *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0)
                continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < 2 * n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    RatMatrix inv(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

} // namespace mfdr
