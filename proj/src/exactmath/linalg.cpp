#include "riderlab/linalg.hpp"

#include <stdexcept>

namespace riderlab {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::unique: return "unique";
        case SolveStatus::singular: return "singular";
        case SolveStatus::inconsistent: return "inconsistent";
    }
    return "?";
}

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Each row scaled by the lcm of its denominators so the system becomes integral.
IntMatrix integral_rows(const RationalMatrix& a, const RationalVector* b) {
    IntMatrix m;
    m.reserve(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        BigInt scale = 1;
        for (const auto& v : a[r]) scale = lcm(scale, v.denominator());
        if (b) scale = lcm(scale, (*b)[r].denominator());
        std::vector<BigInt> row;
        row.reserve(a[r].size() + (b ? 1 : 0));
        for (const auto& v : a[r]) row.push_back(v.numerator() * (scale / v.denominator()));
        if (b) row.push_back((*b)[r].numerator() * (scale / (*b)[r].denominator()));
        m.push_back(std::move(row));
    }
    return m;
}

// Bareiss forward elimination over the first `cols` columns. Every
// division is exact; on return rows [0, rank) are in echelon form.
std::size_t bareiss_forward(IntMatrix& m, std::size_t cols, std::vector<std::size_t>& pivots) {
    const std::size_t rows = m.size();
    const std::size_t width = rows ? m[0].size() : 0;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < width; ++j) {
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]);
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

LinearSolution solve_linear(const RationalMatrix& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row/rhs size mismatch");
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != cols) throw std::invalid_argument("solve_linear: ragged matrix");

    IntMatrix m = integral_rows(a, &b);
    std::vector<std::size_t> pivots;
    const std::size_t r = bareiss_forward(m, cols, pivots);

    for (std::size_t i = r; i < m.size(); ++i)
        if (m[i][cols] != 0) return {SolveStatus::inconsistent, {}};
    if (r < cols) return {SolveStatus::singular, {}};

    RationalVector x(cols);
    for (std::size_t i = r; i-- > 0;) {
        Rational acc(m[i][cols]);
        for (std::size_t j = pivots[i] + 1; j < cols; ++j)
            if (m[i][j] != 0) acc -= Rational(m[i][j]) * x[j];
        x[pivots[i]] = acc / Rational(m[i][pivots[i]]);
    }
    return {SolveStatus::unique, std::move(x)};
}

std::size_t rank(const RationalMatrix& a) {
    if (a.empty()) return 0;
    IntMatrix m = integral_rows(a, nullptr);
    std::vector<std::size_t> pivots;
    return bareiss_forward(m, a[0].size(), pivots);
}

RationalMatrix rref(const RationalMatrix& a, std::vector<std::size_t>* pivot_columns) {
    RationalMatrix m = a;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    if (pivot_columns) *pivot_columns = std::move(pivots);
    return m;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a, std::size_t columns) {
    std::vector<std::size_t> pivots;
    const RationalMatrix red = rref(a, &pivots);
    std::vector<bool> is_pivot(columns, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < columns; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(columns, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
    RationalVector y;
    y.reserve(a.size());
    for (const auto& row : a) {
        if (row.size() != x.size()) throw std::invalid_argument("multiply: dimension mismatch");
        Rational acc(0);
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        y.push_back(acc);
    }
    return y;
}

}  // namespace riderlab
