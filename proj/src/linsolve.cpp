#include "wz/linsolve.hpp"

#include <stdexcept>

namespace wz {

std::optional<std::vector<BigRational>> linsolve(const RationalMatrix& matrix, const std::vector<BigRational>& rhs)
{
    const std::size_t rows = matrix.size();
    if (rhs.size() != rows) {
        throw std::invalid_argument("linsolve: rhs length does not match the row count");
    }
    const std::size_t cols = rows == 0 ? 0 : matrix.front().size();
    for (const auto& row : matrix) {
        if (row.size() != cols) {
            throw std::invalid_argument("linsolve: ragged matrix");
        }
    }

    // Augmented matrix, each row scaled to integers.
    std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        BigInt lcm = rhs[i].den();
        for (const auto& a : matrix[i]) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.den().get_mpz_t());
        }
        for (std::size_t j = 0; j < cols; ++j) {
            m[i][j] = matrix[i][j].num() * (lcm / matrix[i][j].den());
        }
        m[i][cols] = rhs[i].num() * (lcm / rhs[i].den());
    }

    // Fraction-free (Bareiss) forward elimination to row echelon form.
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        const BigInt& pivot = m[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                BigInt t = m[i][j] * pivot - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(c);
        ++r;
    }

    for (std::size_t i = r; i < rows; ++i) {
        if (m[i][cols] != 0) {
            return std::nullopt;
        }
    }

    std::vector<BigRational> v(cols, BigRational(0));
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivot_cols[i];
        BigRational sum(m[i][cols]);
        for (std::size_t j = c + 1; j < cols; ++j) {
            if (m[i][j] != 0 && !v[j].is_zero()) {
                sum -= BigRational(m[i][j]) * v[j];
            }
        }
        v[c] = sum / BigRational(m[i][c]);
    }
    return v;
}

} // namespace wz
