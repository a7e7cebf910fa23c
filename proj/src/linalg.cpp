// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hodgefock::linalg {

std::size_t rank(const DenseMatrix& rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    // Scale every row by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != ncols) throw std::invalid_argument("linalg::rank: ragged matrix");
        mpz_class lcm = 1;
        for (const auto& v : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.denominator().get_mpz_t());
        std::vector<mpz_class> scaled(ncols);
        bool nonzero = false;
        for (std::size_t j = 0; j < ncols; ++j) {
            scaled[j] = row[j].numerator() * (lcm / row[j].denominator());
            nonzero = nonzero || scaled[j] != 0;
        }
        if (nonzero) m.push_back(std::move(scaled));
    }

    // Bareiss: after step r, entries below the pivot row are the r+1 order
    // minors, and the division by the previous pivot is exact.
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < ncols; ++j) {
                m[i][j] = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& rows, std::size_t cols) {
    DenseMatrix m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        const Rational inv = Rational(1) / m[r][col];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t inner = b.size();
    const std::size_t ncols = b.empty() ? 0 : b.front().size();
    DenseMatrix out(a.size(), std::vector<Rational>(ncols, Rational(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw std::invalid_argument("linalg::multiply: shape mismatch");
        for (std::size_t l = 0; l < inner; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < ncols; ++j)
                if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
        }
    }
    return out;
}

} // namespace hodgefock::linalg
