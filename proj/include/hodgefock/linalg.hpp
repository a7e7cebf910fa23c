// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file linalg.hpp
 * @brief Exact dense rank and kernel computations.
 *
 * rank() clears row denominators and runs fraction-free (Bareiss) elimination
 * over the integers; every intermediate stays integral and the pivot division
 * is exact. kernel_basis() uses Gauss-Jordan over the rationals.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "hodgefock/rational.hpp"

namespace hodgefock::linalg {

using DenseMatrix = std::vector<std::vector<Rational>>;

/// Rank of a row-major matrix. All rows must have equal length.
std::size_t rank(const DenseMatrix& rows);

/// Basis of {x : A x = 0} for A with `cols` columns, in reduced form
/// (one vector per free column, with a 1 in that column).
std::vector<std::vector<Rational>> kernel_basis(const DenseMatrix& rows, std::size_t cols);

/// Row-major product a·b.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

} // namespace hodgefock::linalg
