// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hodge.hpp
 * @brief Weitzenböck identity, exactness of the lower/raise complexes and the
 *        Hodge split of H_{k,q}.
 *
 * On H_{k,q} with n = k + q,
 *
 *     raise∘lower + lower∘raise = n·id,
 *
 * where a term whose intermediate space does not exist (k = 0 or q = 0) is the
 * zero map. Together with lower² = raise² = 0 this makes
 *
 *     P+ = lower∘raise / n,   P- = raise∘lower / n
 *
 * complementary idempotents with P+ onto Ker(lower) and P- onto Ker(raise).
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hodgefock/fock_ops.hpp"
#include "hodgefock/tensor_core.hpp"

namespace hodgefock {

/// raise∘lower + lower∘raise on H_{k,q} as a matrix in enum_basis order.
LinearMap weitzenboeck_matrix(int d, int k, int q);

/// Largest |entry| of weitzenboeck_matrix(d,k,q) - (k+q)·id. Zero when the identity holds.
Rational weitzenboeck_defect(int d, int k, int q);

/// One row of an exactness report: everything about H_{k,q}, q = n - k.
struct ExactnessRow {
    int k = 0;
    int q = 0;
    std::size_t dim = 0;
    std::size_t rank_lower = 0;     ///< lower: H_{k,q} -> H_{k-1,q+1}
    std::size_t kernel_lower = 0;
    std::size_t rank_raise = 0;     ///< raise: H_{k,q} -> H_{k+1,q-1}
    std::size_t kernel_raise = 0;
    std::size_t image_lower_in = 0; ///< rank of lower: H_{k+1,q-1} -> H_{k,q}
    std::size_t image_raise_in = 0; ///< rank of raise: H_{k-1,q+1} -> H_{k,q}
    std::size_t harmonic = 0;       ///< dim(Ker lower ∩ Ker raise) on H_{k,q}
    bool lower_squares_to_zero = true; ///< lower∘lower = 0 out of H_{k+1,q-1}
    bool raise_squares_to_zero = true; ///< raise∘raise = 0 out of H_{k-1,q+1}

    /// Ker(lower|H_{k,q}) = Im(lower|H_{k+1,q-1}).
    [[nodiscard]] bool lower_exact() const { return lower_squares_to_zero && kernel_lower == image_lower_in; }
    /// Ker(raise|H_{k,q}) = Im(raise|H_{k-1,q+1}).
    [[nodiscard]] bool raise_exact() const { return raise_squares_to_zero && kernel_raise == image_raise_in; }
    [[nodiscard]] bool rank_nullity() const {
        return rank_lower + kernel_lower == dim && rank_raise + kernel_raise == dim;
    }
    [[nodiscard]] bool ok() const { return lower_exact() && raise_exact() && rank_nullity() && harmonic == 0; }
};

struct ExactnessReport {
    int d = 1;
    int n = 1;
    std::vector<ExactnessRow> rows; ///< ordered by k = 0..n

    [[nodiscard]] bool exact() const;
};

/// Ranks and kernels of lower/raise on every H_{k,n-k}. Throws InvalidIndex for d < 1 or n < 1.
ExactnessReport exactness_report(int d, int n);

/// The row of exactness_report(d, k+q) for a single k.
ExactnessRow exactness_row(int d, int k, int q);

struct HodgeSplit {
    FockTensor plus;  ///< in Ker(lower), the image of lower
    FockTensor minus; ///< in Ker(raise), the image of raise
};

/**
 * t = plus + minus with plus = lower(raise(t))/n and minus = raise(lower(t))/n;
 * plus is zero at q = 0 and minus is zero at k = 0. Throws DegreeOutOfRange for n = 0.
 */
HodgeSplit hodge_split(const FockTensor& t);

struct Witnesses {
    FullTensor plus;  ///< symmetric in slots 1..k+1, skew in k+2..n
    FullTensor minus; ///< symmetric in slots 1..k-1, skew in k..n
};

/**
 * With b the embedded basis tensor,
 *
 *     plus  = 1/(k+1) Σ_{l=1}^{k+1} τ_{l,k+1} b,
 *     minus = 1/(q+1) (b - Σ_{m=k+1}^{n} τ_{k,m} b).
 *
 * These witness that the orbit span of b meets both neighbouring mixed
 * symmetry classes; they are not the orthogonal projections of b.
 * Throws DegreeOutOfRange unless k >= 1 and q >= 1.
 */
Witnesses witnesses(const MixedIndex& b, int d);

/// Seeded random element of H_{k,q}: every basis coefficient uniform in {-9..9}.
FockTensor random_fock_tensor(const Signature& sig, std::mt19937_64& gen);

} // namespace hodgefock
