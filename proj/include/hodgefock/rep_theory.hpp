// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file rep_theory.hpp
 * @brief S_n-orbit analysis of mixed symmetry classes inside H^{⊗n}.
 *
 * H^{⊙[k],∧[q]} is the span of all tensors symmetric in some k slots and
 * skew in the other q. It is S_n-invariant, and the orbit span V of a basis
 * tensor b ∈ H_{k,q} is a quotient of the induced representation [k][1^q],
 * which splits as [k+1,1^{q-1}] ⊕ [k,1^q].
 *
 * The two pieces are separated by the class sum of transpositions
 * J = Σ_{i<j} τ_{i,j}, which is central in the group algebra and acts on an
 * irreducible of shape λ by its content sum. For the two hooks the content
 * sums differ by exactly n, giving the equivariant projectors
 *
 *     P+ = (J - c(k,1^q)) / n,      P- = (c(k+1,1^{q-1}) - J) / n.
 *
 * On embed(H_{k,q}) these agree with the Fock-space projectors
 * lower∘raise/n and raise∘lower/n.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hodgefock/fock_ops.hpp"
#include "hodgefock/tensor_core.hpp"

namespace hodgefock {

/**
 * Exact subspace of H^{⊗n} held in reduced row-echelon form: each basis vector
 * has its smallest key as pivot, pivots increase strictly, each pivot entry is
 * 1 and no other basis vector touches it. Two Subspaces are equal iff they
 * span the same space.
 */
class Subspace {
public:
    using Key = FullTensor::Key;

    Subspace() = default;
    Subspace(int d, int n);

    static Subspace span(int d, int n, const std::vector<FullTensor>& vectors);

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t dim() const { return rows_.size(); }
    /// Echelon basis in increasing pivot order.
    [[nodiscard]] std::vector<FullTensor> basis() const;
    [[nodiscard]] std::vector<Key> pivots() const;

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(const FullTensor& v);

    /// v minus its echelon reduction; zero iff v is in the span.
    [[nodiscard]] FullTensor reduce(const FullTensor& v) const;
    [[nodiscard]] bool contains(const FullTensor& v) const;
    [[nodiscard]] bool contains(const Subspace& other) const;

    /// Coefficients of v in basis() order. Throws NotInvariant if v is not in the span.
    [[nodiscard]] std::vector<Rational> coordinates(const FullTensor& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    void require_shape(const FullTensor& v) const;

    int d_ = 1;
    int n_ = 0;
    std::map<Key, FullTensor> rows_; // pivot -> row
};

/// Partition (n - m, 1^m).
class HookShape {
public:
    /// Throws InvalidIndex unless n >= 1 and 0 <= m <= n - 1.
    HookShape(int n, int m);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int leg() const { return m_; }
    [[nodiscard]] std::vector<int> partition() const;
    /// Σ (column - row) over the cells.
    [[nodiscard]] std::int64_t content_sum() const;

private:
    int n_;
    int m_;
};

/// n! / ∏ hook lengths for an arbitrary partition (non-increasing, positive parts).
std::int64_t hook_length_dimension(const std::vector<int>& partition);

/// Dimension of the hook irreducible, C(n-1, m); the hook-length product is
/// cross-checked against the binomial.
std::int64_t hook_dim(const HookShape& h);

/// Span of the S_n-orbit of embed(b) from the C(n,k) position cosets.
Subspace orbit_span(const MixedIndex& b, int d);

/// Same span from all n! permutations (reference route).
Subspace orbit_span_full_group(const MixedIndex& b, int d);

/**
 * H^{⊙[k],∧[q]}: span of S_a A_{a^c} e_key over all k-subsets a and keys.
 * Keys are restricted to one representative per S_a × S_{a^c} orbit (values
 * non-decreasing on a, strictly increasing on a^c), which loses nothing since
 * the others map to ± the same vector or to zero. A negative degree yields
 * the zero subspace of H^{⊗(k+q)}.
 */
Subspace span_all_positions(int d, int k, int q);

/// embed(H_{k,q}) as a subspace of H^{⊗(k+q)}.
Subspace embedded_space(int d, int k, int q);

/// A ∩ B through the kernel of the stacked system. Throws DimensionMismatch on shape mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// J v = Σ_{i<j} τ_{i,j} v.
FullTensor transposition_class_sum(const FullTensor& v);

/// P+ v for the [k+1,1^{q-1}] component of [k][1^q], q = v.n() - k.
FullTensor project_plus(const FullTensor& v, int k);
/// P- v for the [k,1^q] component of [k][1^q], q = v.n() - k.
FullTensor project_minus(const FullTensor& v, int k);

struct OrbitSplit {
    Subspace span;
    Subspace plus;
    Subspace minus;
    /// Some index occurs in both the symmetric and exterior parts (or repeats), so
    /// the span may be a proper quotient of [k][1^q].
    bool degenerate = false;
};

/// Orbit span of b and its images under P±. Throws DegreeOutOfRange for n = 0.
OrbitSplit split_orbit(const MixedIndex& b, int d);

struct LrSplitDims {
    std::size_t plus = 0;
    std::size_t minus = 0;
};

/// (rank P+|V, rank P-|V) for V = orbit_span(b). Throws DegreeOutOfRange for n = 0.
LrSplitDims lr_split_dims(const MixedIndex& b, int d);

/// Trace of v ↦ permute(v, p) on V. Throws NotInvariant if p does not preserve V.
Rational action_trace(const Subspace& v, const Permutation& p);

} // namespace hodgefock
