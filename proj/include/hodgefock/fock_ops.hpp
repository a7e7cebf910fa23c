// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_ops.hpp
 * @brief Degree-shifting operators on H_{k,q}, the S_n action on H^{⊗n},
 *        subset (skew-)symmetrisers and matrix extraction.
 *
 * lower : H_{k,q} -> H_{k-1,q+1}
 *     h_1⊙...⊙h_k ⊗ x  ↦  Σ_j h_1⊙..ĥ_j..⊙h_k ⊗ h_j ∧ x
 *
 * raise : H_{k,q} -> H_{k+1,q-1}
 *     h ⊗ x_1∧...∧x_q  ↦  Σ_i (-1)^{i-1} h⊙x_i ⊗ x_1∧..x̂_i..∧x_q
 *
 * Both square to zero and are mutually adjoint for the permanent/determinant
 * inner product, and raise∘lower + lower∘raise = (k+q)·id on H_{k,q}.
 */

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hodgefock/rational.hpp"
#include "hodgefock/tensor_core.hpp"

namespace hodgefock {

/// Bijection of {1..n}, stored by images.
class Permutation {
public:
    Permutation() = default;
    /// Throws InvalidIndex unless `images` is a permutation of 1..n.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    /// τ_{i,j}; i == j gives the identity.
    static Permutation transposition(int n, int i, int j);
    /// The cycle c_1 -> c_2 -> ... -> c_m -> c_1 on {1..n}.
    static Permutation cycle(int n, const std::vector<int>& cycle);
    /// All n! permutations in lexicographic order of their image vectors.
    static std::vector<Permutation> all(int n);

    [[nodiscard]] int degree() const { return static_cast<int>(images_.size()); }
    [[nodiscard]] int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    [[nodiscard]] const std::vector<int>& images() const { return images_; }
    [[nodiscard]] int sign() const;
    /// Cycle lengths in non-increasing order (fixed points included).
    [[nodiscard]] std::vector<int> cycle_type() const;
    [[nodiscard]] Permutation inverse() const;
    [[nodiscard]] std::string to_string() const;

    /// Composition (r * p)(i) = r(p(i)).
    friend Permutation operator*(const Permutation& r, const Permutation& p);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Sorted set of tensor positions (1-based).
class PositionSet {
public:
    PositionSet() = default;
    /// Throws InvalidIndex unless members are positive, sorted and distinct.
    explicit PositionSet(std::vector<int> members);
    /// {lo, lo+1, ..., hi}; empty when hi < lo.
    static PositionSet range(int lo, int hi);

    [[nodiscard]] const std::vector<int>& members() const { return members_; }
    [[nodiscard]] int size() const { return static_cast<int>(members_.size()); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] int max() const { return members_.empty() ? 0 : members_.back(); }
    [[nodiscard]] PositionSet complement(int n) const;

    friend bool operator==(const PositionSet&, const PositionSet&) = default;

private:
    std::vector<int> members_;
};

/// All k-subsets of {1..n} in lexicographic order.
std::vector<PositionSet> k_subsets(int n, int k);

/**
 * Exact sparse matrix between two ordered Fock bases. Column j holds the
 * image of the j-th domain basis element.
 */
class LinearMap {
public:
    using Entries = std::map<std::pair<std::size_t, std::size_t>, Rational>;

    LinearMap() = default;
    LinearMap(Signature domain_sig, std::vector<MixedIndex> domain, Signature codomain_sig,
              std::vector<MixedIndex> codomain);

    static LinearMap identity(const Signature& sig);

    [[nodiscard]] const Signature& domain_signature() const { return domain_sig_; }
    [[nodiscard]] const Signature& codomain_signature() const { return codomain_sig_; }
    [[nodiscard]] const std::vector<MixedIndex>& domain() const { return domain_; }
    [[nodiscard]] const std::vector<MixedIndex>& codomain() const { return codomain_; }
    [[nodiscard]] std::size_t rows() const { return codomain_.size(); }
    [[nodiscard]] std::size_t cols() const { return domain_.size(); }
    [[nodiscard]] const Entries& entries() const { return entries_; }

    [[nodiscard]] Rational at(std::size_t row, std::size_t col) const;
    void add(std::size_t row, std::size_t col, const Rational& value);

    [[nodiscard]] bool is_zero() const { return entries_.empty(); }
    [[nodiscard]] bool is_integral() const;
    [[nodiscard]] Rational max_abs_entry() const;
    [[nodiscard]] LinearMap transpose() const;
    [[nodiscard]] std::size_t rank() const;
    /// Dense row-major copy.
    [[nodiscard]] std::vector<std::vector<Rational>> dense() const;

    /// Composition a∘b; throws DimensionMismatch unless b's codomain is a's domain.
    friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
    friend LinearMap operator*(const Rational& c, const LinearMap& a);
    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    void require_same_spaces(const LinearMap& o) const;

    Signature domain_sig_{};
    std::vector<MixedIndex> domain_;
    Signature codomain_sig_{};
    std::vector<MixedIndex> codomain_;
    Entries entries_;
};

/**
 * H_{k,q} -> H_{k-1,q+1}. For k = 0 the map is zero and the result is the
 * zero tensor carrying the input's own signature.
 */
FockTensor lower(const FockTensor& t);

/// H_{k,q} -> H_{k+1,q-1}. Throws DegreeOutOfRange for q = 0.
FockTensor raise(const FockTensor& t);

/// Moves the factor in slot j to slot p(j). Throws DimensionMismatch if p.degree() != t.n().
FullTensor permute(const FullTensor& t, const Permutation& p);

/// S_a: average over permutations of the slots in a. Throws InvalidIndex if a ⊄ {1..n}.
FullTensor sym_subset(const FullTensor& t, const PositionSet& a);

/// A_a: signed average over permutations of the slots in a. Throws InvalidIndex if a ⊄ {1..n}.
FullTensor alt_subset(const FullTensor& t, const PositionSet& a);

enum class FockOperator { lower, raise };

/**
 * Matrix of lower or raise on H_{k,q} in enum_basis order. lower at k = 0 has
 * an empty codomain (zero rows). Throws DegreeOutOfRange for raise at q = 0.
 */
LinearMap operator_matrix(FockOperator which, int d, int k, int q);

/// Coefficient column of t in the basis `basis` (throws InvalidIndex on a foreign label).
std::vector<Rational> coordinates(const FockTensor& t, const std::vector<MixedIndex>& basis);

} // namespace hodgefock
