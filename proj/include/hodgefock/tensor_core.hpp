// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file tensor_core.hpp
 * @brief Mixed symmetric/antisymmetric tensors over H = R^d and their
 *        embedding into the full tensor power H^{⊗n}.
 *
 * A basis element of H_{k,q} = H^{⊙k} ⊗ H^{∧q} is written
 *
 *     e_{i_1} ⊙ ... ⊙ e_{i_k} ⊗ e_{j_1} ∧ ... ∧ e_{j_q}
 *
 * and labelled by a MixedIndex (i_1 <= ... <= i_k ; j_1 < ... < j_q). Indices
 * are 1-based. The products are the un-normalised ones,
 *
 *     h_1 ⊙ ... ⊙ h_k = k! S_k (h_1 ⊗ ... ⊗ h_k),
 *     x_1 ∧ ... ∧ x_q = q! A_q (x_1 ⊗ ... ⊗ x_q),
 *
 * so embed() has integer entries. The Fock inner product is the permanent
 * pairing on the symmetric factor times the determinant pairing on the
 * exterior factor; it relates to the coordinate pairing on H^{⊗n} by
 *
 *     inner(t, u) = inner_full(embed(t), embed(u)) / (k! q!).
 *
 * project_mixed() is the adjoint of embed() for these two pairings, hence
 * project_mixed(embed(b), k) = k! q! b.
 */

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hodgefock/rational.hpp"

namespace hodgefock {

/// Shape (d, k, q) of H_{k,q} over R^d. Negative degrees denote the zero space.
struct Signature {
    int d = 1;
    int k = 0;
    int q = 0;

    [[nodiscard]] int n() const { return k + q; }
    [[nodiscard]] bool degenerate() const { return k < 0 || q < 0; }
    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const Signature&, const Signature&) = default;
};

/// Canonical label of a basis element of H_{k,q}.
struct MixedIndex {
    std::vector<int> sym; ///< non-decreasing
    std::vector<int> alt; ///< strictly increasing

    [[nodiscard]] int k() const { return static_cast<int>(sym.size()); }
    [[nodiscard]] int q() const { return static_cast<int>(alt.size()); }
    [[nodiscard]] int n() const { return k() + q(); }

    [[nodiscard]] bool is_canonical(int d) const;

    /// True when all k + q entries are pairwise distinct.
    [[nodiscard]] bool distinct_entries() const;

    /// ∏ a_i! over the multiplicities a_i of the symmetric part.
    [[nodiscard]] Rational sym_stabilizer_order() const;

    /// "(1,1;2,3)"; the empty label renders as "(;)".
    [[nodiscard]] std::string to_string() const;

    /// Inverse of to_string().
    static MixedIndex parse(const std::string& text);

    friend auto operator<=>(const MixedIndex&, const MixedIndex&) = default;
};

/// Sorts `alt` in place and returns the sign of the sorting permutation, or 0
/// when an entry repeats (the wedge product then vanishes).
int canonicalize_alt(std::vector<int>& alt);

/**
 * All canonical labels of H_{k,q} over R^d in lexicographic (sym, alt) order.
 * There are C(d+k-1, k) * C(d, q) of them; the list is empty when q > d or a
 * degree is negative. Throws InvalidIndex for d < 1.
 */
std::vector<MixedIndex> enum_basis(int d, int k, int q);
inline std::vector<MixedIndex> enum_basis(const Signature& s) { return enum_basis(s.d, s.k, s.q); }

/// dim H_{k,q} without enumerating.
std::int64_t space_dim(const Signature& s);

/// Sparse element of H_{k,q}. Zero coefficients are never stored.
class FockTensor {
public:
    using Coeffs = std::map<MixedIndex, Rational>;

    FockTensor() = default;
    FockTensor(int d, int k, int q);
    explicit FockTensor(const Signature& sig) : FockTensor(sig.d, sig.k, sig.q) {}

    /// The basis tensor labelled by `label`; throws InvalidIndex if not canonical.
    static FockTensor basis(int d, const MixedIndex& label);

    [[nodiscard]] const Signature& signature() const { return sig_; }
    [[nodiscard]] int d() const { return sig_.d; }
    [[nodiscard]] int k() const { return sig_.k; }
    [[nodiscard]] int q() const { return sig_.q; }
    [[nodiscard]] int n() const { return sig_.n(); }

    [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
    [[nodiscard]] Rational coeff(const MixedIndex& label) const;
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    /// Adds c to the coefficient of a canonical label.
    void add(const MixedIndex& label, const Rational& c);

    /// Adds c·(sym ⊗ alt) for arbitrary ordering: sym is sorted, alt is
    /// sorted with its sign, and repeated alt entries drop the term.
    void add_unordered(std::vector<int> sym, std::vector<int> alt, const Rational& c);

    FockTensor& operator+=(const FockTensor& o);
    FockTensor& operator-=(const FockTensor& o);
    FockTensor& operator*=(const Rational& c);
    friend FockTensor operator+(FockTensor a, const FockTensor& b) { return a += b; }
    friend FockTensor operator-(FockTensor a, const FockTensor& b) { return a -= b; }
    friend FockTensor operator*(FockTensor a, const Rational& c) { return a *= c; }
    friend FockTensor operator*(const Rational& c, FockTensor a) { return a *= c; }
    friend bool operator==(const FockTensor&, const FockTensor&) = default;

    /// "3/2·(1,1;2,3) - 1·(1,2;1,3)" in basis order; "0" for the zero tensor.
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_signature(const FockTensor& o) const;

    Signature sig_{};
    Coeffs coeffs_;
};

/**
 * Sparse element of H^{⊗n}. Keys are index tuples in [1..d]^n, stored as
 * base-d integers with the first slot most significant, so the map order is
 * lexicographic on tuples.
 */
class FullTensor {
public:
    using Key = std::uint64_t;
    using Coeffs = std::map<Key, Rational>;

    FullTensor() = default;
    FullTensor(int d, int n);

    static FullTensor basis(int d, std::span<const int> tuple);

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int n() const { return n_; }
    /// d^n, the number of possible keys.
    [[nodiscard]] Key ambient_dim() const;

    [[nodiscard]] const Coeffs& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] Rational coeff(std::span<const int> tuple) const;
    [[nodiscard]] Rational coeff_at(Key key) const;

    void add(std::span<const int> tuple, const Rational& c);
    void add_at(Key key, const Rational& c);

    [[nodiscard]] Key encode(std::span<const int> tuple) const;
    [[nodiscard]] std::vector<int> decode(Key key) const;

    FullTensor& operator+=(const FullTensor& o);
    FullTensor& operator-=(const FullTensor& o);
    FullTensor& operator*=(const Rational& c);
    friend FullTensor operator+(FullTensor a, const FullTensor& b) { return a += b; }
    friend FullTensor operator-(FullTensor a, const FullTensor& b) { return a -= b; }
    friend FullTensor operator*(FullTensor a, const Rational& c) { return a *= c; }
    friend FullTensor operator*(const Rational& c, FullTensor a) { return a *= c; }
    friend bool operator==(const FullTensor&, const FullTensor&) = default;

    /// "1·(1,2) - 1·(2,1)"; "0" for the zero tensor.
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_shape(const FullTensor& o) const;

    int d_ = 1;
    int n_ = 0;
    Coeffs coeffs_;
};

/// Inclusion H_{k,q} -> H^{⊗(k+q)} using the un-normalised ⊙ and ∧ products.
FullTensor embed(const FockTensor& t);

/**
 * Applies S_{1..k} then A_{k+1..n} to t and reads the result in MixedIndex
 * coordinates scaled by k! q!, i.e. the adjoint of embed(). Throws
 * DegreeOutOfRange unless 0 <= k <= n.
 */
FockTensor project_mixed(const FullTensor& t, int k);

/// Permanent ⊗ determinant inner product. Throws DimensionMismatch on signature mismatch.
Rational inner(const FockTensor& t, const FockTensor& u);

/// Coordinatewise inner product on H^{⊗n}. Throws DimensionMismatch on shape mismatch.
Rational inner_full(const FullTensor& t, const FullTensor& u);

} // namespace hodgefock
