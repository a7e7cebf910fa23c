// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file chaos.hpp
 * @brief Gaussian model of the Fock calculus on H = E = R^d with the standard
 *        Gaussian measure γ.
 *
 * I(h)(x) = <h, x>, and the chaos isometry sends exponential vectors to
 * stochastic exponentials,
 *
 *     Ψ(Σ_k h^{⊙k}/k!) = exp(<h,x> - |h|²/2) = ∏_i Σ_a h_i^a He_a(x_i) / a!.
 *
 * Comparing the coefficients of ∏ h_i^{a_i} on both sides (the label with
 * multiplicities a has coefficient ∏ h_i^{a_i}/a_i! in h^{⊙k}/k!) gives the
 * basis action
 *
 *     Ψ(e_1^{⊙a_1} ⊙ ... ⊙ e_d^{⊙a_d}) = ∏_i He_{a_i}(x_i),
 *
 * with He the probabilists' Hermite polynomials. Since E[He_a He_b] = a! δ_ab,
 * Ψ is an isometry for the permanent inner product.
 *
 * q-vector fields are FormFields: polynomial coefficients on the orthonormal
 * exterior keys e_J, J strictly increasing. The exterior derivative and its
 * Gaussian adjoint act as
 *
 *     d♯(f e_J)  = Σ_i ∂_i f · e_i ∧ e_J,
 *     d*♯(f e_J) = Σ_i (-1)^{i-1} (x_{j_i} f - ∂_{j_i} f) · e_{J \ j_i}.
 */

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "hodgefock/rational.hpp"
#include "hodgefock/tensor_core.hpp"

namespace hodgefock {

/// Exponent multi-index (a_1, ..., a_d).
using Exponent = std::vector<int>;

/// Polynomial in x_1..x_d with rational coefficients.
class Poly {
public:
    using Terms = std::map<Exponent, Rational>;

    Poly() = default;
    explicit Poly(int d);

    static Poly constant(int d, const Rational& c);
    /// x_i, 1-based.
    static Poly variable(int d, int i);
    static Poly monomial(int d, Exponent exponent, const Rational& c = Rational(1));

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(const Exponent& e) const;
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    /// Total degree; -1 for the zero polynomial.
    [[nodiscard]] int degree() const;

    void add(const Exponent& e, const Rational& c);

    /// ∂/∂x_i
    [[nodiscard]] Poly derivative(int i) const;
    /// x_i · f
    [[nodiscard]] Poly times_variable(int i) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly&, const Poly&) = default;

    /// e.g. "x1^2*x2 - 3/2*x3 + 1"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

private:
    void require_same_dim(const Poly& o) const;

    int d_ = 1;
    Terms terms_;
};

/// Coordinates in the product Hermite basis ∏_i He_{a_i}(x_i).
class HermiteExpansion {
public:
    using Terms = std::map<Exponent, Rational>;

    HermiteExpansion() = default;
    explicit HermiteExpansion(int d) : d_(d) {}

    static HermiteExpansion from_poly(const Poly& p);
    [[nodiscard]] Poly to_poly() const;

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] Rational coeff(const Exponent& a) const;
    void add(const Exponent& a, const Rational& c);

    friend bool operator==(const HermiteExpansion&, const HermiteExpansion&) = default;

private:
    int d_ = 1;
    Terms terms_;
};

/// Polynomial coefficients on the exterior keys of H^{∧q}.
class FormField {
public:
    using Key = std::vector<int>; ///< strictly increasing, 1-based
    using Comps = std::map<Key, Poly>;

    FormField() = default;
    FormField(int d, int q);

    [[nodiscard]] int d() const { return d_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] const Comps& comps() const { return comps_; }
    [[nodiscard]] Poly component(const Key& key) const;
    [[nodiscard]] bool is_zero() const { return comps_.empty(); }

    /// Adds f·(e_{key_1} ∧ ... ∧ e_{key_q}) for any ordering of key.
    void add(Key key, const Poly& f);

    /// Applies f to every component polynomial.
    template <typename F>
    [[nodiscard]] FormField map_components(F&& f) const {
        FormField out(d_, q_);
        for (const auto& [key, p] : comps_) out.add(key, f(p));
        return out;
    }

    FormField& operator+=(const FormField& o);
    FormField& operator-=(const FormField& o);
    FormField& operator*=(const Rational& c);
    friend FormField operator+(FormField a, const FormField& b) { return a += b; }
    friend FormField operator-(FormField a, const FormField& b) { return a -= b; }
    friend FormField operator*(FormField a, const Rational& c) { return a *= c; }
    friend FormField operator*(const Rational& c, FormField a) { return a *= c; }
    friend bool operator==(const FormField&, const FormField&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    void require_same_shape(const FormField& o) const;

    int d_ = 1;
    int q_ = 0;
    Comps comps_;
};

/// Truncated element of the symmetric Fock space, graded by chaos degree.
struct GradedFock {
    int d = 1;
    std::map<int, FockTensor> parts; ///< k -> element of H_{k,0}; zero parts omitted

    friend bool operator==(const GradedFock&, const GradedFock&) = default;
};

/// Probabilists' Hermite polynomial He_a in one variable.
Poly hermite(int a);

/// E[x^e] under the standard Gaussian on R^d.
Rational gaussian_moment(const Exponent& e);

/// Ψ on H_{k,0}. Throws DegreeOutOfRange if q != 0.
Poly psi(const FockTensor& s);

/// Ψ ⊗ id on H_{k,q}.
FormField psi_q(const FockTensor& t);

/// Inverse of Ψ_q, split by chaos degree k (zero degrees omitted).
std::map<int, FockTensor> psi_q_inverse(const FormField& u);

/// Hermite degrees carrying a nonzero coefficient in some component.
std::set<int> hermite_support(const FormField& u);

/// Parts h^{⊙k}/k! for k = 0..N. Throws InvalidIndex if h is empty, DegreeOutOfRange if N < 0.
GradedFock exp_vector(std::span<const Rational> h, int N);

FormField d_sharp(const FormField& u);

/// Throws DegreeOutOfRange for a 0-form.
FormField d_star_sharp(const FormField& u);

/// Ornstein-Uhlenbeck operator L = D*D.
Poly ou(const Poly& f);

/// Δ_q = d*♯ d♯ + d♯ d*♯, the second term absent for q = 0.
FormField hodge_laplacian(const FormField& u);

/// E_γ[Σ_J f_J g_J]. Throws DimensionMismatch on shape mismatch.
Rational gaussian_inner(const FormField& u, const FormField& v);
Rational gaussian_inner(const Poly& f, const Poly& g);

/// E_γ f, read off as the Hermite degree-0 coefficient.
Rational expectation(const Poly& f);

/// Constant function c on R^d.
Poly iota(int d, const Rational& c);

/// A q-form with polynomial coefficient 1 on key x: Ψ_q of the vacuum ⊗ x.
FormField constant_form(int d, const std::vector<int>& x);

/**
 * d♯ Ψ_q(E_N(h) ⊗ x) - Ψ_{q+1}(E_N(h) ⊗ (h ∧ x)), with E_N(h) = Σ_{k<=N} h^{⊙k}/k!.
 *
 * Both sides use the same truncated exponential vector. The untruncated
 * difference is zero, so only the top term survives: the result equals
 * -Ψ_{q+1}(h^{⊙N}/N! ⊗ (h ∧ x)) and lives in Hermite degree N alone.
 * Throws DegreeOutOfRange for N < 1, InvalidIndex for a bad key x.
 */
FormField diagram_defect(std::span<const Rational> h, const std::vector<int>& x, int N);

} // namespace hodgefock
