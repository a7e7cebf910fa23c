// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/rep_theory.hpp"

#include <stdexcept>

#include "hodgefock/errors.hpp"

namespace hodgefock {

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

Subspace::Subspace(int d, int n) : d_(d), n_(n) {
    if (d < 1) throw InvalidIndex("Subspace: dimension must be >= 1");
    if (n < 0) throw DegreeOutOfRange("Subspace: negative degree");
}

Subspace Subspace::span(int d, int n, const std::vector<FullTensor>& vectors) {
    Subspace s(d, n);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

std::vector<FullTensor> Subspace::basis() const {
    std::vector<FullTensor> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
}

std::vector<Subspace::Key> Subspace::pivots() const {
    std::vector<Key> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(pivot);
    return out;
}

void Subspace::require_shape(const FullTensor& v) const {
    if (v.d() != d_ || v.n() != n_) throw DimensionMismatch("Subspace: vector shape differs from the ambient space");
}

FullTensor Subspace::reduce(const FullTensor& v) const {
    require_shape(v);
    FullTensor r = v;
    // Rows carry no pivot other than their own, so one pass over the pivots
    // present in v clears them all.
    for (const auto& [key, c] : v.coeffs()) {
        const auto row = rows_.find(key);
        if (row == rows_.end()) continue;
        FullTensor scaled = row->second;
        scaled *= c;
        r -= scaled;
    }
    return r;
}

bool Subspace::insert(const FullTensor& v) {
    FullTensor r = reduce(v);
    if (r.is_zero()) return false;
    const Key pivot = r.coeffs().begin()->first;
    r *= Rational(1) / r.coeffs().begin()->second;
    for (auto& [p, row] : rows_) {
        const Rational c = row.coeff_at(pivot);
        if (c.is_zero()) continue;
        row -= r * c;
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

bool Subspace::contains(const FullTensor& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.d_ != d_ || other.n_ != n_) throw DimensionMismatch("Subspace::contains: ambient spaces differ");
    for (const auto& [pivot, row] : other.rows_)
        if (!contains(row)) return false;
    return true;
}

std::vector<Rational> Subspace::coordinates(const FullTensor& v) const {
    if (!contains(v)) throw NotInvariant("Subspace::coordinates: vector outside the subspace");
    std::vector<Rational> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(v.coeff_at(pivot));
    return out;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.d() != b.d() || a.n() != b.n()) throw DimensionMismatch("intersect: ambient spaces differ");
    // Σ β_j b_j ∈ A  ⇔  Σ β_j reduce_A(b_j) = 0. Solve for β by elimination on
    // the residuals while tracking combinations.
    struct Row {
        FullTensor vec;
        std::map<std::size_t, Rational> combo;
    };
    const auto b_basis = b.basis();
    std::map<Subspace::Key, Row> echelon; // pivot -> row, pivot = smallest key
    Subspace result(a.d(), a.n());
    for (std::size_t j = 0; j < b_basis.size(); ++j) {
        Row cur{a.reduce(b_basis[j]), {{j, Rational(1)}}};
        while (!cur.vec.is_zero()) {
            const auto [lead, lead_coeff] = *cur.vec.coeffs().begin();
            const auto hit = echelon.find(lead);
            if (hit == echelon.end()) break;
            const Rational f = lead_coeff / hit->second.vec.coeffs().begin()->second;
            cur.vec -= hit->second.vec * f;
            for (const auto& [idx, c] : hit->second.combo) {
                auto& slot = cur.combo[idx];
                slot -= c * f;
            }
        }
        if (cur.vec.is_zero()) {
            FullTensor w(a.d(), a.n());
            for (const auto& [idx, c] : cur.combo)
                if (!c.is_zero()) w += b_basis[idx] * c;
            result.insert(w);
        } else {
            const Subspace::Key lead = cur.vec.coeffs().begin()->first;
            echelon.emplace(lead, std::move(cur));
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Hooks
// ---------------------------------------------------------------------------

HookShape::HookShape(int n, int m) : n_(n), m_(m) {
    if (n < 1 || m < 0 || m > n - 1)
        throw InvalidIndex("HookShape: need n >= 1 and 0 <= m <= n-1, got n=" + std::to_string(n) + " m=" + std::to_string(m));
}

std::vector<int> HookShape::partition() const {
    std::vector<int> parts{n_ - m_};
    parts.insert(parts.end(), static_cast<std::size_t>(m_), 1);
    return parts;
}

std::int64_t HookShape::content_sum() const {
    const std::int64_t arm = n_ - m_;
    return arm * (arm - 1) / 2 - static_cast<std::int64_t>(m_) * (m_ + 1) / 2;
}

std::int64_t hook_length_dimension(const std::vector<int>& partition) {
    int n = 0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i] < 1 || (i && partition[i] > partition[i - 1]))
            throw InvalidIndex("hook_length_dimension: not a partition");
        n += partition[i];
    }
    // column lengths of the Young diagram
    std::vector<int> cols(partition.empty() ? 0 : static_cast<std::size_t>(partition.front()), 0);
    for (int row : partition)
        for (int c = 0; c < row; ++c) ++cols[static_cast<std::size_t>(c)];
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
    mpz_class den = 1;
    for (std::size_t r = 0; r < partition.size(); ++r)
        for (int c = 0; c < partition[r]; ++c) {
            const int arm = partition[r] - c - 1;
            const int leg = cols[static_cast<std::size_t>(c)] - static_cast<int>(r) - 1;
            den *= arm + leg + 1;
        }
    const mpz_class dim = num / den;
    return dim.get_si();
}

std::int64_t hook_dim(const HookShape& h) {
    const std::int64_t by_hooks = hook_length_dimension(h.partition());
    const std::int64_t by_binomial = binomial(h.n() - 1, h.leg());
    if (by_hooks != by_binomial) throw std::logic_error("hook_dim: hook-length product disagrees with C(n-1,m)");
    return by_hooks;
}

// ---------------------------------------------------------------------------
// Orbit spans and mixed symmetry classes
// ---------------------------------------------------------------------------

namespace {

// Permutation sending slots 1..k onto `a` and k+1..n onto its complement, in order.
Permutation coset_representative(const PositionSet& a, int n) {
    std::vector<int> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int s : a.members()) images.push_back(s);
    const PositionSet rest = a.complement(n);
    for (int s : rest.members()) images.push_back(s);
    return Permutation(std::move(images));
}

bool representative_key(const std::vector<int>& tuple, const PositionSet& a, const PositionSet& ac) {
    for (std::size_t i = 1; i < a.members().size(); ++i)
        if (tuple[static_cast<std::size_t>(a.members()[i - 1] - 1)] > tuple[static_cast<std::size_t>(a.members()[i] - 1)]) return false;
    for (std::size_t i = 1; i < ac.members().size(); ++i)
        if (tuple[static_cast<std::size_t>(ac.members()[i - 1] - 1)] >= tuple[static_cast<std::size_t>(ac.members()[i] - 1)]) return false;
    return true;
}

} // namespace

Subspace orbit_span(const MixedIndex& b, int d) {
    if (!b.is_canonical(d)) throw InvalidIndex("orbit_span: label " + b.to_string() + " is not canonical");
    const int n = b.n();
    const FullTensor base = embed(FockTensor::basis(d, b));
    Subspace s(d, n);
    for (const auto& a : k_subsets(n, b.k())) s.insert(permute(base, coset_representative(a, n)));
    return s;
}

Subspace orbit_span_full_group(const MixedIndex& b, int d) {
    if (!b.is_canonical(d)) throw InvalidIndex("orbit_span_full_group: label " + b.to_string() + " is not canonical");
    const FullTensor base = embed(FockTensor::basis(d, b));
    Subspace s(d, b.n());
    for (const auto& p : Permutation::all(b.n())) s.insert(permute(base, p));
    return s;
}

Subspace span_all_positions(int d, int k, int q) {
    const int n = k + q;
    Subspace s(d, n < 0 ? 0 : n);
    if (k < 0 || q < 0) return s;
    FullTensor probe(d, n);
    const auto ambient = probe.ambient_dim();
    for (const auto& a : k_subsets(n, k)) {
        const auto ac = a.complement(n);
        for (FullTensor::Key key = 0; key < ambient; ++key) {
            const auto tuple = probe.decode(key);
            if (!representative_key(tuple, a, ac)) continue;
            const auto v = sym_subset(alt_subset(FullTensor::basis(d, tuple), ac), a);
            if (!v.is_zero()) s.insert(v);
        }
    }
    return s;
}

Subspace embedded_space(int d, int k, int q) {
    Subspace s(d, k + q);
    for (const auto& b : enum_basis(d, k, q)) s.insert(embed(FockTensor::basis(d, b)));
    return s;
}

FullTensor transposition_class_sum(const FullTensor& v) {
    FullTensor out(v.d(), v.n());
    for (int i = 1; i <= v.n(); ++i)
        for (int j = i + 1; j <= v.n(); ++j) out += permute(v, Permutation::transposition(v.n(), i, j));
    return out;
}

namespace {

// Content sums of (k+1, 1^{q-1}) and (k, 1^q), extended polynomially to the
// boundary degrees so the projector formulas stay valid at k = 0 and q = 0.
std::int64_t content_plus(std::int64_t k, std::int64_t q) { return (k + 1) * k / 2 - (q - 1) * q / 2; }
std::int64_t content_minus(std::int64_t k, std::int64_t q) { return k * (k - 1) / 2 - q * (q + 1) / 2; }

void require_degree(const FullTensor& v, int k) {
    if (v.n() < 1) throw DegreeOutOfRange("hook projector: degree must be >= 1");
    if (k < 0 || k > v.n()) throw DegreeOutOfRange("hook projector: k outside [0..n]");
}

} // namespace

FullTensor project_plus(const FullTensor& v, int k) {
    require_degree(v, k);
    const int n = v.n();
    FullTensor out = transposition_class_sum(v) - v * Rational(content_minus(k, n - k));
    return out * Rational(1, n);
}

FullTensor project_minus(const FullTensor& v, int k) {
    require_degree(v, k);
    const int n = v.n();
    FullTensor out = v * Rational(content_plus(k, n - k)) - transposition_class_sum(v);
    return out * Rational(1, n);
}

OrbitSplit split_orbit(const MixedIndex& b, int d) {
    if (b.n() == 0) throw DegreeOutOfRange("split_orbit: the vacuum has no orbit split");
    OrbitSplit out{orbit_span(b, d), Subspace(d, b.n()), Subspace(d, b.n()), false};
    for (const auto& v : out.span.basis()) {
        out.plus.insert(project_plus(v, b.k()));
        out.minus.insert(project_minus(v, b.k()));
    }
    out.degenerate = !b.distinct_entries();
    return out;
}

LrSplitDims lr_split_dims(const MixedIndex& b, int d) {
    const auto split = split_orbit(b, d);
    return {split.plus.dim(), split.minus.dim()};
}

Rational action_trace(const Subspace& v, const Permutation& p) {
    if (p.degree() != v.n()) throw DimensionMismatch("action_trace: permutation degree differs from tensor degree");
    Rational trace(0);
    for (const auto& row : v.basis()) {
        const auto image = permute(row, p);
        if (!v.contains(image)) throw NotInvariant("action_trace: " + p.to_string() + " does not preserve the subspace");
        // coordinate of image along `row` is its entry at row's pivot
        trace += image.coeff_at(row.coeffs().begin()->first);
    }
    return trace;
}

} // namespace hodgefock
