// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/fock_ops.hpp"

#include <algorithm>
#include <numeric>

#include "detail/perm_utils.hpp"
#include "hodgefock/errors.hpp"
#include "hodgefock/linalg.hpp"

namespace hodgefock {

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || v > degree() || seen[static_cast<std::size_t>(v - 1)])
            throw InvalidIndex("Permutation: images are not a bijection of 1.." + std::to_string(degree()));
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n) throw InvalidIndex("transposition: position outside 1..n");
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(j - 1)]);
    return p;
}

Permutation Permutation::cycle(int n, const std::vector<int>& cycle) {
    auto images = identity(n).images_;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > n) throw InvalidIndex("cycle: position outside 1..n");
        images[static_cast<std::size_t>(from - 1)] = to;
    }
    return Permutation(std::move(images));
}

std::vector<Permutation> Permutation::all(int n) {
    std::vector<Permutation> out;
    detail::for_each_permutation(n, [&](const std::vector<int>& perm, int) {
        std::vector<int> images(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) images[i] = perm[i] + 1;
        out.emplace_back(std::move(images));
    });
    return out;
}

int Permutation::sign() const {
    std::vector<int> zero_based(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) zero_based[i] = images_[i] - 1;
    return detail::permutation_sign(zero_based);
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i] - 1)) {
            seen[i] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(images_[i]);
    }
    return out + "]";
}

Permutation operator*(const Permutation& r, const Permutation& p) {
    if (r.degree() != p.degree()) throw DimensionMismatch("Permutation: composing different degrees");
    std::vector<int> images(p.images_.size());
    for (std::size_t i = 0; i < images.size(); ++i) images[i] = r(p.images_[i]);
    return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// PositionSet
// ---------------------------------------------------------------------------

PositionSet::PositionSet(std::vector<int> members) : members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i] < 1) throw InvalidIndex("PositionSet: positions are 1-based");
        if (i && members_[i - 1] >= members_[i]) throw InvalidIndex("PositionSet: members must be sorted and distinct");
    }
}

PositionSet PositionSet::range(int lo, int hi) {
    std::vector<int> members;
    for (int i = lo; i <= hi; ++i) members.push_back(i);
    return PositionSet(std::move(members));
}

PositionSet PositionSet::complement(int n) const {
    std::vector<int> out;
    for (int i = 1; i <= n; ++i)
        if (!std::binary_search(members_.begin(), members_.end(), i)) out.push_back(i);
    return PositionSet(std::move(out));
}

std::vector<PositionSet> k_subsets(int n, int k) {
    std::vector<PositionSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    while (true) {
        out.emplace_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// LinearMap
// ---------------------------------------------------------------------------

LinearMap::LinearMap(Signature domain_sig, std::vector<MixedIndex> domain, Signature codomain_sig,
                     std::vector<MixedIndex> codomain)
    : domain_sig_(domain_sig), domain_(std::move(domain)), codomain_sig_(codomain_sig), codomain_(std::move(codomain)) {}

LinearMap LinearMap::identity(const Signature& sig) {
    auto basis = enum_basis(sig);
    LinearMap id(sig, basis, sig, basis);
    for (std::size_t i = 0; i < basis.size(); ++i) id.add(i, i, Rational(1));
    return id;
}

Rational LinearMap::at(std::size_t row, std::size_t col) const {
    const auto it = entries_.find({row, col});
    return it == entries_.end() ? Rational(0) : it->second;
}

void LinearMap::add(std::size_t row, std::size_t col, const Rational& value) {
    if (row >= rows() || col >= cols()) throw InvalidIndex("LinearMap::add: entry outside the matrix");
    if (value.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace({row, col}, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

bool LinearMap::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.is_integer(); });
}

Rational LinearMap::max_abs_entry() const {
    Rational best(0);
    for (const auto& [pos, v] : entries_) best = std::max(best, v.abs());
    return best;
}

LinearMap LinearMap::transpose() const {
    LinearMap t(codomain_sig_, codomain_, domain_sig_, domain_);
    for (const auto& [pos, v] : entries_) t.entries_.emplace(std::pair{pos.second, pos.first}, v);
    return t;
}

std::vector<std::vector<Rational>> LinearMap::dense() const {
    std::vector<std::vector<Rational>> m(rows(), std::vector<Rational>(cols(), Rational(0)));
    for (const auto& [pos, v] : entries_) m[pos.first][pos.second] = v;
    return m;
}

std::size_t LinearMap::rank() const { return linalg::rank(dense()); }

void LinearMap::require_same_spaces(const LinearMap& o) const {
    if (domain_ != o.domain_ || codomain_ != o.codomain_)
        throw DimensionMismatch("LinearMap: operands act between different spaces");
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    if (a.domain_ != b.codomain_)
        throw DimensionMismatch("LinearMap: composing " + a.domain_sig_.to_string() + " with codomain " +
                                b.codomain_sig_.to_string());
    LinearMap out(b.domain_sig_, b.domain_, a.codomain_sig_, a.codomain_);
    // group a's entries by column for the inner index
    std::vector<std::vector<std::pair<std::size_t, Rational>>> a_by_col(a.cols());
    for (const auto& [pos, v] : a.entries_) a_by_col[pos.second].emplace_back(pos.first, v);
    for (const auto& [pos, v] : b.entries_)
        for (const auto& [row, w] : a_by_col[pos.first]) out.add(row, pos.second, w * v);
    return out;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    a.require_same_spaces(b);
    LinearMap out = a;
    for (const auto& [pos, v] : b.entries_) out.add(pos.first, pos.second, v);
    return out;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    a.require_same_spaces(b);
    LinearMap out = a;
    for (const auto& [pos, v] : b.entries_) out.add(pos.first, pos.second, -v);
    return out;
}

LinearMap operator*(const Rational& c, const LinearMap& a) {
    LinearMap out = a;
    out.entries_.clear();
    if (c.is_zero()) return out;
    for (const auto& [pos, v] : a.entries_) out.entries_.emplace(pos, c * v);
    return out;
}

// ---------------------------------------------------------------------------
// lower / raise
// ---------------------------------------------------------------------------

FockTensor lower(const FockTensor& t) {
    if (t.k() == 0) return FockTensor(t.signature());
    FockTensor out(t.d(), t.k() - 1, t.q() + 1);
    for (const auto& [label, c] : t.coeffs()) {
        for (std::size_t j = 0; j < label.sym.size(); ++j) {
            std::vector<int> sym = label.sym;
            sym.erase(sym.begin() + static_cast<std::ptrdiff_t>(j));
            std::vector<int> alt;
            alt.reserve(label.alt.size() + 1);
            alt.push_back(label.sym[j]);
            alt.insert(alt.end(), label.alt.begin(), label.alt.end());
            out.add_unordered(std::move(sym), std::move(alt), c);
        }
    }
    return out;
}

FockTensor raise(const FockTensor& t) {
    if (t.q() == 0) throw DegreeOutOfRange("raise: no exterior factor to move (q = 0)");
    FockTensor out(t.d(), t.k() + 1, t.q() - 1);
    for (const auto& [label, c] : t.coeffs()) {
        for (std::size_t i = 0; i < label.alt.size(); ++i) {
            std::vector<int> sym = label.sym;
            sym.push_back(label.alt[i]);
            std::vector<int> alt = label.alt;
            alt.erase(alt.begin() + static_cast<std::ptrdiff_t>(i));
            out.add_unordered(std::move(sym), std::move(alt), i % 2 == 0 ? c : -c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// S_n action and subset symmetrisers
// ---------------------------------------------------------------------------

FullTensor permute(const FullTensor& t, const Permutation& p) {
    if (p.degree() != t.n())
        throw DimensionMismatch("permute: permutation of degree " + std::to_string(p.degree()) + " on a degree " +
                                std::to_string(t.n()) + " tensor");
    FullTensor out(t.d(), t.n());
    std::vector<int> moved(static_cast<std::size_t>(t.n()));
    for (const auto& [key, c] : t.coeffs()) {
        const auto tuple = t.decode(key);
        for (int j = 1; j <= t.n(); ++j) moved[static_cast<std::size_t>(p(j) - 1)] = tuple[static_cast<std::size_t>(j - 1)];
        out.add(moved, c);
    }
    return out;
}

namespace {

FullTensor average_over_subset(const FullTensor& t, const PositionSet& a, bool signed_sum, const char* what) {
    if (a.max() > t.n())
        throw InvalidIndex(std::string(what) + ": position " + std::to_string(a.max()) + " outside 1.." +
                           std::to_string(t.n()));
    const int m = a.size();
    const Rational weight = Rational(1) / factorial(m);
    FullTensor out(t.d(), t.n());
    std::vector<int> moved;
    for (const auto& [key, c] : t.coeffs()) {
        const auto tuple = t.decode(key);
        const Rational base = c * weight;
        detail::for_each_permutation(m, [&](const std::vector<int>& rho, int sign) {
            moved = tuple;
            for (int i = 0; i < m; ++i)
                moved[static_cast<std::size_t>(a.members()[static_cast<std::size_t>(i)] - 1)] =
                    tuple[static_cast<std::size_t>(a.members()[static_cast<std::size_t>(rho[static_cast<std::size_t>(i)])] - 1)];
            out.add(moved, (signed_sum && sign < 0) ? -base : base);
        });
    }
    return out;
}

} // namespace

FullTensor sym_subset(const FullTensor& t, const PositionSet& a) { return average_over_subset(t, a, false, "sym_subset"); }

FullTensor alt_subset(const FullTensor& t, const PositionSet& a) { return average_over_subset(t, a, true, "alt_subset"); }

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

std::vector<Rational> coordinates(const FockTensor& t, const std::vector<MixedIndex>& basis) {
    std::vector<Rational> col(basis.size(), Rational(0));
    for (const auto& [label, c] : t.coeffs()) {
        const auto it = std::lower_bound(basis.begin(), basis.end(), label);
        if (it == basis.end() || *it != label) throw InvalidIndex("coordinates: label " + label.to_string() + " not in basis");
        col[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return col;
}

LinearMap operator_matrix(FockOperator which, int d, int k, int q) {
    if (k < 0 || q < 0) throw DegreeOutOfRange("operator_matrix: negative degree");
    if (which == FockOperator::raise && q == 0) throw DegreeOutOfRange("operator_matrix: raise needs q >= 1");
    const Signature dom{d, k, q};
    const Signature cod = which == FockOperator::lower ? Signature{d, k - 1, q + 1} : Signature{d, k + 1, q - 1};
    auto dom_basis = enum_basis(dom);
    auto cod_basis = enum_basis(cod); // empty when cod.k < 0
    LinearMap m(dom, dom_basis, cod, cod_basis);
    if (cod.degenerate()) return m;
    for (std::size_t j = 0; j < dom_basis.size(); ++j) {
        const auto e = FockTensor::basis(d, dom_basis[j]);
        const auto image = which == FockOperator::lower ? lower(e) : raise(e);
        const auto col = coordinates(image, cod_basis);
        for (std::size_t i = 0; i < col.size(); ++i) m.add(i, j, col[i]);
    }
    return m;
}

} // namespace hodgefock
