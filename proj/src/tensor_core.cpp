// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/tensor_core.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "detail/perm_utils.hpp"
#include "hodgefock/errors.hpp"

namespace hodgefock {

namespace {

std::string join_ints(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad index list '" + s + "'");
        out.push_back(v);
    }
    return out;
}

template <typename Map, typename Render>
std::string render_terms(const Map& coeffs, Render&& render_key) {
    if (coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : coeffs) {
        if (first) {
            out += c.to_string();
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += c.abs().to_string();
        }
        out += "·";
        out += render_key(key);
        first = false;
    }
    return out;
}

// Non-decreasing k-tuples over [1..d] in lexicographic order.
void multisets(int d, int k, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= d; ++v) {
        cur.push_back(v);
        multisets(d, k, v, cur, out);
        cur.pop_back();
    }
}

// Strictly increasing q-tuples over [1..d] in lexicographic order.
void subsets(int d, int q, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == q) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= d; ++v) {
        cur.push_back(v);
        subsets(d, q, v + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

// ---------------------------------------------------------------------------
// Signature / MixedIndex
// ---------------------------------------------------------------------------

std::string Signature::to_string() const {
    return "(d=" + std::to_string(d) + ",k=" + std::to_string(k) + ",q=" + std::to_string(q) + ")";
}

bool MixedIndex::is_canonical(int d) const {
    for (std::size_t i = 0; i < sym.size(); ++i) {
        if (sym[i] < 1 || sym[i] > d) return false;
        if (i && sym[i - 1] > sym[i]) return false;
    }
    for (std::size_t i = 0; i < alt.size(); ++i) {
        if (alt[i] < 1 || alt[i] > d) return false;
        if (i && alt[i - 1] >= alt[i]) return false;
    }
    return true;
}

bool MixedIndex::distinct_entries() const {
    std::vector<int> all = sym;
    all.insert(all.end(), alt.begin(), alt.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Rational MixedIndex::sym_stabilizer_order() const {
    Rational order(1);
    std::size_t i = 0;
    while (i < sym.size()) {
        std::size_t j = i;
        while (j < sym.size() && sym[j] == sym[i]) ++j;
        order *= factorial(static_cast<int>(j - i));
        i = j;
    }
    return order;
}

std::string MixedIndex::to_string() const { return "(" + join_ints(sym) + ";" + join_ints(alt) + ")"; }

MixedIndex MixedIndex::parse(const std::string& text) {
    if (text.size() < 3 || text.front() != '(' || text.back() != ')')
        throw std::invalid_argument("MixedIndex::parse: malformed '" + text + "'");
    const std::string body = text.substr(1, text.size() - 2);
    const auto semi = body.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("MixedIndex::parse: missing ';' in '" + text + "'");
    return MixedIndex{parse_ints(body.substr(0, semi)), parse_ints(body.substr(semi + 1))};
}

int canonicalize_alt(std::vector<int>& alt) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < alt.size(); ++i) {
        for (std::size_t j = i; j > 0 && alt[j - 1] >= alt[j]; --j) {
            if (alt[j - 1] == alt[j]) return 0;
            std::swap(alt[j - 1], alt[j]);
            sign = -sign;
        }
    }
    return sign;
}

std::vector<MixedIndex> enum_basis(int d, int k, int q) {
    if (d < 1) throw InvalidIndex("enum_basis: dimension must be >= 1");
    std::vector<MixedIndex> out;
    if (k < 0 || q < 0 || q > d) return out;
    std::vector<std::vector<int>> syms;
    std::vector<std::vector<int>> alts;
    std::vector<int> cur;
    multisets(d, k, 1, cur, syms);
    subsets(d, q, 1, cur, alts);
    out.reserve(syms.size() * alts.size());
    for (const auto& s : syms)
        for (const auto& a : alts) out.push_back(MixedIndex{s, a});
    return out;
}

std::int64_t space_dim(const Signature& s) {
    if (s.degenerate()) return 0;
    return binomial(s.d + s.k - 1, s.k) * binomial(s.d, s.q);
}

// ---------------------------------------------------------------------------
// FockTensor
// ---------------------------------------------------------------------------

FockTensor::FockTensor(int d, int k, int q) : sig_{d, k, q} {
    if (d < 1) throw InvalidIndex("FockTensor: dimension must be >= 1");
    if (k < 0 || q < 0) throw DegreeOutOfRange("FockTensor: negative degree in " + sig_.to_string());
}

FockTensor FockTensor::basis(int d, const MixedIndex& label) {
    FockTensor t(d, label.k(), label.q());
    t.add(label, Rational(1));
    return t;
}

Rational FockTensor::coeff(const MixedIndex& label) const {
    const auto it = coeffs_.find(label);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void FockTensor::add(const MixedIndex& label, const Rational& c) {
    if (label.k() != sig_.k || label.q() != sig_.q || !label.is_canonical(sig_.d))
        throw InvalidIndex("FockTensor::add: label " + label.to_string() + " is not canonical for " + sig_.to_string());
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(label, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void FockTensor::add_unordered(std::vector<int> sym, std::vector<int> alt, const Rational& c) {
    const int sign = canonicalize_alt(alt);
    if (sign == 0) return;
    std::sort(sym.begin(), sym.end());
    add(MixedIndex{std::move(sym), std::move(alt)}, sign > 0 ? c : -c);
}

void FockTensor::require_same_signature(const FockTensor& o) const {
    if (sig_ != o.sig_)
        throw DimensionMismatch("FockTensor: signature " + sig_.to_string() + " vs " + o.sig_.to_string());
}

FockTensor& FockTensor::operator+=(const FockTensor& o) {
    require_same_signature(o);
    for (const auto& [label, c] : o.coeffs_) add(label, c);
    return *this;
}

FockTensor& FockTensor::operator-=(const FockTensor& o) {
    require_same_signature(o);
    for (const auto& [label, c] : o.coeffs_) add(label, -c);
    return *this;
}

FockTensor& FockTensor::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [label, v] : coeffs_) v *= c;
    return *this;
}

std::string FockTensor::to_string() const {
    return render_terms(coeffs_, [](const MixedIndex& m) { return m.to_string(); });
}

// ---------------------------------------------------------------------------
// FullTensor
// ---------------------------------------------------------------------------

FullTensor::FullTensor(int d, int n) : d_(d), n_(n) {
    if (d < 1) throw InvalidIndex("FullTensor: dimension must be >= 1");
    if (n < 0) throw DegreeOutOfRange("FullTensor: negative degree");
    long double size = 1;
    for (int i = 0; i < n; ++i) size *= d;
    if (size > static_cast<long double>(std::numeric_limits<Key>::max() / 2))
        throw InvalidIndex("FullTensor: d^n exceeds the key range");
}

FullTensor FullTensor::basis(int d, std::span<const int> tuple) {
    FullTensor t(d, static_cast<int>(tuple.size()));
    t.add(tuple, Rational(1));
    return t;
}

FullTensor::Key FullTensor::ambient_dim() const {
    Key size = 1;
    for (int i = 0; i < n_; ++i) size *= static_cast<Key>(d_);
    return size;
}

FullTensor::Key FullTensor::encode(std::span<const int> tuple) const {
    if (static_cast<int>(tuple.size()) != n_)
        throw DimensionMismatch("FullTensor: tuple of length " + std::to_string(tuple.size()) + " in degree " +
                                std::to_string(n_));
    Key key = 0;
    for (int v : tuple) {
        if (v < 1 || v > d_) throw InvalidIndex("FullTensor: index " + std::to_string(v) + " outside [1.." + std::to_string(d_) + "]");
        key = key * static_cast<Key>(d_) + static_cast<Key>(v - 1);
    }
    return key;
}

std::vector<int> FullTensor::decode(Key key) const {
    std::vector<int> tuple(static_cast<std::size_t>(n_));
    for (int i = n_ - 1; i >= 0; --i) {
        tuple[static_cast<std::size_t>(i)] = static_cast<int>(key % static_cast<Key>(d_)) + 1;
        key /= static_cast<Key>(d_);
    }
    return tuple;
}

Rational FullTensor::coeff(std::span<const int> tuple) const { return coeff_at(encode(tuple)); }

Rational FullTensor::coeff_at(Key key) const {
    const auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void FullTensor::add(std::span<const int> tuple, const Rational& c) { add_at(encode(tuple), c); }

void FullTensor::add_at(Key key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void FullTensor::require_same_shape(const FullTensor& o) const {
    if (d_ != o.d_ || n_ != o.n_)
        throw DimensionMismatch("FullTensor: shape (d=" + std::to_string(d_) + ",n=" + std::to_string(n_) +
                                ") vs (d=" + std::to_string(o.d_) + ",n=" + std::to_string(o.n_) + ")");
}

FullTensor& FullTensor::operator+=(const FullTensor& o) {
    require_same_shape(o);
    for (const auto& [key, c] : o.coeffs_) add_at(key, c);
    return *this;
}

FullTensor& FullTensor::operator-=(const FullTensor& o) {
    require_same_shape(o);
    for (const auto& [key, c] : o.coeffs_) add_at(key, -c);
    return *this;
}

FullTensor& FullTensor::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, v] : coeffs_) v *= c;
    return *this;
}

std::string FullTensor::to_string() const {
    return render_terms(coeffs_, [this](Key key) { return "(" + join_ints(decode(key)) + ")"; });
}

// ---------------------------------------------------------------------------
// embed / project_mixed / inner products
// ---------------------------------------------------------------------------

FullTensor embed(const FockTensor& t) {
    const int k = t.k();
    const int q = t.q();
    FullTensor out(t.d(), t.n());
    std::vector<int> tuple(static_cast<std::size_t>(k + q));
    for (const auto& [label, c] : t.coeffs()) {
        detail::for_each_permutation(k, [&](const std::vector<int>& rho, int) {
            for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] = label.sym[static_cast<std::size_t>(rho[static_cast<std::size_t>(i)])];
            detail::for_each_permutation(q, [&](const std::vector<int>& sigma, int sign) {
                for (int i = 0; i < q; ++i)
                    tuple[static_cast<std::size_t>(k + i)] = label.alt[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])];
                out.add(tuple, sign > 0 ? c : -c);
            });
        });
    }
    return out;
}

FockTensor project_mixed(const FullTensor& t, int k) {
    const int n = t.n();
    if (k < 0 || k > n) throw DegreeOutOfRange("project_mixed: k outside [0..n]");
    const int q = n - k;
    // S_{1..k} then A_{k+1..n}, without the 1/(k! q!) prefactors: the
    // un-normalised sum is exactly k! q! S A t.
    FullTensor sa(t.d(), n);
    std::vector<int> tuple;
    std::vector<int> moved(static_cast<std::size_t>(n));
    for (const auto& [key, c] : t.coeffs()) {
        tuple = t.decode(key);
        detail::for_each_permutation(k, [&](const std::vector<int>& rho, int) {
            for (int i = 0; i < k; ++i) moved[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(rho[static_cast<std::size_t>(i)])];
            detail::for_each_permutation(q, [&](const std::vector<int>& sigma, int sign) {
                for (int i = 0; i < q; ++i)
                    moved[static_cast<std::size_t>(k + i)] = tuple[static_cast<std::size_t>(k + sigma[static_cast<std::size_t>(i)])];
                sa.add(moved, sign > 0 ? c : -c);
            });
        });
    }
    // With S A t = Σ_b x_b embed(b), the result is k! q! x_b. embed(b) carries
    // ∏ a_i! at the canonical key of b, so k! q! x_b = sa[key(b)] / ∏ a_i!.
    FockTensor out(t.d(), k, q);
    for (const auto& [key, c] : sa.coeffs()) {
        auto full = sa.decode(key);
        MixedIndex label{std::vector<int>(full.begin(), full.begin() + k), std::vector<int>(full.begin() + k, full.end())};
        if (!label.is_canonical(t.d())) continue;
        out.add(label, c / label.sym_stabilizer_order());
    }
    return out;
}

Rational inner(const FockTensor& t, const FockTensor& u) {
    if (t.signature() != u.signature())
        throw DimensionMismatch("inner: signature " + t.signature().to_string() + " vs " + u.signature().to_string());
    Rational sum(0);
    const auto& small = t.size() <= u.size() ? t : u;
    const auto& large = t.size() <= u.size() ? u : t;
    for (const auto& [label, c] : small.coeffs()) {
        const auto it = large.coeffs().find(label);
        if (it == large.coeffs().end()) continue;
        sum += c * it->second * label.sym_stabilizer_order();
    }
    return sum;
}

Rational inner_full(const FullTensor& t, const FullTensor& u) {
    if (t.d() != u.d() || t.n() != u.n()) throw DimensionMismatch("inner_full: shape mismatch");
    Rational sum(0);
    const auto& small = t.size() <= u.size() ? t : u;
    const auto& large = t.size() <= u.size() ? u : t;
    for (const auto& [key, c] : small.coeffs()) {
        const auto it = large.coeffs().find(key);
        if (it != large.coeffs().end()) sum += c * it->second;
    }
    return sum;
}

} // namespace hodgefock
