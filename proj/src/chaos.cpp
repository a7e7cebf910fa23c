// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/chaos.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "hodgefock/errors.hpp"

namespace hodgefock {
namespace {

void require_dim(int d, const char* where) {
    if (d < 1) throw InvalidIndex(std::string(where) + ": dimension must be >= 1");
}

void require_variable(int d, int i, const char* where) {
    if (i < 1 || i > d)
        throw InvalidIndex(std::string(where) + ": variable " + std::to_string(i) + " outside 1.." + std::to_string(d));
}

// 2^j j! (n-2j)!
Rational pairing_weight(int n, int j) {
    Rational w = factorial(j) * factorial(n - 2 * j);
    for (int i = 0; i < j; ++i) w *= Rational(2);
    return w;
}

// One-variable change of basis. Monomial -> Hermite when to_hermite, else
// Hermite -> monomial: both are Σ_j c_j · (n - 2j) with c_j = ±n!/(2^j j!(n-2j)!).
std::vector<std::pair<int, Rational>> one_variable_terms(int n, bool to_hermite) {
    std::vector<std::pair<int, Rational>> out;
    for (int j = 0; 2 * j <= n; ++j) {
        Rational c = factorial(n) / pairing_weight(n, j);
        if (!to_hermite && j % 2 == 1) c = -c;
        out.emplace_back(n - 2 * j, c);
    }
    return out;
}

// Tensor product of the one-variable expansions of every entry of e.
template <typename Sink>
void expand_product(const Exponent& e, const Rational& c, bool to_hermite, Sink&& sink) {
    const int d = static_cast<int>(e.size());
    std::vector<std::vector<std::pair<int, Rational>>> factors;
    factors.reserve(e.size());
    for (int a : e) factors.push_back(one_variable_terms(a, to_hermite));

    Exponent out(e.size(), 0);
    std::function<void(int, const Rational&)> rec = [&](int i, const Rational& acc) {
        if (i == d) {
            sink(out, acc);
            return;
        }
        for (const auto& [deg, w] : factors[i]) {
            out[i] = deg;
            rec(i + 1, acc * w);
        }
    };
    rec(0, c);
}

std::string monomial_string(const Exponent& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::vector<int> multiplicities_to_sym(const Exponent& a) {
    std::vector<int> sym;
    for (std::size_t i = 0; i < a.size(); ++i) sym.insert(sym.end(), a[i], static_cast<int>(i) + 1);
    return sym;
}

Exponent sym_to_multiplicities(const std::vector<int>& sym, int d) {
    Exponent a(d, 0);
    for (int v : sym) ++a[v - 1];
    return a;
}

std::vector<int> validated_key(int d, std::vector<int> x, int& sign) {
    for (int v : x) require_variable(d, v, "form key");
    sign = canonicalize_alt(x);
    if (sign == 0) throw InvalidIndex("form key: repeated entry");
    return x;
}

} // namespace

// ---- Poly ----

Poly::Poly(int d) : d_(d) { require_dim(d, "Poly"); }

Poly Poly::constant(int d, const Rational& c) {
    Poly p(d);
    p.add(Exponent(d, 0), c);
    return p;
}

Poly Poly::variable(int d, int i) {
    require_variable(d, i, "Poly::variable");
    Exponent e(d, 0);
    e[i - 1] = 1;
    return monomial(d, std::move(e));
}

Poly Poly::monomial(int d, Exponent exponent, const Rational& c) {
    Poly p(d);
    p.add(exponent, c);
    return p;
}

Rational Poly::coeff(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int a : e) deg += a;
        best = std::max(best, deg);
    }
    return best;
}

void Poly::add(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != d_)
        throw DimensionMismatch("Poly::add: exponent length " + std::to_string(e.size()) + " vs d = " + std::to_string(d_));
    if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; }))
        throw InvalidIndex("Poly::add: negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::derivative(int i) const {
    require_variable(d_, i, "Poly::derivative");
    Poly out(d_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        Exponent f = e;
        --f[i - 1];
        out.add(f, c * Rational(e[i - 1]));
    }
    return out;
}

Poly Poly::times_variable(int i) const {
    require_variable(d_, i, "Poly::times_variable");
    Poly out(d_);
    for (const auto& [e, c] : terms_) {
        Exponent f = e;
        ++f[i - 1];
        out.add(f, c);
    }
    return out;
}

void Poly::require_same_dim(const Poly& o) const {
    if (d_ != o.d_) throw DimensionMismatch("Poly: d = " + std::to_string(d_) + " vs " + std::to_string(o.d_));
}

Poly& Poly::operator+=(const Poly& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_same_dim(o);
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_dim(b);
    Poly out(a.d_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out.add(e, ca * cb);
        }
    }
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const std::string mono = monomial_string(e);
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.empty()) {
            out += mag.to_string();
        } else if (mag == Rational(1)) {
            out += mono;
        } else {
            out += mag.to_string() + "*" + mono;
        }
    }
    return out;
}

// ---- HermiteExpansion ----

HermiteExpansion HermiteExpansion::from_poly(const Poly& p) {
    HermiteExpansion h(p.d());
    for (const auto& [e, c] : p.terms())
        expand_product(e, c, true, [&](const Exponent& a, const Rational& w) { h.add(a, w); });
    return h;
}

Poly HermiteExpansion::to_poly() const {
    Poly p(d_);
    for (const auto& [a, c] : terms_)
        expand_product(a, c, false, [&](const Exponent& e, const Rational& w) { p.add(e, w); });
    return p;
}

Rational HermiteExpansion::coeff(const Exponent& a) const {
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HermiteExpansion::add(const Exponent& a, const Rational& c) {
    if (static_cast<int>(a.size()) != d_) throw DimensionMismatch("HermiteExpansion::add: index length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

// ---- FormField ----

FormField::FormField(int d, int q) : d_(d), q_(q) {
    require_dim(d, "FormField");
    if (q < 0) throw DegreeOutOfRange("FormField: negative form degree");
}

Poly FormField::component(const Key& key) const {
    const auto it = comps_.find(key);
    return it == comps_.end() ? Poly(d_) : it->second;
}

void FormField::add(Key key, const Poly& f) {
    if (static_cast<int>(key.size()) != q_)
        throw DegreeOutOfRange("FormField::add: key of length " + std::to_string(key.size()) + " on a " +
                               std::to_string(q_) + "-form");
    if (f.d() != d_) throw DimensionMismatch("FormField::add: polynomial dimension mismatch");
    for (int v : key) require_variable(d_, v, "FormField::add");
    const int sign = canonicalize_alt(key);
    if (sign == 0 || f.is_zero()) return;
    auto [it, inserted] = comps_.try_emplace(key, Poly(d_));
    if (sign > 0) {
        it->second += f;
    } else {
        it->second -= f;
    }
    if (it->second.is_zero()) comps_.erase(it);
}

void FormField::require_same_shape(const FormField& o) const {
    if (d_ != o.d_ || q_ != o.q_) throw DimensionMismatch("FormField: shape mismatch");
}

FormField& FormField::operator+=(const FormField& o) {
    require_same_shape(o);
    for (const auto& [key, f] : o.comps_) add(key, f);
    return *this;
}

FormField& FormField::operator-=(const FormField& o) {
    require_same_shape(o);
    for (const auto& [key, f] : o.comps_) add(key, f * Rational(-1));
    return *this;
}

FormField& FormField::operator*=(const Rational& c) {
    if (c.is_zero()) {
        comps_.clear();
        return *this;
    }
    for (auto& [key, f] : comps_) f *= c;
    return *this;
}

std::string FormField::to_string() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, f] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.to_string() << ")";
        if (key.empty()) continue;
        os << "·e";
        for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "^" : "") << key[i];
    }
    return os.str();
}

// ---- Gaussian calculus ----

Poly hermite(int a) {
    if (a < 0) throw DegreeOutOfRange("hermite: negative degree");
    // He_{m+1} = x He_m - m He_{m-1}
    Poly prev(1);
    Poly cur = Poly::constant(1, Rational(1));
    for (int m = 0; m < a; ++m) {
        Poly next = cur.times_variable(1) - prev * Rational(m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational gaussian_moment(const Exponent& e) {
    Rational out(1);
    for (int a : e) {
        if (a < 0) throw InvalidIndex("gaussian_moment: negative exponent");
        if (a % 2 == 1) return Rational(0);
        for (int j = a - 1; j > 1; j -= 2) out *= Rational(j);
    }
    return out;
}

Poly psi(const FockTensor& s) {
    if (s.q() != 0) throw DegreeOutOfRange("psi: expects a symmetric tensor, got " + s.signature().to_string());
    HermiteExpansion h(s.d());
    for (const auto& [label, c] : s.coeffs()) h.add(sym_to_multiplicities(label.sym, s.d()), c);
    return h.to_poly();
}

FormField psi_q(const FockTensor& t) {
    FormField out(t.d(), t.q());
    std::map<std::vector<int>, HermiteExpansion> by_key;
    for (const auto& [label, c] : t.coeffs()) {
        auto [it, inserted] = by_key.try_emplace(label.alt, HermiteExpansion(t.d()));
        it->second.add(sym_to_multiplicities(label.sym, t.d()), c);
    }
    for (const auto& [key, h] : by_key) out.add(key, h.to_poly());
    return out;
}

std::map<int, FockTensor> psi_q_inverse(const FormField& u) {
    std::map<int, FockTensor> out;
    for (const auto& [key, f] : u.comps()) {
        const auto expansion = HermiteExpansion::from_poly(f);
        for (const auto& [a, c] : expansion.terms()) {
            auto sym = multiplicities_to_sym(a);
            const int k = static_cast<int>(sym.size());
            auto [it, inserted] = out.try_emplace(k, FockTensor(u.d(), k, u.q()));
            it->second.add(MixedIndex{std::move(sym), key}, c);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::set<int> hermite_support(const FormField& u) {
    std::set<int> degrees;
    for (const auto& [k, part] : psi_q_inverse(u)) degrees.insert(k);
    return degrees;
}

GradedFock exp_vector(std::span<const Rational> h, int N) {
    if (h.empty()) throw InvalidIndex("exp_vector: empty vector");
    if (N < 0) throw DegreeOutOfRange("exp_vector: negative truncation");
    const int d = static_cast<int>(h.size());
    GradedFock out;
    out.d = d;
    for (int k = 0; k <= N; ++k) {
        FockTensor part(d, k, 0);
        for (const auto& label : enum_basis(d, k, 0)) {
            Rational c(1);
            for (int i = 0; i < d; ++i) {
                const int a = static_cast<int>(std::count(label.sym.begin(), label.sym.end(), i + 1));
                for (int j = 0; j < a; ++j) c *= h[i];
                c /= factorial(a);
            }
            part.add(label, c);
        }
        if (!part.is_zero()) out.parts.emplace(k, std::move(part));
    }
    return out;
}

FormField d_sharp(const FormField& u) {
    FormField out(u.d(), u.q() + 1);
    for (const auto& [key, f] : u.comps()) {
        for (int i = 1; i <= u.d(); ++i) {
            if (std::find(key.begin(), key.end(), i) != key.end()) continue;
            std::vector<int> wedge{i};
            wedge.insert(wedge.end(), key.begin(), key.end());
            out.add(std::move(wedge), f.derivative(i));
        }
    }
    return out;
}

FormField d_star_sharp(const FormField& u) {
    if (u.q() == 0) throw DegreeOutOfRange("d_star_sharp: no (-1)-forms");
    FormField out(u.d(), u.q() - 1);
    for (const auto& [key, f] : u.comps()) {
        for (std::size_t i = 0; i < key.size(); ++i) {
            const int j = key[i];
            Poly g = f.times_variable(j) - f.derivative(j);
            if (i % 2 == 1) g *= Rational(-1);
            std::vector<int> rest = key;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            out.add(std::move(rest), g);
        }
    }
    return out;
}

Poly ou(const Poly& f) {
    Poly out(f.d());
    for (int i = 1; i <= f.d(); ++i) {
        const Poly di = f.derivative(i);
        out += di.times_variable(i) - di.derivative(i);
    }
    return out;
}

FormField hodge_laplacian(const FormField& u) {
    FormField out = d_star_sharp(d_sharp(u));
    if (u.q() >= 1) out += d_sharp(d_star_sharp(u));
    return out;
}

Rational gaussian_inner(const Poly& f, const Poly& g) {
    if (f.d() != g.d()) throw DimensionMismatch("gaussian_inner: dimension mismatch");
    Rational total(0);
    const Poly product = f * g;
    for (const auto& [e, c] : product.terms()) total += c * gaussian_moment(e);
    return total;
}

Rational gaussian_inner(const FormField& u, const FormField& v) {
    if (u.d() != v.d() || u.q() != v.q()) throw DimensionMismatch("gaussian_inner: form shape mismatch");
    Rational total(0);
    for (const auto& [key, f] : u.comps()) {
        const auto it = v.comps().find(key);
        if (it != v.comps().end()) total += gaussian_inner(f, it->second);
    }
    return total;
}

Rational expectation(const Poly& f) {
    return HermiteExpansion::from_poly(f).coeff(Exponent(f.d(), 0));
}

Poly iota(int d, const Rational& c) { return Poly::constant(d, c); }

FormField constant_form(int d, const std::vector<int>& x) {
    int sign = 0;
    auto key = validated_key(d, x, sign);
    FormField out(d, static_cast<int>(x.size()));
    out.add(std::move(key), Poly::constant(d, Rational(sign)));
    return out;
}

FormField diagram_defect(std::span<const Rational> h, const std::vector<int>& x, int N) {
    if (N < 1) throw DegreeOutOfRange("diagram_defect: truncation must be >= 1");
    const int d = static_cast<int>(h.size());
    if (d < 1) throw InvalidIndex("diagram_defect: empty vector");
    int sign = 0;
    validated_key(d, x, sign);
    const int q = static_cast<int>(x.size());

    const GradedFock e = exp_vector(h, N);
    FormField lhs(d, q);
    FormField rhs(d, q + 1);
    for (const auto& [k, part] : e.parts) {
        FockTensor with_x(d, k, q);
        FockTensor with_hx(d, k, q + 1);
        for (const auto& [label, c] : part.coeffs()) {
            with_x.add_unordered(label.sym, x, c);
            for (int i = 1; i <= d; ++i) {
                if (h[i - 1].is_zero()) continue;
                std::vector<int> wedge{i};
                wedge.insert(wedge.end(), x.begin(), x.end());
                with_hx.add_unordered(label.sym, std::move(wedge), c * h[i - 1]);
            }
        }
        lhs += psi_q(with_x);
        rhs += psi_q(with_hx);
    }
    return d_sharp(lhs) - rhs;
}

} // namespace hodgefock
