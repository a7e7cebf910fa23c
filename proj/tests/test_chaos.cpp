// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "hodgefock/chaos.hpp"
#include "hodgefock/errors.hpp"
#include "hodgefock/fock_ops.hpp"
#include "hodgefock/linalg.hpp"

using namespace hodgefock;

namespace {

Poly x(int d, int i) { return Poly::variable(d, i); }
Poly c(int d, long v) { return Poly::constant(d, Rational(v)); }

FormField form(int d, std::vector<int> key, const Poly& f) {
    FormField u(d, static_cast<int>(key.size()));
    u.add(std::move(key), f);
    return u;
}

FockTensor basis(int d, std::vector<int> sym, std::vector<int> alt) {
    return FockTensor::basis(d, MixedIndex{std::move(sym), std::move(alt)});
}

// Exponent vectors of total degree <= max_deg.
std::vector<Exponent> exponents(int d, int max_deg) {
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(d), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == d) {
            out.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(i)] = a;
            rec(i + 1, left - a);
        }
    };
    rec(0, max_deg);
    return out;
}

// Strictly increasing q-subsets of 1..d.
std::vector<std::vector<int>> keys(int d, int q) {
    std::vector<std::vector<int>> out;
    for (const auto& a : enum_basis(d, 0, q)) out.push_back(a.alt);
    return out;
}

// He_n from the explicit sum Σ_j (-1)^j n!/(2^j j!(n-2j)!) x^{n-2j}.
Poly hermite_closed_form(int n) {
    Poly p(1);
    for (int j = 0; 2 * j <= n; ++j) {
        Rational coef = factorial(n) / (factorial(j) * factorial(n - 2 * j));
        for (int i = 0; i < j; ++i) coef /= Rational(-2);
        p.add(Exponent{n - 2 * j}, coef);
    }
    return p;
}

Rational double_factorial_moment(int a) {
    if (a % 2) return Rational(0);
    Rational r(1);
    for (int j = a - 1; j > 0; j -= 2) r *= Rational(j);
    return r;
}

} // namespace

TEST_CASE("Poly arithmetic and rendering") {
    const Poly p = x(2, 1) * x(2, 1) * x(2, 2) - x(2, 2) * Rational(3, 2) + c(2, 1);
    CHECK(p.to_string() == "x1^2*x2 - 3/2*x2 + 1");
    CHECK(p.degree() == 3);
    CHECK(Poly(2).degree() == -1);
    CHECK(Poly(2).to_string() == "0");
    CHECK(p.derivative(1) == x(2, 1) * x(2, 2) * Rational(2));
    CHECK(p.derivative(2) == x(2, 1) * x(2, 1) - c(2, 1) * Rational(3, 2));
    CHECK(c(2, 5).times_variable(2) == x(2, 2) * Rational(5));
    CHECK((p - p).is_zero());
    CHECK_THROWS_AS(Poly(0), InvalidIndex);
    CHECK_THROWS_AS(x(2, 3), InvalidIndex);
    CHECK_THROWS_AS(x(2, 1) + x(3, 1), DimensionMismatch);
}

TEST_CASE("hermite recurrence") {
    CHECK(hermite(0) == c(1, 1));
    CHECK(hermite(1) == x(1, 1));
    CHECK(hermite(2) == x(1, 1) * x(1, 1) - c(1, 1));
    CHECK(hermite(3) == x(1, 1) * x(1, 1) * x(1, 1) - x(1, 1) * Rational(3));
    for (int n = 0; n <= 10; ++n) CHECK(hermite(n) == hermite_closed_form(n));
    CHECK_THROWS_AS(hermite(-1), DegreeOutOfRange);
}

TEST_CASE("Hermite expansion inverts exactly") {
    for (int d = 1; d <= 3; ++d)
        for (const auto& e : exponents(d, 5)) {
            const Poly m = Poly::monomial(d, e, Rational(1));
            CHECK(HermiteExpansion::from_poly(m).to_poly() == m);
            HermiteExpansion h(d);
            h.add(e, Rational(1));
            CHECK(HermiteExpansion::from_poly(h.to_poly()) == h);
        }
    // x^2 = He_2 + He_0
    const auto h = HermiteExpansion::from_poly(x(1, 1) * x(1, 1));
    CHECK(h.coeff({2}) == Rational(1));
    CHECK(h.coeff({0}) == Rational(1));
}

TEST_CASE("Gaussian moments") {
    for (int a = 0; a <= 8; ++a) CHECK(gaussian_moment({a}) == double_factorial_moment(a));
    CHECK(gaussian_moment({2, 4}) == Rational(3));
    CHECK(gaussian_moment({1, 2}) == Rational(0));
    // E[He_a He_b] = a! δ_ab
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b) CHECK(gaussian_inner(hermite(a), hermite(b)) == (a == b ? factorial(a) : Rational(0)));
}

TEST_CASE("psi examples") {
    CHECK(psi(basis(1, {1, 1}, {})) == x(1, 1) * x(1, 1) - c(1, 1));
    CHECK(psi(basis(2, {1, 2}, {})) == x(2, 1) * x(2, 2));
    CHECK(psi(FockTensor::basis(3, MixedIndex{})) == c(3, 1));
    CHECK_THROWS_AS(psi(basis(2, {1}, {2})), DegreeOutOfRange);
}

TEST_CASE("psi_q examples and inverse") {
    CHECK(psi_q(basis(2, {1}, {2})) == form(2, {2}, x(2, 1)));
    CHECK(psi_q(basis(2, {}, {1, 2})) == form(2, {1, 2}, c(2, 1)));
    CHECK(psi_q(basis(2, {1, 1}, {2})) == form(2, {2}, x(2, 1) * x(2, 1) - c(2, 1)));

    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& b : enum_basis(d, k, n - k)) {
                    const auto t = FockTensor::basis(d, b);
                    CHECK(psi_q_inverse(psi_q(t)) == std::map<int, FockTensor>{{k, t}});
                    CHECK(hermite_support(psi_q(t)) == std::set<int>{k});
                }
}

TEST_CASE("exp_vector examples") {
    const std::vector<Rational> e1{Rational(1), Rational(0)};
    const auto g = exp_vector(e1, 2);
    REQUIRE(g.parts.size() == 3);
    CHECK(g.parts.at(0) == FockTensor::basis(2, MixedIndex{}));
    CHECK(g.parts.at(1) == basis(2, {1}, {}));
    CHECK(g.parts.at(2) == basis(2, {1, 1}, {}) * Rational(1, 2));

    const std::vector<Rational> zero{Rational(0), Rational(0), Rational(0)};
    for (int N = 0; N <= 4; ++N) {
        const auto z = exp_vector(zero, N);
        REQUIRE(z.parts.size() == 1);
        CHECK(z.parts.at(0) == FockTensor::basis(3, MixedIndex{}));
    }

    const std::vector<Rational> sum{Rational(1), Rational(1)};
    FockTensor two(2, 2, 0);
    two.add(MixedIndex{{1, 1}, {}}, Rational(1, 2));
    two.add(MixedIndex{{1, 2}, {}}, Rational(1));
    two.add(MixedIndex{{2, 2}, {}}, Rational(1, 2));
    CHECK(exp_vector(sum, 2).parts.at(2) == two);

    CHECK_THROWS_AS(exp_vector(std::vector<Rational>{}, 2), InvalidIndex);
    CHECK_THROWS_AS(exp_vector(e1, -1), DegreeOutOfRange);
}

TEST_CASE("Psi of an exponential vector is the stochastic exponential") {
    // coefficient of t^m in exp(t x - t^2/2) is He_m(x)/m!
    const std::vector<Rational> h{Rational(3, 2)};
    const auto g = exp_vector(h, 5);
    for (const auto& [k, part] : g.parts) {
        Rational scale = factorial(k);
        for (int i = 0; i < k; ++i) scale /= h[0];
        CHECK(psi(part) * scale == hermite(k));
    }
}

TEST_CASE("d_sharp examples") {
    CHECK(d_sharp(form(1, {}, x(1, 1) * x(1, 1) - c(1, 1))) == form(1, {1}, x(1, 1) * Rational(2)));
    CHECK(d_sharp(form(2, {1}, x(2, 2))) == form(2, {1, 2}, c(2, -1)));
    CHECK(d_sharp(form(3, {2}, c(3, 7))).is_zero());
    CHECK(d_sharp(form(2, {1}, x(2, 2))).q() == 2);
}

TEST_CASE("d_star_sharp examples") {
    CHECK(d_star_sharp(form(1, {1}, c(1, 1))) == form(1, {}, x(1, 1)));
    CHECK(d_star_sharp(form(1, {1}, x(1, 1) * x(1, 1) - c(1, 1))) == form(1, {}, hermite(3)));
    CHECK(d_star_sharp(form(2, {1}, x(2, 2))) == form(2, {}, x(2, 1) * x(2, 2)));
    CHECK_THROWS_AS(d_star_sharp(form(2, {}, c(2, 1))), DegreeOutOfRange);
}

TEST_CASE("ou examples and Hermite eigenvalues") {
    CHECK(ou(x(1, 1) * x(1, 1) - c(1, 1)) == (x(1, 1) * x(1, 1) - c(1, 1)) * Rational(2));
    CHECK(ou(c(2, 1)).is_zero());
    CHECK(ou(x(2, 1) * x(2, 2)) == x(2, 1) * x(2, 2) * Rational(2));
    for (const auto& e : exponents(2, 5)) {
        HermiteExpansion h(2);
        h.add(e, Rational(1));
        CHECK(ou(h.to_poly()) == h.to_poly() * Rational(e[0] + e[1]));
    }
}

TEST_CASE("gaussian_inner examples") {
    CHECK(gaussian_inner(hermite(2), hermite(2)) == Rational(2));
    for (int k = 1; k <= 5; ++k) CHECK(gaussian_inner(c(1, 1), hermite(k)) == Rational(0));
    const auto u = form(2, {1, 2}, x(2, 1));
    CHECK(gaussian_inner(u, u) == Rational(1));
    CHECK(gaussian_inner(u, form(2, {1, 2}, x(2, 2))) == Rational(0));
    CHECK_THROWS_AS(gaussian_inner(u, form(2, {1}, x(2, 1))), DimensionMismatch);
}

TEST_CASE("hodge_laplacian examples") {
    const auto u = psi_q(basis(2, {1}, {2}));
    CHECK(u == form(2, {2}, x(2, 1)));
    CHECK(hodge_laplacian(u) == u * Rational(2));
    const auto e1 = form(2, {1}, c(2, 4));
    CHECK(hodge_laplacian(e1) == e1);
    CHECK(hodge_laplacian(form(3, {}, c(3, 1))).is_zero());
}

TEST_CASE("expectation examples") {
    CHECK(expectation(hermite(2)) == Rational(0));
    CHECK(expectation(c(1, 1)) == Rational(1));
    CHECK(expectation(x(1, 1) * x(1, 1)) == Rational(1));
    for (int d = 1; d <= 2; ++d)
        for (const auto& e : exponents(d, 6)) {
            const Poly m = Poly::monomial(d, e, Rational(1));
            CHECK(expectation(m) == gaussian_moment(e));
            CHECK(expectation(m) == gaussian_inner(m, iota(d, Rational(1))));
        }
    CHECK(expectation(iota(3, Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("Psi is an isometry on small bases") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 3; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto b = enum_basis(d, k, n - k);
                for (const auto& u : b)
                    for (const auto& v : b) {
                        const auto tu = FockTensor::basis(d, u);
                        const auto tv = FockTensor::basis(d, v);
                        CHECK(gaussian_inner(psi_q(tu), psi_q(tv)) == inner(tu, tv));
                    }
            }
}

TEST_CASE("d_sharp intertwines with lower and d_star_sharp with raise") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const int q = n - k;
                for (const auto& b : enum_basis(d, k, q)) {
                    const auto t = FockTensor::basis(d, b);
                    const auto u = psi_q(t);
                    if (k >= 1) {
                        CHECK(d_sharp(u) == psi_q(lower(t)));
                    } else {
                        CHECK(d_sharp(u).is_zero());
                    }
                    if (q >= 1) CHECK(d_star_sharp(u) == psi_q(raise(t)));
                }
            }
}

TEST_CASE("adjointness and nilpotency on monomial fields") {
    for (int d = 1; d <= 2; ++d)
        for (int q = 0; q < d; ++q)
            for (const auto& ka : keys(d, q))
                for (const auto& kb : keys(d, q + 1))
                    for (const auto& ea : exponents(d, 3))
                        for (const auto& eb : exponents(d, 3)) {
                            const auto u = form(d, ka, Poly::monomial(d, ea));
                            const auto v = form(d, kb, Poly::monomial(d, eb));
                            CHECK(gaussian_inner(d_sharp(u), v) == gaussian_inner(u, d_star_sharp(v)));
                        }
    for (int d = 1; d <= 3; ++d)
        for (int q = 0; q <= d; ++q)
            for (const auto& key : keys(d, q))
                for (const auto& e : exponents(d, 3)) {
                    const auto u = form(d, key, Poly::monomial(d, e));
                    CHECK(d_sharp(d_sharp(u)).is_zero());
                    if (q >= 2) CHECK(d_star_sharp(d_star_sharp(u)).is_zero());
                }
}

TEST_CASE("Laplacian equals OU plus q on every chaos block") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const int q = n - k;
                for (const auto& b : enum_basis(d, k, q)) {
                    const auto u = psi_q(FockTensor::basis(d, b));
                    const auto lap = hodge_laplacian(u);
                    CHECK(lap == u.map_components([](const Poly& f) { return ou(f); }) + u * Rational(q));
                    CHECK(lap == u * Rational(n));
                }
            }
}

TEST_CASE("harmonic 0-forms on a truncation are the constants") {
    const int d = 2;
    const auto basis_exps = exponents(d, 4);
    linalg::DenseMatrix m;
    for (const auto& row : basis_exps) {
        std::vector<Rational> line;
        for (const auto& col : basis_exps) line.push_back(ou(Poly::monomial(d, col)).coeff(row));
        m.push_back(line);
    }
    CHECK(linalg::rank(m) == basis_exps.size() - 1);
    CHECK(ou(c(d, 3)).is_zero());
}

TEST_CASE("diagram defect lives in the top Hermite degree") {
    const std::vector<Rational> e1{Rational(1)};
    const auto top = diagram_defect(e1, {}, 3);
    CHECK_FALSE(top.is_zero());
    CHECK(hermite_support(top) == std::set<int>{3});

    const std::vector<Rational> e1_in_2{Rational(1), Rational(0)};
    const auto with_x = diagram_defect(e1_in_2, {2}, 4);
    CHECK(hermite_support(with_x) == std::set<int>{4});

    const std::vector<Rational> zero{Rational(0), Rational(0), Rational(0)};
    for (int N = 1; N <= 4; ++N) CHECK(diagram_defect(zero, {1, 3}, N).is_zero());

    CHECK_THROWS_AS(diagram_defect(e1, {}, 0), DegreeOutOfRange);
    CHECK_THROWS_AS(diagram_defect(e1_in_2, {3}, 2), InvalidIndex);
    CHECK_THROWS_AS(diagram_defect(e1_in_2, {1, 1}, 2), InvalidIndex);
}

TEST_CASE("diagram defect equals the dropped top term") {
    const std::vector<std::vector<Rational>> hs{
        {Rational(1), Rational(-2)}, {Rational(1, 2), Rational(3)}, {Rational(0), Rational(5, 3)}};
    for (const auto& h : hs)
        for (const std::vector<int>& xkey : {std::vector<int>{}, std::vector<int>{1}, std::vector<int>{2}})
            for (int N = 1; N <= 4; ++N) {
                const int q = static_cast<int>(xkey.size());
                const auto topk = exp_vector(h, N).parts;
                FockTensor dropped(2, N, q + 1);
                if (topk.count(N)) {
                    for (const auto& [label, coef] : topk.at(N).coeffs())
                        for (int i = 1; i <= 2; ++i) {
                            std::vector<int> wedge{i};
                            wedge.insert(wedge.end(), xkey.begin(), xkey.end());
                            dropped.add_unordered(label.sym, wedge, coef * h[static_cast<std::size_t>(i - 1)]);
                        }
                }
                CHECK(diagram_defect(h, xkey, N) == psi_q(dropped) * Rational(-1));
            }
}
