// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <vector>

#include "hodgefock/errors.hpp"
#include "hodgefock/tensor_core.hpp"

using namespace hodgefock;

namespace {

// All n-tuples over [1..d] in lexicographic order.
std::vector<std::vector<int>> all_tuples(int d, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 1);
    while (true) {
        out.push_back(cur);
        int i = n - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == d) cur[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
    }
    return out;
}

// Brute-force basis: filter every (k-tuple, q-tuple) pair for canonical form.
std::vector<MixedIndex> brute_basis(int d, int k, int q) {
    std::vector<MixedIndex> out;
    for (const auto& s : all_tuples(d, k)) {
        if (!std::is_sorted(s.begin(), s.end())) continue;
        for (const auto& a : all_tuples(d, q)) {
            if (std::adjacent_find(a.begin(), a.end(), std::greater_equal<>()) != a.end()) continue;
            out.push_back(MixedIndex{s, a});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

FullTensor full(int d, std::initializer_list<std::pair<std::vector<int>, long>> terms) {
    const int n = static_cast<int>(terms.begin()->first.size());
    FullTensor t(d, n);
    for (const auto& [tuple, c] : terms) t.add(tuple, Rational(c));
    return t;
}

} // namespace

TEST_CASE("enum_basis matches brute-force enumeration") {
    for (int d = 1; d <= 3; ++d)
        for (int k = 0; k <= 4; ++k)
            for (int q = 0; q <= 4; ++q) {
                const auto basis = enum_basis(d, k, q);
                CHECK(basis == brute_basis(d, k, q));
                CHECK(static_cast<std::int64_t>(basis.size()) == binomial(d + k - 1, k) * binomial(d, q));
                CHECK(space_dim(Signature{d, k, q}) == static_cast<std::int64_t>(basis.size()));
            }
}

TEST_CASE("enum_basis examples") {
    const auto b = enum_basis(2, 1, 1);
    const std::vector<MixedIndex> expected{{{1}, {1}}, {{1}, {2}}, {{2}, {1}}, {{2}, {2}}};
    CHECK(b == expected);
    CHECK(enum_basis(2, 0, 3).empty());
    CHECK(enum_basis(3, 2, 2).size() == 18);
    CHECK(enum_basis(2, -1, 3).empty());
    CHECK_THROWS_AS(enum_basis(0, 1, 1), InvalidIndex);
}

TEST_CASE("MixedIndex rendering and parsing") {
    const MixedIndex b{{1, 1}, {2, 3}};
    CHECK(b.to_string() == "(1,1;2,3)");
    CHECK(MixedIndex::parse("(1,1;2,3)") == b);
    CHECK(MixedIndex::parse("(;1,2)") == MixedIndex{{}, {1, 2}});
    CHECK(MixedIndex::parse("(;)") == MixedIndex{});
    CHECK(b.is_canonical(3));
    CHECK_FALSE(b.is_canonical(2));
    CHECK_FALSE((MixedIndex{{2, 1}, {}}).is_canonical(3));
    CHECK_FALSE((MixedIndex{{}, {2, 2}}).is_canonical(3));
    CHECK(b.sym_stabilizer_order() == Rational(2));
    CHECK_FALSE(b.distinct_entries());
    CHECK((MixedIndex{{1}, {2, 3}}).distinct_entries());
    CHECK_THROWS(MixedIndex::parse("1;2"));
}

TEST_CASE("canonicalize_alt returns the sorting sign") {
    std::vector<int> a{3, 1, 2};
    CHECK(canonicalize_alt(a) == 1);
    CHECK(a == std::vector<int>{1, 2, 3});
    std::vector<int> b{2, 1};
    CHECK(canonicalize_alt(b) == -1);
    std::vector<int> c{1, 3, 1};
    CHECK(canonicalize_alt(c) == 0);
}

TEST_CASE("FockTensor arithmetic and rendering") {
    FockTensor t(3, 2, 2);
    t.add(MixedIndex{{1, 1}, {2, 3}}, Rational(3, 2));
    CHECK(t.to_string() == "3/2·(1,1;2,3)");
    t.add_unordered({2, 1}, {3, 1}, Rational(1));
    CHECK(t.coeff(MixedIndex{{1, 2}, {1, 3}}) == Rational(-1));
    CHECK(t.to_string() == "3/2·(1,1;2,3) - 1·(1,2;1,3)");
    t.add_unordered({1, 1}, {2, 2}, Rational(5));
    CHECK(t.size() == 2);
    CHECK((t - t).is_zero());
    CHECK((t - t).to_string() == "0");
    CHECK(t * Rational(0) == FockTensor(3, 2, 2));
    CHECK_THROWS_AS(t + FockTensor(3, 1, 3), DimensionMismatch);
    CHECK_THROWS_AS(t.add(MixedIndex{{2, 1}, {2, 3}}, Rational(1)), InvalidIndex);
    CHECK_THROWS_AS(FockTensor(0, 1, 1), InvalidIndex);
    CHECK_THROWS_AS(FockTensor(2, -1, 1), DegreeOutOfRange);
}

TEST_CASE("FullTensor keys and rendering") {
    FullTensor t(3, 2);
    CHECK(t.ambient_dim() == 9);
    const std::vector<int> tuple{2, 3};
    CHECK(t.decode(t.encode(tuple)) == tuple);
    t.add(std::vector<int>{1, 2}, Rational(1));
    t.add(std::vector<int>{2, 1}, Rational(-1));
    CHECK(t.to_string() == "1·(1,2) - 1·(2,1)");
    CHECK_THROWS_AS(t.add(std::vector<int>{1, 4}, Rational(1)), InvalidIndex);
    CHECK_THROWS_AS(t + FullTensor(3, 3), DimensionMismatch);
}

TEST_CASE("embed examples") {
    CHECK(embed(FockTensor::basis(2, MixedIndex{{1, 2}, {}})) == full(2, {{{1, 2}, 1}, {{2, 1}, 1}}));
    CHECK(embed(FockTensor::basis(2, MixedIndex{{}, {1, 2}})) == full(2, {{{1, 2}, 1}, {{2, 1}, -1}}));
    CHECK(embed(FockTensor::basis(3, MixedIndex{{1}, {2, 3}})) == full(3, {{{1, 2, 3}, 1}, {{1, 3, 2}, -1}}));
    // unnormalized sum: e1⊙e1 ↦ 2 e1⊗e1
    CHECK(embed(FockTensor::basis(2, MixedIndex{{1, 1}, {}})) == full(2, {{{1, 1}, 2}}));
}

TEST_CASE("embed is injective on basis labels") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const auto basis = enum_basis(d, k, n - k);
                std::vector<FullTensor> images;
                for (const auto& b : basis) images.push_back(embed(FockTensor::basis(d, b)));
                for (std::size_t i = 0; i < images.size(); ++i) {
                    CHECK_FALSE(images[i].is_zero());
                    for (std::size_t j = i + 1; j < images.size(); ++j) CHECK(images[i] != images[j]);
                }
            }
}

TEST_CASE("project_mixed undoes embed up to k!q!") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const int q = n - k;
                const Rational scale = factorial(k) * factorial(q);
                for (const auto& b : enum_basis(d, k, q)) {
                    const auto t = FockTensor::basis(d, b);
                    CHECK(project_mixed(embed(t), k) == t * scale);
                }
            }
}

TEST_CASE("project_mixed examples") {
    const auto b = FockTensor::basis(3, MixedIndex{{1}, {2, 3}});
    CHECK(project_mixed(embed(b), 1) == b * Rational(2));

    // Skew average over slots 2,3 is ½(e1⊗e1⊗e2 - e1⊗e2⊗e1) = ½ embed((1;1,2)),
    // so the k!q! = 2 scaling gives coefficient 1.
    const auto t = full(2, {{{1, 1, 2}, 1}});
    FockTensor expected(2, 1, 2);
    expected.add(MixedIndex{{1}, {1, 2}}, Rational(1));
    CHECK(project_mixed(t, 1) == expected);

    CHECK(project_mixed(full(2, {{{1, 1}, 1}}), 0).is_zero());
    CHECK_THROWS_AS(project_mixed(t, 4), DegreeOutOfRange);
}

TEST_CASE("inner product examples") {
    const auto wedge = FockTensor::basis(2, MixedIndex{{}, {1, 2}});
    CHECK(inner(wedge, wedge) == Rational(1));
    const auto sq = FockTensor::basis(1, MixedIndex{{1, 1}, {}});
    CHECK(inner(sq, sq) == Rational(2));
    const auto mixed = FockTensor::basis(3, MixedIndex{{1, 2}, {3}});
    CHECK(inner(mixed, mixed) == Rational(1));
    CHECK_THROWS_AS(inner(wedge, sq), DimensionMismatch);

    const auto e12 = full(2, {{{1, 2}, 1}});
    const auto e21 = full(2, {{{2, 1}, 1}});
    CHECK(inner_full(e12, e12) == Rational(1));
    CHECK(inner_full(e12, e21) == Rational(0));
    CHECK(inner_full(e12 - e21, e12 - e21) == Rational(2));
    CHECK_THROWS_AS(inner_full(e12, FullTensor(2, 3)), DimensionMismatch);
}

TEST_CASE("inner equals the scaled full inner product of embeddings") {
    for (int d = 1; d <= 3; ++d)
        for (int n = 0; n <= 4; ++n)
            for (int k = 0; k <= n; ++k) {
                const int q = n - k;
                const Rational scale = Rational(1) / (factorial(k) * factorial(q));
                const auto basis = enum_basis(d, k, q);
                for (const auto& a : basis)
                    for (const auto& b : basis) {
                        const auto ta = FockTensor::basis(d, a);
                        const auto tb = FockTensor::basis(d, b);
                        CHECK(inner(ta, tb) == scale * inner_full(embed(ta), embed(tb)));
                    }
            }
}
