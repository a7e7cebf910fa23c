// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hodgefock/hodge.hpp"

#include <algorithm>

#include "hodgefock/errors.hpp"
#include "hodgefock/linalg.hpp"

namespace hodgefock {

LinearMap weitzenboeck_matrix(int d, int k, int q) {
    const Signature sig{d, k, q};
    auto basis = enum_basis(sig);
    LinearMap total(sig, basis, sig, basis);
    if (k >= 1) total = total + operator_matrix(FockOperator::raise, d, k - 1, q + 1) * operator_matrix(FockOperator::lower, d, k, q);
    if (q >= 1) total = total + operator_matrix(FockOperator::lower, d, k + 1, q - 1) * operator_matrix(FockOperator::raise, d, k, q);
    return total;
}

Rational weitzenboeck_defect(int d, int k, int q) {
    const auto lhs = weitzenboeck_matrix(d, k, q);
    return (lhs - Rational(k + q) * LinearMap::identity(Signature{d, k, q})).max_abs_entry();
}

bool ExactnessReport::exact() const {
    return std::all_of(rows.begin(), rows.end(), [](const ExactnessRow& r) { return r.ok(); });
}

ExactnessRow exactness_row(int d, int k, int q) {
    if (d < 1) throw InvalidIndex("exactness_row: d must be >= 1");
    if (k < 0 || q < 0) throw DegreeOutOfRange("exactness_row: negative degree");
    ExactnessRow row;
    row.k = k;
    row.q = q;
    row.dim = static_cast<std::size_t>(space_dim(Signature{d, k, q}));

    const auto lower_out = operator_matrix(FockOperator::lower, d, k, q);
    row.rank_lower = lower_out.rank();
    row.kernel_lower = row.dim - row.rank_lower;

    linalg::DenseMatrix stacked = lower_out.dense();
    if (q >= 1) {
        const auto raise_out = operator_matrix(FockOperator::raise, d, k, q);
        row.rank_raise = raise_out.rank();
        const auto dense = raise_out.dense();
        stacked.insert(stacked.end(), dense.begin(), dense.end());
    }
    row.kernel_raise = row.dim - row.rank_raise;
    row.harmonic = row.dim - linalg::rank(stacked);

    if (q >= 1) {
        const auto lower_in = operator_matrix(FockOperator::lower, d, k + 1, q - 1);
        row.image_lower_in = lower_in.rank();
        row.lower_squares_to_zero = (lower_out * lower_in).is_zero();
    }
    if (k >= 1) {
        const auto raise_in = operator_matrix(FockOperator::raise, d, k - 1, q + 1);
        row.image_raise_in = raise_in.rank();
        if (q >= 1) row.raise_squares_to_zero = (operator_matrix(FockOperator::raise, d, k, q) * raise_in).is_zero();
    }
    return row;
}

ExactnessReport exactness_report(int d, int n) {
    if (d < 1 || n < 1) throw InvalidIndex("exactness_report: need d >= 1 and n >= 1");
    ExactnessReport report;
    report.d = d;
    report.n = n;
    for (int k = 0; k <= n; ++k) report.rows.push_back(exactness_row(d, k, n - k));
    return report;
}

HodgeSplit hodge_split(const FockTensor& t) {
    const int n = t.n();
    if (n == 0) throw DegreeOutOfRange("hodge_split: the vacuum H_{0,0} has no split");
    const Rational inv_n = Rational(1, n);
    FockTensor plus(t.signature());
    FockTensor minus(t.signature());
    if (t.q() >= 1) plus = lower(raise(t)) * inv_n;
    if (t.k() >= 1) minus = raise(lower(t)) * inv_n;
    return {std::move(plus), std::move(minus)};
}

Witnesses witnesses(const MixedIndex& b, int d) {
    const int k = b.k();
    const int q = b.q();
    const int n = b.n();
    if (k < 1 || q < 1) throw DegreeOutOfRange("witnesses: need k >= 1 and q >= 1");
    if (!b.is_canonical(d)) throw InvalidIndex("witnesses: label " + b.to_string() + " is not canonical");
    const FullTensor base = embed(FockTensor::basis(d, b));

    FullTensor plus(d, n);
    for (int l = 1; l <= k + 1; ++l) plus += permute(base, Permutation::transposition(n, l, k + 1));
    plus *= Rational(1, k + 1);

    FullTensor minus = base;
    for (int m = k + 1; m <= n; ++m) minus -= permute(base, Permutation::transposition(n, k, m));
    minus *= Rational(1, q + 1);
    return {std::move(plus), std::move(minus)};
}

FockTensor random_fock_tensor(const Signature& sig, std::mt19937_64& gen) {
    FockTensor t(sig);
    for (const auto& label : enum_basis(sig)) t.add(label, Rational(static_cast<long>(gen() % 19) - 9));
    return t;
}

} // namespace hodgefock
