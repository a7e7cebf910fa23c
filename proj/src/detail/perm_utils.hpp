// Copyright 2026 The hodgefock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace hodgefock::detail {

/// Sign of a permutation of 0..m-1 given as an image vector.
inline int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// Calls f(perm, sign) for each of the m! permutations of 0..m-1 in lexicographic order.
template <typename F>
void for_each_permutation(int m, F&& f) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        f(perm, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

} // namespace hodgefock::detail
