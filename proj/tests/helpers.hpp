#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "tlp/binary_matrix.hpp"

namespace tlp::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEE);
    return gen;
}

inline BinaryMatrix random_matrix(int rows, int cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (bit(rng())) m.set(i, j, true);
    return m;
}

inline BinaryMatrix random_shuffle_rows_cols(const BinaryMatrix& m) {
    std::vector<int> ro(std::size_t(m.rows())), co(std::size_t(m.cols()));
    std::iota(ro.begin(), ro.end(), 0);
    std::iota(co.begin(), co.end(), 0);
    std::shuffle(ro.begin(), ro.end(), rng());
    std::shuffle(co.begin(), co.end(), rng());
    return m.permuted(ro, co);
}

/// Exhaustive isomorphism decision over all row and column permutations;
/// only sensible for tiny matrices.
inline bool isomorphic_by_permutation_search(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::vector<int> ro(std::size_t(a.rows())), co(std::size_t(a.cols()));
    std::iota(ro.begin(), ro.end(), 0);
    do {
        std::vector<int> c = co;
        std::iota(c.begin(), c.end(), 0);
        do {
            if (a.permuted(ro, c) == b) return true;
        } while (std::next_permutation(c.begin(), c.end()));
    } while (std::next_permutation(ro.begin(), ro.end()));
    return false;
}

}  // namespace tlp::testing
