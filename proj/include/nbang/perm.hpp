/**
 * @file perm.hpp
 * @brief Small S_n utilities: signs, enumeration, cycle-type representatives
 *        and the diagonal extension to the 2n-variable ring.
 */
#ifndef NBANG_PERM_HPP
#define NBANG_PERM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "nbang/partition.hpp"

namespace nbang {

using Perm = std::vector<int>;  ///< images, 0-based: i -> perm[i]

inline Perm identity_perm(int n) {
    Perm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline bool is_identity(const Perm& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != static_cast<int>(i)) return false;
    return true;
}

inline int perm_sign(const Perm& w) {
    int inv = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            if (w[a] > w[b]) ++inv;
    return inv % 2 ? -1 : 1;
}

inline std::vector<Perm> all_permutations(int n) {
    Perm w = identity_perm(n);
    std::vector<Perm> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// One representative per conjugacy class: consecutive cycles of the sizes
/// given by each partition of n.
inline std::vector<Perm> cycle_type_representatives(int n) {
    std::vector<Perm> reps;
    for (const auto& lambda : partitions_of(n)) {
        Perm w = identity_perm(n);
        int base = 0;
        for (int len : lambda.parts()) {
            for (int k = 0; k < len; ++k)
                w[static_cast<std::size_t>(base + k)] = base + (k + 1) % len;
            base += len;
        }
        reps.push_back(std::move(w));
    }
    return reps;
}

inline Perm transposition(int n, int a, int b) {
    Perm w = identity_perm(n);
    std::swap(w[static_cast<std::size_t>(a)], w[static_cast<std::size_t>(b)]);
    return w;
}

inline Perm full_cycle(int n) {
    Perm w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (i + 1) % n;
    return w;
}

/// Diagonal action on C[X_1..X_n, Y_1..Y_n]: permutes the X block and the
/// Y block simultaneously.
inline Perm diagonal_xy(const Perm& w) {
    const int n = static_cast<int>(w.size());
    Perm ext(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        ext[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)];
        ext[static_cast<std::size_t>(n + i)] = n + w[static_cast<std::size_t>(i)];
    }
    return ext;
}

}  // namespace nbang

#endif
