#ifndef HW4K_WALECKI_HPP
#define HW4K_WALECKI_HPP

#include <span>
#include <vector>

#include "hw4k/types.hpp"

namespace hw4k {

struct WaleckiEven {
    // m-1 Hamilton cycles on 2m vertices; the first is (0, 1, ..., 2m-1).
    std::vector<std::vector<VertexId>> hcs;
    // {(0, m)} u {(i, 2m-i) : 1 <= i <= m-1}; together with hcs, partitions E(K_2m).
    std::vector<Edge> i_factor;
};

/// Hamilton decomposition of K_2m minus a 1-factor, m >= 2.
WaleckiEven walecki_even(int m);

/// m Hamilton cycles partitioning E(K_{2m+1}), m >= 1.
std::vector<std::vector<VertexId>> walecki_odd(int m);

/// m Hamilton paths partitioning E(K_2m); path j has endpoints j and j+m.
std::vector<std::vector<VertexId>> ham_path_decomp(int m);

/// Image of a vertex-sequence decomposition under a bijection of [0, n).
std::vector<std::vector<VertexId>> relabel(const std::vector<std::vector<VertexId>>& seqs,
                                           std::span<const VertexId> target_order);

}  // namespace hw4k

#endif
