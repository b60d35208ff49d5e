#ifndef HW4K_MATCHING_ALGEBRA_HPP
#define HW4K_MATCHING_ALGEBRA_HPP

#include <span>
#include <vector>

#include "hw4k/types.hpp"

namespace hw4k {

/// Expand the symbolic matching (i,j)_d into its 2k edges on V_i u V_j.
std::vector<Edge> expand_matching(const Matching& m, int k, int t);

/// Traverse the union (pi(0),pi(1))_{d_0} u ... u (pi(2t-1),pi(0))_{d_{2t-1}}
/// into its cycles. With g = gcd(sum d_x mod 2k, 2k) the result is g disjoint
/// cycles of length 2t * 2k / g; g = 1 gives a single Hamilton cycle.
/// Rejects non-permutation orders and unions with a repeated edge.
std::vector<std::vector<VertexId>> chain_two_factor(std::span<const int> order,
                                                    std::span<const int> offsets, int k);

/// The 4k-cycle (i_0, j_{d1}, i_{d1-d2}, j_{2d1-d2}, ...) formed by
/// (i,j)_{d1} u (i,j)_{d2}. Requires gcd(d1 - d2, 2k) = 1.
std::vector<VertexId> bipartite_c4k(int i, int j, int d1, int d2, int k, int t);

}  // namespace hw4k

#endif
