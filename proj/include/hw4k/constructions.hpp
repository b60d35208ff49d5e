#ifndef HW4K_CONSTRUCTIONS_HPP
#define HW4K_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "hw4k/types.hpp"

namespace hw4k {

/// H_l on a super-cycle traversal W_0..W_{2t-1}:
/// (W_0,W_1)_l u (W_1,W_2)_{2k-l} u ... u (W_{2t-1},W_0)_{2k-l}.
/// Offset sum 0 mod 2k, so H_l alone is 2k cycles of length 2t.
struct HFamily {
    std::vector<int> super_cycle;
    int l = 0;
};

/// 1-factorization of K_2t with the canonical F~_1, F~_2, F~_{2t-1} and the
/// recorded super-Hamilton-cycle traversals.
SuperPlan make_super_plan(int t);

/// F_{2i-1} u F_{2i} -> r_i Hamilton factors + (2k - r_i) C_4k-factors
/// (r_i even, 0 <= r_i <= 2k).
std::vector<TwoFactor> decompose_pair(const SuperPlan& plan, int pair_index, int r_i, int k);

struct BlocksDecomposition {
    std::vector<TwoFactor> factors;  // 2k-1 c4k factors
    std::vector<Edge> one_factor;
};

/// F_x u (union of K_{V_i}) = t K_4k -> 2k-1 C_4k-factors + a 1-factor.
/// With designated_leftover, each block's leftover matching is forced to
/// (i,j)_0, so the 1-factor is the union of (i,j)_0 over super-edges of F~_x.
BlocksDecomposition decompose_blocks(const SuperPlan& plan, int x, bool designated_leftover, int k);

struct F1Decomposition {
    std::vector<TwoFactor> factors;  // k-1 c4k factors + 1 hamilton factor
    std::vector<Edge> one_factor;
};

/// F_1 u i_prime -> (k-1) C_4k-factors, one HC, and the 1-factor
/// I_n = (0,1)_0 u (2,3)_{2k-1} u ... Requires
/// i_prime = (1,2)_0 u (3,4)_0 u ... u (2t-1,0)_0 exactly, t >= 2.
F1Decomposition decompose_f1_with_matching(const SuperPlan& plan, const std::vector<Edge>& i_prime,
                                           int k);

/// F_x -> k C_4k-factors: factor d pairs offsets (2d, 2d+1) over each
/// super-edge of F~_x.
std::vector<TwoFactor> blowup_to_c4k(const SuperPlan& plan, int x, int k);

struct TripleDecomposition {
    std::vector<TwoFactor> factors;  // r_1 hamilton + (4k-1-r_1) c4k
    std::vector<Edge> one_factor;
};

/// F_1 u F_2 u F_{2t-1} u (union of K_{V_i}) -> r_1 HCs, 4k-1-r_1
/// C_4k-factors and a 1-factor, for r_1 in {2k..4k-1}, t >= 2.
TripleDecomposition decompose_triple(const SuperPlan& plan, int r_1, int k);

}  // namespace hw4k

#endif
