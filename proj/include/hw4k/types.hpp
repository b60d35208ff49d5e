#ifndef HW4K_TYPES_HPP
#define HW4K_TYPES_HPP

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hw4k {

/// Flat vertex id in [0, n). When block structure applies, id = block * 2k + slot.
using VertexId = int;

inline VertexId encode_vertex(int block, int slot, int k, int t) {
    if (k < 1 || t < 1) throw std::invalid_argument("encode_vertex: k and t must be positive");
    if (block < 0 || block >= 2 * t) throw std::invalid_argument("encode_vertex: block out of range");
    if (slot < 0 || slot >= 2 * k) throw std::invalid_argument("encode_vertex: slot out of range");
    return block * 2 * k + slot;
}

inline int vertex_block(VertexId v, int k) { return v / (2 * k); }
inline int vertex_slot(VertexId v, int k) { return v % (2 * k); }

/// Undirected edge, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("Edge: loop");
    }

    auto operator<=>(const Edge&) const = default;
};

/// Symbolic perfect matching (i,j)_d between blocks V_i and V_j:
/// edges {(i_l, j_{l+d mod 2k}) : l in Z_2k}. The pair (i, j) is ordered;
/// (i,j)_d expands to the same edge set as (j,i)_{2k-d}.
struct Matching {
    int i = 0;
    int j = 0;
    int d = 0;
};

enum class FactorKind { hamilton, c4k };

inline const char* to_string(FactorKind kind) {
    return kind == FactorKind::hamilton ? "hamilton" : "c4k";
}

/// A spanning set of disjoint cycles. kind=hamilton means one cycle through
/// all n vertices; kind=c4k means t cycles of length 4k each.
struct TwoFactor {
    FactorKind kind = FactorKind::hamilton;
    std::vector<std::vector<VertexId>> cycles;
};

/// Construction parameters: n = 4kt, r Hamilton-cycle factors,
/// s = (n-2)/2 - r C_4k-factors.
struct Params {
    int k = 0;
    int t = 0;
    int n = 0;
    int r = 0;
    int s = 0;

    static Params make(int k, int t, int r) {
        if (k < 1 || t < 1) throw std::invalid_argument("Params: k and t must be positive");
        Params p;
        p.k = k;
        p.t = t;
        p.n = 4 * k * t;
        p.r = r;
        p.s = (p.n - 2) / 2 - r;
        if (r < 0 || r > (p.n - 2) / 2) throw std::invalid_argument("Params: r out of range");
        return p;
    }
};

/// Serialized factorization: r hamilton + s c4k two-factors plus one perfect
/// matching (absent for odd n). Valid without trusting the generator.
struct Certificate {
    int n = 0;
    std::optional<int> k;
    std::optional<int> t;
    int r = 0;
    int s = 0;
    std::vector<TwoFactor> factors;
    std::optional<std::vector<Edge>> one_factor;
};

/// 1-factorization of the super-graph K_2t on blocks, with the traversal
/// order of each super-Hamilton-cycle F~_{2i-1} u F~_{2i}, i = 1..t-1.
struct SuperPlan {
    int t = 0;
    // factors[x], x in 1..2t-1; index 0 unused. Each is t unordered block pairs.
    std::vector<std::vector<std::pair<int, int>>> factors;
    // traversal[i], i in 1..t-1: block sequence of length 2t with the first
    // edge (W_0, W_1) in F~_{2i-1} and edges alternating between the pair.
    std::vector<std::vector<int>> traversal;
};

/// Rotate/reflect a cycle into canonical form: minimum vertex first,
/// proceeding toward the smaller of its two neighbors.
std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle);

/// Canonicalize every cycle of a factor and sort the cycles.
TwoFactor canonical_factor(TwoFactor f);

/// Edges of a closed cycle.
std::vector<Edge> cycle_edges(const std::vector<VertexId>& cycle);

}  // namespace hw4k

#endif
