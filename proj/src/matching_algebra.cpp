#include "hw4k/matching_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace hw4k {

std::vector<Edge> expand_matching(const Matching& m, int k, int t) {
    if (k < 1 || t < 1) throw std::invalid_argument("expand_matching: k and t must be positive");
    if (m.i == m.j) throw std::invalid_argument("expand_matching: i = j");
    if (m.i < 0 || m.i >= 2 * t || m.j < 0 || m.j >= 2 * t)
        throw std::invalid_argument("expand_matching: block index out of range");
    if (m.d < 0 || m.d >= 2 * k) throw std::invalid_argument("expand_matching: offset out of range");
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(2 * k));
    for (int l = 0; l < 2 * k; ++l)
        out.emplace_back(encode_vertex(m.i, l, k, t), encode_vertex(m.j, (l + m.d) % (2 * k), k, t));
    return out;
}

std::vector<std::vector<VertexId>> chain_two_factor(std::span<const int> order,
                                                    std::span<const int> offsets, int k) {
    if (k < 1) throw std::invalid_argument("chain_two_factor: k must be positive");
    if (order.size() != offsets.size() || order.empty() || order.size() % 2 != 0)
        throw std::invalid_argument("chain_two_factor: order/offsets must have equal even length");
    const int len = static_cast<int>(order.size());
    const int t = len / 2;
    std::vector<bool> seen(static_cast<std::size_t>(len), false);
    for (int b : order) {
        if (b < 0 || b >= len || seen[static_cast<std::size_t>(b)])
            throw std::invalid_argument("chain_two_factor: order is not a permutation of Z_2t");
        seen[static_cast<std::size_t>(b)] = true;
    }
    for (int d : offsets)
        if (d < 0 || d >= 2 * k) throw std::invalid_argument("chain_two_factor: offset out of range");

    std::set<Edge> edges;
    for (int a = 0; a < len; ++a) {
        const Matching m{order[static_cast<std::size_t>(a)],
                         order[static_cast<std::size_t>((a + 1) % len)],
                         offsets[static_cast<std::size_t>(a)]};
        for (const Edge& e : expand_matching(m, k, t))
            if (!edges.insert(e).second)
                throw std::invalid_argument("chain_two_factor: union contains a repeated edge");
    }

    const int sum = std::accumulate(offsets.begin(), offsets.end(), 0) % (2 * k);
    const int g = std::gcd(sum, 2 * k);  // gcd(0, 2k) = 2k
    std::vector<std::vector<VertexId>> cycles;
    std::vector<bool> slot_used(static_cast<std::size_t>(2 * k), false);
    for (int s0 = 0; s0 < 2 * k; ++s0) {
        if (slot_used[static_cast<std::size_t>(s0)]) continue;
        std::vector<VertexId> cyc;
        int s = s0;
        do {
            slot_used[static_cast<std::size_t>(s)] = true;
            for (int a = 0; a < len; ++a) {
                cyc.push_back(encode_vertex(order[static_cast<std::size_t>(a)], s, k, t));
                s = (s + offsets[static_cast<std::size_t>(a)]) % (2 * k);
            }
        } while (s != s0);
        cycles.push_back(std::move(cyc));
    }
    if (static_cast<int>(cycles.size()) != g)
        throw std::logic_error("chain_two_factor: cycle count disagrees with gcd");
    return cycles;
}

std::vector<VertexId> bipartite_c4k(int i, int j, int d1, int d2, int k, int t) {
    if (k < 1) throw std::invalid_argument("bipartite_c4k: k must be positive");
    const int diff = ((d1 - d2) % (2 * k) + 2 * k) % (2 * k);
    if (std::gcd(diff, 2 * k) != 1)
        throw std::invalid_argument("bipartite_c4k: gcd(d1-d2, 2k) = " +
                                    std::to_string(std::gcd(diff, 2 * k)) + ", expected 1");
    std::vector<VertexId> cyc;
    cyc.reserve(static_cast<std::size_t>(4 * k));
    int s = 0;
    for (int a = 0; a < 2 * k; ++a) {
        cyc.push_back(encode_vertex(i, s, k, t));
        cyc.push_back(encode_vertex(j, (s + d1) % (2 * k), k, t));
        s = (s + diff) % (2 * k);
    }
    return cyc;
}

}  // namespace hw4k
