#include "hw4k/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hw4k/matching_algebra.hpp"
#include "hw4k/walecki.hpp"

namespace hw4k {

namespace {

// Local traversal helper; the verifier keeps its own, independent one.
std::vector<std::vector<VertexId>> extract_cycles(const std::vector<Edge>& edges) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2)
            throw std::logic_error("extract_cycles: vertex " + std::to_string(v) +
                                   " has degree " + std::to_string(nb.size()));
    std::set<VertexId> seen;
    std::vector<std::vector<VertexId>> cycles;
    for (const auto& [v0, nb0] : adj) {
        if (seen.contains(v0)) continue;
        std::vector<VertexId> cyc{v0};
        seen.insert(v0);
        VertexId prev = v0, cur = nb0[0];
        while (cur != v0) {
            cyc.push_back(cur);
            seen.insert(cur);
            const auto& nb = adj[cur];
            const VertexId nxt = nb[0] != prev ? nb[0] : nb[1];
            prev = cur;
            cur = nxt;
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<int> identity_order(int t) {
    std::vector<int> order(static_cast<std::size_t>(2 * t));
    for (int a = 0; a < 2 * t; ++a) order[static_cast<std::size_t>(a)] = a;
    return order;
}

// H_{2l} u H_{2l+1} on traversal W -> two HCs (matching swap on the closing
// super-edge) or two C_4k-factors (same-super-edge offset pairing).
std::vector<TwoFactor> pair_layer(const std::vector<int>& W, int l, bool as_hc, int k) {
    const int len = static_cast<int>(W.size());
    std::vector<TwoFactor> out;
    if (as_hc) {
        for (int which = 0; which < 2; ++which) {
            const int la = which == 0 ? 2 * l : 2 * l + 1;
            const int lb = which == 0 ? 2 * l + 1 : 2 * l;
            std::vector<int> offsets(static_cast<std::size_t>(len));
            for (int a = 0; a + 1 < len; ++a)
                offsets[static_cast<std::size_t>(a)] = a % 2 == 0 ? la : (2 * k - la) % (2 * k);
            offsets[static_cast<std::size_t>(len - 1)] = (2 * k - lb) % (2 * k);
            auto cycles = chain_two_factor(W, offsets, k);
            if (cycles.size() != 1)
                throw std::logic_error("pair_layer: matching swap did not yield a single cycle");
            out.push_back(TwoFactor{FactorKind::hamilton, std::move(cycles)});
        }
    } else {
        TwoFactor even_side{FactorKind::c4k, {}};
        TwoFactor odd_side{FactorKind::c4k, {}};
        for (int a = 0; a < len; a += 2)
            even_side.cycles.push_back(
                bipartite_c4k(W[static_cast<std::size_t>(a)], W[static_cast<std::size_t>(a + 1)],
                              2 * l, 2 * l + 1, k, len / 2));
        for (int a = 1; a < len; a += 2)
            odd_side.cycles.push_back(bipartite_c4k(W[static_cast<std::size_t>(a)],
                                                    W[static_cast<std::size_t>((a + 1) % len)],
                                                    (2 * k - 2 * l) % (2 * k),
                                                    (2 * k - 2 * l - 1 + 2 * k) % (2 * k), k,
                                                    len / 2));
        out.push_back(std::move(even_side));
        out.push_back(std::move(odd_side));
    }
    return out;
}

}  // namespace

SuperPlan make_super_plan(int t) {
    if (t < 1) throw std::invalid_argument("make_super_plan: t must be >= 1");
    SuperPlan plan;
    plan.t = t;
    plan.factors.resize(static_cast<std::size_t>(2 * t));
    plan.traversal.resize(static_cast<std::size_t>(t));
    if (t == 1) {
        plan.factors[1] = {{0, 1}};
        return plan;
    }
    const WaleckiEven w = walecki_even(t);  // on the 2t blocks
    for (int i = 1; i < t; ++i) {
        const auto cyc = canonical_cycle(w.hcs[static_cast<std::size_t>(i - 1)]);
        auto& odd_f = plan.factors[static_cast<std::size_t>(2 * i - 1)];
        auto& even_f = plan.factors[static_cast<std::size_t>(2 * i)];
        for (int a = 0; a < 2 * t; ++a) {
            const int u = cyc[static_cast<std::size_t>(a)];
            const int v = cyc[static_cast<std::size_t>((a + 1) % (2 * t))];
            (a % 2 == 0 ? odd_f : even_f).emplace_back(std::min(u, v), std::max(u, v));
        }
        plan.traversal[static_cast<std::size_t>(i)] = cyc;
    }
    for (const Edge& e : w.i_factor)
        plan.factors[static_cast<std::size_t>(2 * t - 1)].emplace_back(e.u, e.v);
    return plan;
}

std::vector<TwoFactor> decompose_pair(const SuperPlan& plan, int pair_index, int r_i, int k) {
    if (pair_index < 1 || pair_index > plan.t - 1)
        throw std::invalid_argument("decompose_pair: pair index out of range");
    if (r_i % 2 != 0 || r_i < 0 || r_i > 2 * k)
        throw std::invalid_argument("decompose_pair: r_i must be even in [0, 2k]");
    const auto& W = plan.traversal[static_cast<std::size_t>(pair_index)];
    std::vector<TwoFactor> out;
    for (int l = 0; l < k; ++l) {
        auto layer = pair_layer(W, l, l < r_i / 2, k);
        std::move(layer.begin(), layer.end(), std::back_inserter(out));
    }
    return out;
}

BlocksDecomposition decompose_blocks(const SuperPlan& plan, int x, bool designated_leftover,
                                     int k) {
    if (x < 1 || x > 2 * plan.t - 1)
        throw std::invalid_argument("decompose_blocks: factor index out of range");
    const int t = plan.t;
    const WaleckiEven w = walecki_even(2 * k);  // inside one K_4k
    BlocksDecomposition out;
    out.factors.assign(static_cast<std::size_t>(2 * k - 1), TwoFactor{FactorKind::c4k, {}});
    for (const auto& [bi, bj] : plan.factors[static_cast<std::size_t>(x)]) {
        // w_l -> i_l for l < 2k, w_{2k+s} -> j_{2k-s}; sends the leftover
        // 1-factor of K_4k onto (i,j)_0.
        auto lab = [&, bi = bi, bj = bj](VertexId v) {
            if (v < 2 * k) return encode_vertex(bi, v, k, t);
            const int s = v - 2 * k;
            return encode_vertex(bj, (2 * k - s) % (2 * k), k, t);
        };
        for (std::size_t c = 0; c < w.hcs.size(); ++c) {
            std::vector<VertexId> cyc;
            cyc.reserve(w.hcs[c].size());
            for (VertexId v : w.hcs[c]) cyc.push_back(lab(v));
            out.factors[c].cycles.push_back(std::move(cyc));
        }
        for (const Edge& e : w.i_factor) out.one_factor.emplace_back(lab(e.u), lab(e.v));
    }
    if (designated_leftover) {
        std::set<Edge> got(out.one_factor.begin(), out.one_factor.end());
        std::set<Edge> want;
        for (const auto& [bi, bj] : plan.factors[static_cast<std::size_t>(x)])
            for (const Edge& e : expand_matching(Matching{bi, bj, 0}, k, t)) want.insert(e);
        if (got != want)
            throw std::logic_error("decompose_blocks: designated leftover is not the (i,j)_0 union");
    }
    return out;
}

F1Decomposition decompose_f1_with_matching(const SuperPlan& plan, const std::vector<Edge>& i_prime,
                                           int k) {
    const int t = plan.t;
    if (t < 2) throw std::invalid_argument("decompose_f1_with_matching: t must be >= 2");
    std::set<Edge> want;
    for (int a = 0; a < t; ++a)
        for (const Edge& e : expand_matching(Matching{2 * a + 1, (2 * a + 2) % (2 * t), 0}, k, t))
            want.insert(e);
    if (std::set<Edge>(i_prime.begin(), i_prime.end()) != want)
        throw std::invalid_argument(
            "decompose_f1_with_matching: i_prime is not (1,2)_0 u (3,4)_0 u ... u (2t-1,0)_0");

    F1Decomposition out;
    for (int i = 1; i < k; ++i) {
        TwoFactor f{FactorKind::c4k, {}};
        for (int a = 0; a < t; ++a)
            f.cycles.push_back(bipartite_c4k(2 * a, 2 * a + 1, 2 * i - 1, 2 * i, k, t));
        out.factors.push_back(std::move(f));
    }
    // HC_1 = (0,1)_{2k-1} u (1,2)_0 u (2,3)_0 u ... u (2t-1,0)_0
    std::vector<int> offsets(static_cast<std::size_t>(2 * t), 0);
    offsets[0] = 2 * k - 1;
    auto cycles = chain_two_factor(identity_order(t), offsets, k);
    if (cycles.size() != 1) throw std::logic_error("decompose_f1_with_matching: HC_1 not a single cycle");
    out.factors.push_back(TwoFactor{FactorKind::hamilton, std::move(cycles)});
    // I_n = (0,1)_0 u (2,3)_{2k-1} u ... u (2t-2,2t-1)_{2k-1}
    for (const Edge& e : expand_matching(Matching{0, 1, 0}, k, t)) out.one_factor.push_back(e);
    for (int a = 1; a < t; ++a)
        for (const Edge& e : expand_matching(Matching{2 * a, 2 * a + 1, 2 * k - 1}, k, t))
            out.one_factor.push_back(e);
    return out;
}

std::vector<TwoFactor> blowup_to_c4k(const SuperPlan& plan, int x, int k) {
    if (x < 1 || x > 2 * plan.t - 1)
        throw std::invalid_argument("blowup_to_c4k: factor index out of range");
    std::vector<TwoFactor> out;
    for (int d = 0; d < k; ++d) {
        TwoFactor f{FactorKind::c4k, {}};
        for (const auto& [bi, bj] : plan.factors[static_cast<std::size_t>(x)])
            f.cycles.push_back(bipartite_c4k(bi, bj, 2 * d, 2 * d + 1, k, plan.t));
        out.push_back(std::move(f));
    }
    return out;
}

TripleDecomposition decompose_triple(const SuperPlan& plan, int r_1, int k) {
    const int t = plan.t;
    if (t < 2) throw std::invalid_argument("decompose_triple: t must be >= 2");
    if (r_1 < 2 * k || r_1 > 4 * k - 1)
        throw std::invalid_argument("decompose_triple: r_1 must be in [2k, 4k-1]");
    const int n = 4 * k * t;
    TripleDecomposition out;

    // (a)+(b): Hamilton-path decompositions of the t blocks of F_{2t-1} u X,
    // glued per slot j with the t edges (0_j,1_j), (2_j,3_j), ... from H_0.
    const auto paths = ham_path_decomp(2 * k);
    for (int j = 0; j < 2 * k; ++j) {
        std::vector<Edge> edges;
        for (const auto& [bi, bj] : plan.factors[static_cast<std::size_t>(2 * t - 1)]) {
            auto lab = [&, bi = bi, bj = bj](VertexId v) {
                return v < 2 * k ? encode_vertex(bi, v, k, t) : encode_vertex(bj, v - 2 * k, k, t);
            };
            const auto& p = paths[static_cast<std::size_t>(j)];
            for (std::size_t a = 0; a + 1 < p.size(); ++a) edges.emplace_back(lab(p[a]), lab(p[a + 1]));
        }
        for (int a = 0; a < t; ++a)
            edges.emplace_back(encode_vertex(2 * a, j, k, t), encode_vertex(2 * a + 1, j, k, t));
        auto cycles = extract_cycles(edges);
        if (cycles.size() != 1 || static_cast<int>(cycles[0].size()) != n)
            throw std::logic_error("decompose_triple: glued paths did not close into one HC");
        out.factors.push_back(TwoFactor{FactorKind::hamilton, std::move(cycles)});
    }

    // (c): spend H_1 u (H_0 - used matchings); branch on the parity of r_1.
    if (r_1 % 2 == 1) {
        // HC_2k = H_1 u (2t-1,0)_0 - (2t-1,0)_{2k-1}
        std::vector<int> offsets(static_cast<std::size_t>(2 * t));
        for (int a = 0; a < 2 * t; ++a)
            offsets[static_cast<std::size_t>(a)] = a % 2 == 0 ? 1 : 2 * k - 1;
        offsets[static_cast<std::size_t>(2 * t - 1)] = 0;
        auto cycles = chain_two_factor(identity_order(t), offsets, k);
        if (cycles.size() != 1) throw std::logic_error("decompose_triple: HC_2k not a single cycle");
        out.factors.push_back(TwoFactor{FactorKind::hamilton, std::move(cycles)});
        for (int a = 0; a + 1 < t; ++a)
            for (const Edge& e : expand_matching(Matching{2 * a + 1, 2 * a + 2, 0}, k, t))
                out.one_factor.push_back(e);
        for (const Edge& e : expand_matching(Matching{2 * t - 1, 0, 2 * k - 1}, k, t))
            out.one_factor.push_back(e);
    } else {
        // C = union over odd pairs of (2j+1,2j+2)_0 u (2j+1,2j+2)_{2k-1}
        TwoFactor f{FactorKind::c4k, {}};
        for (int a = 0; a < t; ++a)
            f.cycles.push_back(bipartite_c4k(2 * a + 1, (2 * a + 2) % (2 * t), 0, 2 * k - 1, k, t));
        out.factors.push_back(std::move(f));
        for (int a = 0; a < t; ++a)
            for (const Edge& e : expand_matching(Matching{2 * a, 2 * a + 1, 1}, k, t))
                out.one_factor.push_back(e);
    }

    // (d): remaining H_{2l} u H_{2l+1}, l = 1..k-1.
    const int hc_pairs = (r_1 - (2 * k + r_1 % 2)) / 2;
    const auto W = identity_order(t);
    for (int l = 1; l < k; ++l) {
        auto layer = pair_layer(W, l, l - 1 < hc_pairs, k);
        std::move(layer.begin(), layer.end(), std::back_inserter(out.factors));
    }

    int n_hamilton = 0;
    for (const auto& f : out.factors)
        if (f.kind == FactorKind::hamilton) ++n_hamilton;
    if (n_hamilton != r_1)
        throw std::logic_error("decompose_triple: hamilton factor count mismatch");
    return out;
}

}  // namespace hw4k
