#include "hw4k/walecki.hpp"

#include <algorithm>
#include <set>

namespace hw4k {

namespace {

// 0, 1, n-1, 2, n-2, ... on Z_n.
std::vector<int> zigzag(int n) {
    std::vector<int> seq{0};
    int lo = 1, hi = n - 1;
    bool low = true;
    while (static_cast<int>(seq.size()) < n) {
        seq.push_back(low ? lo++ : hi--);
        low = !low;
    }
    return seq;
}

std::vector<Edge> reflection_matching(int m) {
    std::vector<Edge> out;
    out.emplace_back(0, m);
    for (int i = 1; i < m; ++i) out.emplace_back(i, 2 * m - i);
    return out;
}

// Rotations of the zigzag through infinity, on {2m-1} u Z_{2m-1}. The leftover
// 1-factor of this scheme is not in reflection form; a dihedral relabeling of
// one of the cycles fixes that for even m (walecki_even_search below).
std::vector<std::vector<VertexId>> raw_even_scheme(int m) {
    const int N = 2 * m - 1;
    const int inf = N;
    const std::vector<int> base = zigzag(N);
    std::vector<std::vector<VertexId>> hcs;
    for (int j = 0; j + 1 < m; ++j) {
        std::vector<VertexId> cyc{inf};
        for (int v : base) cyc.push_back((v + j) % N);
        hcs.push_back(std::move(cyc));
    }
    return hcs;
}

WaleckiEven walecki_even_search(int m) {
    const int n = 2 * m;
    const auto hcs = raw_even_scheme(m);
    std::set<Edge> used;
    for (const auto& c : hcs)
        for (const Edge& e : cycle_edges(c)) used.insert(e);
    std::vector<Edge> leftover;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!used.contains(Edge(a, b))) leftover.emplace_back(a, b);

    std::set<Edge> want;
    for (const Edge& e : reflection_matching(m)) want.insert(e);
    for (std::size_t ci = 0; ci < hcs.size(); ++ci) {
        for (int start = 0; start < n; ++start) {
            for (int sgn : {1, -1}) {
                std::vector<int> lab(static_cast<std::size_t>(n));
                for (int p = 0; p < n; ++p)
                    lab[static_cast<std::size_t>(hcs[ci][static_cast<std::size_t>(p)])] =
                        ((start + sgn * p) % n + n) % n;
                std::set<Edge> mapped;
                for (const Edge& e : leftover)
                    mapped.insert(Edge(lab[static_cast<std::size_t>(e.u)],
                                       lab[static_cast<std::size_t>(e.v)]));
                if (mapped != want) continue;
                WaleckiEven out;
                out.hcs.reserve(hcs.size());
                auto apply = [&](const std::vector<VertexId>& c) {
                    std::vector<VertexId> r;
                    r.reserve(c.size());
                    for (VertexId v : c) r.push_back(lab[static_cast<std::size_t>(v)]);
                    return r;
                };
                out.hcs.push_back(apply(hcs[ci]));
                for (std::size_t x = 0; x < hcs.size(); ++x)
                    if (x != ci) out.hcs.push_back(apply(hcs[x]));
                out.i_factor = reflection_matching(m);
                return out;
            }
        }
    }
    throw std::logic_error("walecki_even: no relabeling found for m=" + std::to_string(m));
}

// Odd m: view K_2m - I as the cocktail party graph on m parts {p+, p-},
// p+ = p and p- = 2m-p (0- = m). Decompose K_m on parts into (m-1)/2 Hamilton
// cycles, the first being (0, 1, ..., m-1); the blow-up of each part-cycle
// splits into two Hamilton cycles of K_2m, and the blow-up of the canonical
// part-cycle yields (0, 1, ..., 2m-1) itself.
WaleckiEven walecki_even_blowup(int m) {
    auto part_hcs = walecki_odd((m - 1) / 2);  // on m vertices
    std::vector<int> lab(static_cast<std::size_t>(m));
    for (int p = 0; p < m; ++p) lab[static_cast<std::size_t>(part_hcs[0][static_cast<std::size_t>(p)])] = p;
    for (auto& c : part_hcs)
        for (int& v : c) v = lab[static_cast<std::size_t>(v)];

    auto vert = [m](int part, bool minus) {
        if (!minus) return part;
        return part == 0 ? m : 2 * m - part;
    };

    WaleckiEven out;
    for (const auto& b : part_hcs) {
        auto at = [&](int p, bool minus) { return vert(b[static_cast<std::size_t>(p)], minus); };
        // A: b0+, b1+, ..., b_{m-1}+, b0-, b_{m-1}-, ..., b1-
        std::vector<VertexId> A;
        for (int p = 0; p < m; ++p) A.push_back(at(p, false));
        A.push_back(at(0, true));
        for (int p = m - 1; p >= 1; --p) A.push_back(at(p, true));
        // B: the complement within the blow-up of b; a zigzag alternating signs.
        std::vector<VertexId> B{at(0, false)};
        for (int p = m - 1; p >= 1; --p) B.push_back(at(p, p % 2 != 0));
        B.push_back(at(0, true));
        for (int p = 1; p < m; ++p) B.push_back(at(p, p % 2 == 0));
        out.hcs.push_back(std::move(A));
        out.hcs.push_back(std::move(B));
    }
    out.i_factor = reflection_matching(m);
    return out;
}

}  // namespace

WaleckiEven walecki_even(int m) {
    if (m < 2) throw std::invalid_argument("walecki_even: m must be >= 2");
    return m % 2 == 0 ? walecki_even_search(m) : walecki_even_blowup(m);
}

std::vector<std::vector<VertexId>> walecki_odd(int m) {
    if (m < 1) throw std::invalid_argument("walecki_odd: m must be >= 1");
    const int inf = 2 * m;
    std::vector<std::vector<VertexId>> out;
    for (auto& p : ham_path_decomp(m)) {
        std::vector<VertexId> cyc{inf};
        cyc.insert(cyc.end(), p.begin(), p.end());
        out.push_back(std::move(cyc));
    }
    return out;
}

std::vector<std::vector<VertexId>> ham_path_decomp(int m) {
    if (m < 1) throw std::invalid_argument("ham_path_decomp: m must be >= 1");
    const std::vector<int> base = zigzag(2 * m);
    std::vector<std::vector<VertexId>> out;
    for (int j = 0; j < m; ++j) {
        std::vector<VertexId> p;
        p.reserve(base.size());
        for (int v : base) p.push_back((v + j) % (2 * m));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<std::vector<VertexId>> relabel(const std::vector<std::vector<VertexId>>& seqs,
                                           std::span<const VertexId> target_order) {
    const int n = static_cast<int>(target_order.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (VertexId v : target_order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("relabel: target_order is not a bijection");
        seen[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::vector<VertexId>> out;
    out.reserve(seqs.size());
    for (const auto& s : seqs) {
        std::vector<VertexId> r;
        r.reserve(s.size());
        for (VertexId v : s) {
            if (v < 0 || v >= n) throw std::invalid_argument("relabel: vertex outside domain");
            r.push_back(target_order[static_cast<std::size_t>(v)]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace hw4k
