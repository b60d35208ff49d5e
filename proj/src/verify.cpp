#include "hw4k/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hw4k {

namespace {

std::string cycle_type_name(const Certificate& cert) {
    return cert.k ? "C_" + std::to_string(4 * *cert.k) : "c4k";
}

}  // namespace

CycleLengths component_cycle_lengths(const std::vector<Edge>& edges) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    CycleLengths out;
    for (const auto& [v, nb] : adj) {
        if (nb.size() != 2) {
            out.bad_vertex = v;
            out.bad_degree = static_cast<int>(nb.size());
            return out;
        }
    }
    std::set<VertexId> seen;
    for (const auto& [v0, nb0] : adj) {
        if (seen.contains(v0)) continue;
        int len = 0;
        VertexId prev = v0, cur = v0;
        do {
            seen.insert(cur);
            ++len;
            const auto& nb = adj[cur];
            const VertexId nxt = nb[0] != prev ? nb[0] : nb[1];
            prev = cur;
            cur = nxt;
        } while (cur != v0);
        out.lengths.push_back(len);
    }
    std::sort(out.lengths.begin(), out.lengths.end());
    out.ok = true;
    return out;
}

VerifyReport verify_certificate(const Certificate& cert) {
    VerifyReport report;
    auto check = [&report](int id, std::string name, bool pass, std::string detail = {}) {
        report.checks.push_back(CheckResult{id, std::move(name), pass, pass ? "" : std::move(detail)});
    };

    // (1) header consistency
    {
        bool pass = cert.n >= 3;
        std::string detail = pass ? "" : "n < 3";
        if (pass && cert.k.has_value() != cert.t.has_value()) {
            pass = false;
            detail = "k and t must be present together";
        }
        if (pass && cert.k) {
            if (*cert.k < 1 || *cert.t < 1 || cert.n != 4 * *cert.k * *cert.t) {
                pass = false;
                detail = "n != 4kt";
            }
        }
        if (pass) {
            const int slots = cert.n % 2 == 0 ? (cert.n - 2) / 2 : (cert.n - 1) / 2;
            if (cert.r < 0 || cert.s < 0 || cert.r + cert.s != slots) {
                pass = false;
                detail = "r + s != floor((n-1)/2)";
            }
        }
        if (pass && !cert.k && cert.s != 0) {
            pass = false;
            detail = "s > 0 without block parameters";
        }
        check(1, "header", pass, std::move(detail));
    }

    // (2) every factor spanning with all degrees 2
    {
        bool pass = true;
        std::string detail;
        for (std::size_t fi = 0; fi < cert.factors.size() && pass; ++fi) {
            std::map<VertexId, int> deg;
            for (const auto& c : cert.factors[fi].cycles) {
                if (c.size() < 3) {
                    pass = false;
                    detail = "factor " + std::to_string(fi) + " has a cycle shorter than 3";
                    break;
                }
                for (VertexId v : c) ++deg[v];
            }
            if (!pass) break;
            for (const auto& c : cert.factors[fi].cycles) {
                std::set<VertexId> within(c.begin(), c.end());
                if (static_cast<int>(within.size()) != static_cast<int>(c.size())) {
                    pass = false;
                    detail = "factor " + std::to_string(fi) + " repeats a vertex within a cycle";
                }
            }
            if (!pass) break;
            if (static_cast<int>(deg.size()) != cert.n) {
                pass = false;
                detail = "factor " + std::to_string(fi) + " is not spanning";
                break;
            }
            for (const auto& [v, d] : deg) {
                if (v < 0 || v >= cert.n) {
                    pass = false;
                    detail = "factor " + std::to_string(fi) + " has vertex " + std::to_string(v) +
                             " out of range";
                    break;
                }
                if (d != 1) {  // vertex listed once = degree 2 in the cycle union
                    pass = false;
                    detail = "factor " + std::to_string(fi) + " covers vertex " + std::to_string(v) +
                             " " + std::to_string(d) + " times";
                    break;
                }
            }
        }
        check(2, "factors are spanning 2-regular", pass, std::move(detail));
    }

    // (3) hamilton factors are single n-cycles
    {
        bool pass = true;
        std::string detail;
        for (std::size_t fi = 0; fi < cert.factors.size(); ++fi) {
            const auto& f = cert.factors[fi];
            if (f.kind != FactorKind::hamilton) continue;
            if (f.cycles.size() != 1 || static_cast<int>(f.cycles[0].size()) != cert.n) {
                pass = false;
                detail = "factor " + std::to_string(fi) + " is not a single " +
                         std::to_string(cert.n) + "-cycle";
                break;
            }
        }
        check(3, "hamilton factors", pass, std::move(detail));
    }

    // (4) c4k factors have every component of length exactly 4k
    {
        bool pass = true;
        std::string detail;
        if (!cert.k) {
            for (const auto& f : cert.factors)
                if (f.kind == FactorKind::c4k) {
                    pass = false;
                    detail = "c4k factor present without block parameters";
                    break;
                }
        } else {
            const int len = 4 * *cert.k;
            for (std::size_t fi = 0; fi < cert.factors.size() && pass; ++fi) {
                const auto& f = cert.factors[fi];
                if (f.kind != FactorKind::c4k) continue;
                for (const auto& c : f.cycles) {
                    if (static_cast<int>(c.size()) != len) {
                        pass = false;
                        detail = "factor " + std::to_string(fi) + " has component length " +
                                 std::to_string(c.size()) + " != " + std::to_string(len);
                        break;
                    }
                }
            }
        }
        check(4, cycle_type_name(cert) + " factors", pass, std::move(detail));
    }

    // (5) one_factor is a perfect matching (required iff n even)
    {
        bool pass = true;
        std::string detail;
        if (cert.n % 2 == 0) {
            if (!cert.one_factor) {
                pass = false;
                detail = "one_factor missing for even n";
            } else {
                std::set<VertexId> covered;
                for (const Edge& e : *cert.one_factor) {
                    if (e.u < 0 || e.v >= cert.n || !covered.insert(e.u).second ||
                        !covered.insert(e.v).second) {
                        pass = false;
                        detail = "one_factor is not a matching at edge (" + std::to_string(e.u) +
                                 "," + std::to_string(e.v) + ")";
                        break;
                    }
                }
                if (pass && static_cast<int>(covered.size()) != cert.n) {
                    pass = false;
                    detail = "one_factor does not cover all vertices";
                }
            }
        } else if (cert.one_factor) {
            pass = false;
            detail = "one_factor present for odd n";
        }
        check(5, "one_factor", pass, std::move(detail));
    }

    // (6) edge multiset of factors + one_factor = E(K_n), each edge once
    {
        bool pass = true;
        std::string detail;
        std::set<Edge> all;
        long long count = 0;
        auto add = [&](const Edge& e) {
            ++count;
            if (pass && !all.insert(e).second) {
                pass = false;
                detail = "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") appears more than once";
            }
        };
        for (const auto& f : cert.factors)
            for (const auto& c : f.cycles) {
                if (c.size() < 3) continue;  // reported by check 2
                for (std::size_t a = 0; a < c.size(); ++a) {
                    const VertexId u = c[a], v = c[(a + 1) % c.size()];
                    if (u == v) continue;
                    add(Edge(u, v));
                }
            }
        if (cert.one_factor)
            for (const Edge& e : *cert.one_factor) add(e);
        const long long want = static_cast<long long>(cert.n) * (cert.n - 1) / 2;
        if (pass && count != want) {
            pass = false;
            detail = "edge count " + std::to_string(count) + " != n(n-1)/2 = " + std::to_string(want);
        }
        check(6, "edge partition", pass, std::move(detail));
    }

    // (7) counts match header
    {
        int nh = 0, nc = 0;
        for (const auto& f : cert.factors) (f.kind == FactorKind::hamilton ? nh : nc)++;
        const bool pass = nh == cert.r && nc == cert.s;
        check(7, "factor counts", pass,
              pass ? "" : "found " + std::to_string(nh) + " hamilton + " + std::to_string(nc) +
                          " c4k, header says r=" + std::to_string(cert.r) +
                          " s=" + std::to_string(cert.s));
    }

    return report;
}

}  // namespace hw4k
