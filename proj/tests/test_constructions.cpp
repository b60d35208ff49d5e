#include <doctest.h>

#include <set>

#include "hw4k/constructions.hpp"
#include "hw4k/matching_algebra.hpp"
#include "hw4k/verify.hpp"
#include "test_util.hpp"

using namespace hw4k;
using hw4k::test::factor_edges;

namespace {

// All 2k parallel classes between the blocks of super-matching F~_x.
std::set<Edge> super_factor_edges(const SuperPlan& plan, int x, int k) {
    std::set<Edge> out;
    for (const auto& [i, j] : plan.factors[static_cast<std::size_t>(x)])
        for (int d = 0; d < 2 * k; ++d)
            for (const Edge& e : expand_matching(Matching{i, j, d}, k, plan.t)) out.insert(e);
    return out;
}

// Edges inside every block V_i.
std::set<Edge> block_internal_edges(int k, int t) {
    std::set<Edge> out;
    for (int i = 0; i < 2 * t; ++i)
        for (int a = 0; a < 2 * k; ++a)
            for (int b = a + 1; b < 2 * k; ++b)
                out.insert(Edge(encode_vertex(i, a, k, t), encode_vertex(i, b, k, t)));
    return out;
}

std::set<Edge> i0_union(const SuperPlan& plan, int x, int k) {
    std::set<Edge> out;
    for (const auto& [i, j] : plan.factors[static_cast<std::size_t>(x)])
        for (const Edge& e : expand_matching(Matching{i, j, 0}, k, plan.t)) out.insert(e);
    return out;
}

// Disjointness + union == want; every factor 2-regular with the right cycle
// structure for its kind.
void check_decomposition(const std::vector<TwoFactor>& factors, const std::vector<Edge>& one_factor,
                         const std::set<Edge>& want, int n, int k) {
    std::set<Edge> all(one_factor.begin(), one_factor.end());
    std::size_t count = all.size();
    for (const auto& f : factors) {
        const auto es = factor_edges(f);
        count += es.size();
        all.insert(es.begin(), es.end());
        const auto lens = component_cycle_lengths(es);
        REQUIRE(lens.ok);
        REQUIRE(static_cast<int>(lens.lengths.size()) == static_cast<int>(f.cycles.size()));
        if (f.kind == FactorKind::hamilton) {
            CHECK(lens.lengths == std::vector<int>{n});
        } else {
            for (int len : lens.lengths) CHECK(len == 4 * k);
        }
    }
    CHECK(count == all.size());
    CHECK(all == want);
}

int hamilton_count(const std::vector<TwoFactor>& factors) {
    int r = 0;
    for (const auto& f : factors)
        if (f.kind == FactorKind::hamilton) ++r;
    return r;
}

std::set<Edge> set_of(const std::vector<Edge>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("make_super_plan invariants") {
    SUBCASE("t = 1") {
        const SuperPlan plan = make_super_plan(1);
        REQUIRE(plan.factors.size() == 2);
        CHECK(plan.factors[1] == std::vector<std::pair<int, int>>{{0, 1}});
    }
    for (int t : {2, 3, 4, 5, 6, 7}) {
        CAPTURE(t);
        const SuperPlan plan = make_super_plan(t);
        CHECK(plan.t == t);
        REQUIRE(plan.factors.size() == static_cast<std::size_t>(2 * t));

        // F~_1 and F~_2 come from the canonical cycle (0, 1, ..., 2t-1).
        std::vector<std::pair<int, int>> f1, f2;
        for (int a = 0; a < t; ++a) {
            f1.emplace_back(2 * a, 2 * a + 1);
            f2.emplace_back(std::min(2 * a + 1, (2 * a + 2) % (2 * t)),
                            std::max(2 * a + 1, (2 * a + 2) % (2 * t)));
        }
        CHECK(std::set(plan.factors[1].begin(), plan.factors[1].end()) ==
              std::set(f1.begin(), f1.end()));
        CHECK(std::set(plan.factors[2].begin(), plan.factors[2].end()) ==
              std::set(f2.begin(), f2.end()));

        // F~_{2t-1} is the reflection matching.
        std::set<std::pair<int, int>> refl{{0, t}};
        for (int i = 1; i < t; ++i) refl.insert({std::min(i, 2 * t - i), std::max(i, 2 * t - i)});
        CHECK(std::set(plan.factors[2 * t - 1].begin(), plan.factors[2 * t - 1].end()) == refl);

        // All 2t-1 factors are perfect matchings partitioning E(K_2t).
        std::set<std::pair<int, int>> all;
        for (int x = 1; x <= 2 * t - 1; ++x) {
            const auto& f = plan.factors[static_cast<std::size_t>(x)];
            REQUIRE(f.size() == static_cast<std::size_t>(t));
            std::set<int> touched;
            for (const auto& [u, v] : f) {
                CHECK(u < v);
                touched.insert(u);
                touched.insert(v);
                all.insert({u, v});
            }
            CHECK(touched.size() == static_cast<std::size_t>(2 * t));
        }
        CHECK(all.size() == static_cast<std::size_t>(t * (2 * t - 1)));

        // traversal[i] alternates between F~_{2i-1} and F~_{2i}, starting in
        // F~_{2i-1}.
        for (int i = 1; i < t; ++i) {
            const auto& W = plan.traversal[static_cast<std::size_t>(i)];
            REQUIRE(W.size() == static_cast<std::size_t>(2 * t));
            for (int a = 0; a < 2 * t; ++a) {
                const int u = W[static_cast<std::size_t>(a)];
                const int v = W[static_cast<std::size_t>((a + 1) % (2 * t))];
                const auto& f =
                    plan.factors[static_cast<std::size_t>(a % 2 == 0 ? 2 * i - 1 : 2 * i)];
                const std::pair<int, int> key{std::min(u, v), std::max(u, v)};
                CHECK(std::find(f.begin(), f.end(), key) != f.end());
            }
        }
    }
}

TEST_CASE("decompose_pair splits a super-HC into r_i HCs and 2k - r_i c4k factors") {
    for (int k : {1, 2, 3}) {
        for (int t : {2, 3}) {
            const SuperPlan plan = make_super_plan(t);
            const int n = 4 * k * t;
            for (int i = 1; i < t; ++i) {
                std::set<Edge> want = super_factor_edges(plan, 2 * i - 1, k);
                const auto more = super_factor_edges(plan, 2 * i, k);
                want.insert(more.begin(), more.end());
                for (int r_i = 0; r_i <= 2 * k; r_i += 2) {
                    CAPTURE(k);
                    CAPTURE(t);
                    CAPTURE(i);
                    CAPTURE(r_i);
                    const auto factors = decompose_pair(plan, i, r_i, k);
                    REQUIRE(factors.size() == static_cast<std::size_t>(2 * k));
                    CHECK(hamilton_count(factors) == r_i);
                    check_decomposition(factors, {}, want, n, k);
                }
            }
        }
    }
    const SuperPlan plan = make_super_plan(2);
    CHECK_THROWS_AS(decompose_pair(plan, 1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(decompose_pair(plan, 2, 0, 2), std::invalid_argument);
}

TEST_CASE("decompose_blocks covers F_x plus the block interiors") {
    for (int k : {1, 2, 3}) {
        for (int t : {2, 3}) {
            const SuperPlan plan = make_super_plan(t);
            const int n = 4 * k * t;
            for (bool designated : {false, true}) {
                const int x = designated ? 2 : 2 * t - 1;
                CAPTURE(k);
                CAPTURE(t);
                CAPTURE(x);
                const auto dec = decompose_blocks(plan, x, designated, k);
                REQUIRE(dec.factors.size() == static_cast<std::size_t>(2 * k - 1));
                CHECK(hamilton_count(dec.factors) == 0);
                std::set<Edge> want = super_factor_edges(plan, x, k);
                const auto internal = block_internal_edges(k, t);
                want.insert(internal.begin(), internal.end());
                check_decomposition(dec.factors, dec.one_factor, want, n, k);
                if (designated) CHECK(set_of(dec.one_factor) == i0_union(plan, x, k));
            }
        }
    }
}

TEST_CASE("decompose_f1_with_matching spends F_1 and the handed-in 1-factor") {
    for (int k : {1, 2, 3}) {
        for (int t : {2, 3}) {
            CAPTURE(k);
            CAPTURE(t);
            const SuperPlan plan = make_super_plan(t);
            const int n = 4 * k * t;
            std::vector<Edge> i_prime;
            for (int a = 0; a < t; ++a)
                for (const Edge& e :
                     expand_matching(Matching{2 * a + 1, (2 * a + 2) % (2 * t), 0}, k, t))
                    i_prime.push_back(e);
            const auto dec = decompose_f1_with_matching(plan, i_prime, k);
            REQUIRE(dec.factors.size() == static_cast<std::size_t>(k));
            CHECK(hamilton_count(dec.factors) == 1);
            std::set<Edge> want = super_factor_edges(plan, 1, k);
            want.insert(i_prime.begin(), i_prime.end());
            check_decomposition(dec.factors, dec.one_factor, want, n, k);
        }
    }
    const SuperPlan plan = make_super_plan(2);
    // a valid 1-factor, but not the required one
    std::vector<Edge> wrong;
    for (const Edge& e : expand_matching(Matching{0, 1, 0}, 2, 2)) wrong.push_back(e);
    for (const Edge& e : expand_matching(Matching{2, 3, 0}, 2, 2)) wrong.push_back(e);
    CHECK_THROWS_AS(decompose_f1_with_matching(plan, wrong, 2), std::invalid_argument);
}

TEST_CASE("blowup_to_c4k turns a super-matching into k c4k factors") {
    for (int k : {1, 2, 3}) {
        for (int t : {2, 3}) {
            CAPTURE(k);
            CAPTURE(t);
            const SuperPlan plan = make_super_plan(t);
            const int x = 2 * t - 1;
            const auto factors = blowup_to_c4k(plan, x, k);
            REQUIRE(factors.size() == static_cast<std::size_t>(k));
            CHECK(hamilton_count(factors) == 0);
            check_decomposition(factors, {}, super_factor_edges(plan, x, k), 4 * k * t, k);
        }
    }
}

TEST_CASE("decompose_triple yields r_1 HCs for every r_1 in [2k, 4k-1]") {
    for (int k : {1, 2, 3}) {
        for (int t : {2, 3}) {
            const SuperPlan plan = make_super_plan(t);
            const int n = 4 * k * t;
            std::set<Edge> want = block_internal_edges(k, t);
            for (int x : {1, 2, 2 * t - 1}) {
                const auto es = super_factor_edges(plan, x, k);
                want.insert(es.begin(), es.end());
            }
            for (int r_1 = 2 * k; r_1 <= 4 * k - 1; ++r_1) {
                CAPTURE(k);
                CAPTURE(t);
                CAPTURE(r_1);
                const auto dec = decompose_triple(plan, r_1, k);
                REQUIRE(dec.factors.size() == static_cast<std::size_t>(4 * k - 1));
                CHECK(hamilton_count(dec.factors) == r_1);
                check_decomposition(dec.factors, dec.one_factor, want, n, k);
            }
        }
    }
    const SuperPlan plan = make_super_plan(2);
    CHECK_THROWS_AS(decompose_triple(plan, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(decompose_triple(plan, 8, 2), std::invalid_argument);
}
