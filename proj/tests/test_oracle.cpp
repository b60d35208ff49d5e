#include <doctest.h>

#include "hw4k/oracle.hpp"
#include "hw4k/verify.hpp"

using namespace hw4k;

TEST_CASE("oracle finds Hamilton decompositions of small complete graphs") {
    const SearchResult res = exhaustive_hw(5, 2, 0, 0);
    REQUIRE(res.status == SearchStatus::yes);
    REQUIRE(res.witness.has_value());
    CHECK(verify_certificate(*res.witness).all_pass());
}

TEST_CASE("oracle decides K_8 minus a 1-factor for every r") {
    for (int r = 0; r <= 3; ++r) {
        CAPTURE(r);
        const SearchResult res = exhaustive_hw(8, r, 3 - r, 4);
        REQUIRE(res.status == SearchStatus::yes);
        REQUIRE(res.witness.has_value());
        const Certificate& w = *res.witness;
        CHECK(w.r == r);
        CHECK(w.s == 3 - r);
        CHECK(verify_certificate(w).all_pass());
    }
}

TEST_CASE("oracle refutes the two-triangle-factor instance on 6 vertices") {
    const SearchResult res = exhaustive_hw(6, 0, 2, 3);
    CHECK(res.status == SearchStatus::no);
    CHECK(!res.witness.has_value());
}

TEST_CASE("necessary-condition prechecks answer no without searching") {
    SUBCASE("wrong factor count") {
        const SearchResult res = exhaustive_hw(8, 1, 1, 4);
        CHECK(res.status == SearchStatus::no);
        CHECK(res.nodes_expanded == 0);
    }
    SUBCASE("cycle length does not divide n") {
        const SearchResult res = exhaustive_hw(8, 1, 2, 5);
        CHECK(res.status == SearchStatus::no);
        CHECK(res.nodes_expanded == 0);
    }
}

TEST_CASE("budget and guard rails") {
    SUBCASE("tiny node budget yields undecided") {
        SearchOptions opts;
        opts.node_budget = 5;
        const SearchResult res = exhaustive_hw(8, 3, 0, 4, opts);
        CHECK(res.status == SearchStatus::undecided);
        CHECK(res.nodes_expanded >= opts.node_budget);
    }
    SUBCASE("n above the guard throws") {
        CHECK_THROWS_AS(exhaustive_hw(12, 5, 0, 4), std::invalid_argument);
        SearchOptions opts;
        opts.max_n = 12;
        opts.node_budget = 10'000;  // the guard is the point, not the answer
        CHECK_NOTHROW(exhaustive_hw(12, 5, 0, 4, opts));
    }
    SUBCASE("bad parameters throw") {
        CHECK_THROWS_AS(exhaustive_hw(2, 0, 0, 4), std::invalid_argument);
        CHECK_THROWS_AS(exhaustive_hw(8, -1, 4, 4), std::invalid_argument);
    }
}
