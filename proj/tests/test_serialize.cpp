#include <doctest.h>

#include "hw4k/dispatch.hpp"
#include "hw4k/serialize.hpp"
#include "hw4k/verify.hpp"

using namespace hw4k;

namespace {

bool same_certificate(const Certificate& a, const Certificate& b) {
    if (a.n != b.n || a.k != b.k || a.t != b.t || a.r != b.r || a.s != b.s) return false;
    if (a.factors.size() != b.factors.size()) return false;
    for (std::size_t i = 0; i < a.factors.size(); ++i)
        if (a.factors[i].kind != b.factors[i].kind || a.factors[i].cycles != b.factors[i].cycles)
            return false;
    return a.one_factor == b.one_factor;
}

}  // namespace

TEST_CASE("JSON round-trip preserves certificates exactly") {
    for (const Certificate& cert :
         {construct_hw(1, 2, 1), construct_hw(2, 2, 4), construct_hamilton_only(9)}) {
        const std::string text = certificate_to_json(cert);
        const Certificate back = certificate_from_json(text);
        CHECK(same_certificate(cert, back));
        CHECK(verify_certificate(back).all_pass());
        // serialization is deterministic
        CHECK(certificate_to_json(back) == text);
    }
}

TEST_CASE("JSON field order and null conventions") {
    const std::string text = certificate_to_json(construct_hamilton_only(9));
    CHECK(text.find("\"n\"") < text.find("\"k\""));
    CHECK(text.find("\"k\": null") != std::string::npos);
    CHECK(text.find("\"t\": null") != std::string::npos);
    CHECK(text.find("\"one_factor\": null") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("text round-trip preserves certificates exactly") {
    for (const Certificate& cert :
         {construct_hw(1, 2, 1), construct_hw(2, 2, 4), construct_hamilton_only(9)}) {
        const std::string text = certificate_to_text(cert);
        const Certificate back = certificate_from_text(text);
        CHECK(same_certificate(cert, back));
        CHECK(certificate_to_text(back) == text);
    }
}

TEST_CASE("certificate_from_string dispatches on content") {
    const Certificate cert = construct_hw(1, 2, 1);
    CHECK(same_certificate(certificate_from_string(certificate_to_json(cert)), cert));
    CHECK(same_certificate(certificate_from_string("  \n" + certificate_to_json(cert)), cert));
    CHECK(same_certificate(certificate_from_string(certificate_to_text(cert)), cert));
    CHECK_THROWS_AS(certificate_from_string("   \n \t"), ParseError);
}

TEST_CASE("malformed input raises ParseError, never crashes") {
    CHECK_THROWS_AS(certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("{\"n\": 8}"), ParseError);  // missing fields
    CHECK_THROWS_AS(certificate_from_json(
                        R"({"n":4,"k":null,"t":null,"r":1,"s":0,
                            "factors":[{"kind":"weird","cycles":[]}],"one_factor":null})"),
                    ParseError);
    CHECK_THROWS_AS(certificate_from_json(
                        R"({"n":4,"k":null,"t":null,"r":1,"s":0,
                            "factors":[],"one_factor":[[1,1]]})"),
                    ParseError);
    CHECK_THROWS_AS(certificate_from_text(""), ParseError);  // no n header
    CHECK_THROWS_AS(certificate_from_text("n x\n"), ParseError);
    CHECK_THROWS_AS(certificate_from_text("n 8\nbogus line\n"), ParseError);
    CHECK_THROWS_AS(certificate_from_text("n 8\nfactor weird: cycle 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(certificate_from_text("n 8\nfactor hamilton: 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(certificate_from_text("n 8\none_factor: edge 3\n"), ParseError);
}

TEST_CASE("parsed-but-wrong certificates are left to the verifier") {
    // parsing succeeds; verification reports the inconsistency
    const Certificate c = certificate_from_text("n 6\nr 2\ns 0\n");
    const auto rep = verify_certificate(c);
    CHECK(!rep.all_pass());
}
