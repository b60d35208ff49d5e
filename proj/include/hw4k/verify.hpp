#ifndef HW4K_VERIFY_HPP
#define HW4K_VERIFY_HPP

#include <string>
#include <vector>

#include "hw4k/types.hpp"

namespace hw4k {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // empty when pass
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// Run all 7 checks against a certificate and report every failure.
/// Trusts nothing from the construction path.
VerifyReport verify_certificate(const Certificate& cert);

struct CycleLengths {
    bool ok = false;
    std::vector<int> lengths;  // sorted, valid when ok
    VertexId bad_vertex = -1;  // first vertex with degree != 2 when !ok
    int bad_degree = 0;
};

/// Traversal oracle: component cycle lengths of an edge set in which every
/// touched vertex must have degree 2.
CycleLengths component_cycle_lengths(const std::vector<Edge>& edges);

}  // namespace hw4k

#endif
