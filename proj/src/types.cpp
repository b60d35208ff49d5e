#include "hw4k/types.hpp"

#include <algorithm>

namespace hw4k {

std::vector<VertexId> canonical_cycle(const std::vector<VertexId>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("canonical_cycle: length < 3");
    const auto it = std::min_element(cycle.begin(), cycle.end());
    const std::size_t pos = static_cast<std::size_t>(it - cycle.begin());
    const std::size_t len = cycle.size();
    const VertexId next = cycle[(pos + 1) % len];
    const VertexId prev = cycle[(pos + len - 1) % len];
    std::vector<VertexId> out;
    out.reserve(len);
    if (next <= prev) {
        for (std::size_t a = 0; a < len; ++a) out.push_back(cycle[(pos + a) % len]);
    } else {
        for (std::size_t a = 0; a < len; ++a) out.push_back(cycle[(pos + len - a) % len]);
    }
    return out;
}

TwoFactor canonical_factor(TwoFactor f) {
    for (auto& c : f.cycles) c = canonical_cycle(c);
    std::sort(f.cycles.begin(), f.cycles.end());
    return f;
}

std::vector<Edge> cycle_edges(const std::vector<VertexId>& cycle) {
    std::vector<Edge> out;
    out.reserve(cycle.size());
    for (std::size_t a = 0; a < cycle.size(); ++a)
        out.emplace_back(cycle[a], cycle[(a + 1) % cycle.size()]);
    return out;
}

}  // namespace hw4k
