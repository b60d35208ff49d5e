#ifndef HW4K_ORACLE_HPP
#define HW4K_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "hw4k/types.hpp"

namespace hw4k {

enum class SearchStatus { yes, no, undecided };

struct SearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<Certificate> witness;  // present when status == yes
    std::uint64_t nodes_expanded = 0;
};

struct SearchOptions {
    int max_n = 8;                        // search budget guard
    std::uint64_t node_budget = 50'000'000;  // expansion count, not wall time
};

/// Backtracking over 2-factors of K_n - I: does a factorization with r
/// Hamilton factors and s factors of cycle length cycle_len exist?
/// Independent of every construction in this library.
SearchResult exhaustive_hw(int n, int r, int s, int cycle_len, const SearchOptions& opts = {});

}  // namespace hw4k

#endif
