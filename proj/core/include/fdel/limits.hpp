#pragma once

#include <cstdint>

namespace fdel {

/// Work budgets for the exhaustive procedures. Everything in this library
/// is exact and enumeration-based, so each entry point takes a Limits and
/// throws Error(ResourceLimit) instead of running away on oversized input.
struct Limits {
    // Minor containment: states visited by the contraction search.
    std::int64_t minor_state_budget = 10'000'000;
    // Largest host the general minor search will touch.
    int minor_max_host_vertices = 64;

    // Brute-force canonical form (all vertex permutations).
    int canonical_max_vertices = 10;

    // Exact treewidth (subset dynamic programming).
    int exact_treewidth_max_vertices = 20;

    // Deletion-set oracle: vertex cap and subset enumeration cap.
    int oracle_max_vertices = 16;
    std::int64_t oracle_max_subsets = std::int64_t(1) << 20;

    // Protrusion discovery: candidate (separator, component) pairs examined.
    std::int64_t protrusion_search_budget = 1'000'000;

    // Enumeration cap for boundaried test/candidate sets.
    int test_set_max_count = 20000;
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

}  // namespace fdel
