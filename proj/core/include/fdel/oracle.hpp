#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fdel/boundaried.hpp"
#include "fdel/family.hpp"

namespace fdel {

/// Exact deletion-set answer produced by exhaustive enumeration.
struct SolveResult {
    int opt = 0;
    std::vector<int> witness;  // sorted, |witness| == opt
};

/// Minimum vertex set whose removal leaves `g` F-minor-free, found by
/// enumerating subsets in (size, lexicographic) order; the first feasible
/// subset is the witness, so results are deterministic. Returns nullopt
/// when no feasible set of size <= cap exists. Throws
/// Error(ResourceLimit) when the instance exceeds the oracle budget;
/// that is distinct from a cap miss.
///
/// This module is ground truth for everything else: no shortcuts here.
std::optional<SolveResult> opt_deletion(const Graph& g, const MinorFamily& f,
                                        std::optional<int> cap = std::nullopt,
                                        const Limits& limits = default_limits());

/// Same objective on a boundaried graph with boundary constraints: the
/// deletion set must contain forced_deleted and avoid forced_kept (both
/// subsets of the boundary), and the residual must be F-minor-free as a
/// standalone graph. Returns nullopt when infeasible under the cap.
std::optional<SolveResult> constrained_opt(const BoundariedGraph& b, const MinorFamily& f,
                                           const std::vector<int>& forced_deleted,
                                           const std::vector<int>& forced_kept,
                                           std::optional<int> cap = std::nullopt,
                                           const Limits& limits = default_limits());

/// Process-wide call counter (opt_deletion + constrained_opt), used to
/// measure how much oracle work the replacement paths do.
std::uint64_t oracle_call_count();

}  // namespace fdel
