#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdel/graph.hpp"

namespace fdel {

/// Certificate that `pattern` is a minor of `host`: one branch set per
/// pattern vertex (nonempty, connected, pairwise disjoint) and one host
/// edge per pattern edge running between the two branch sets.
struct MinorModel {
    std::vector<std::vector<int>> branch_sets;  // indexed by pattern vertex, sorted
    std::vector<Edge> witness_edges;            // aligned with pattern.edges()
};

/// Check every MinorModel invariant; on failure optionally reports why.
bool validate_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model,
                          std::string* why = nullptr);

/// Minor containment with certificate. Contraction search over the host
/// with a subgraph-embedding base case and memoization on the
/// contraction partition; the first model found under the deterministic
/// branching order is returned. Throws Error(ResourceLimit) when the
/// state budget or host size cap is exceeded.
std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern,
                                    const Limits& limits = default_limits());

/// Decision-only variant. Agrees with has_minor everywhere but takes
/// shortcuts for the patterns that dominate deletion problems:
/// K2 (any edge), K3 (short-enough cycle), K4 (series-parallel
/// reduction). The shortcuts are exact characterizations, and the test
/// suite checks agreement against an independent exhaustive oracle.
bool contains_minor(const Graph& host, const Graph& pattern,
                    const Limits& limits = default_limits());

/// Planarity at small scale: neither K5 nor K3,3 occurs as a minor.
bool is_planar(const Graph& g, const Limits& limits = default_limits());

/// Length of a shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

/// A shortest cycle as an ordered vertex sequence, or nullopt for forests.
std::optional<std::vector<int>> shortest_cycle(const Graph& g);

}  // namespace fdel
