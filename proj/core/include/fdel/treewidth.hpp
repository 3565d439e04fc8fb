#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdel/graph.hpp"

namespace fdel {

/// Tree decomposition: bags of vertices connected by a tree over bag
/// indices. Valid when every vertex and edge is covered and each
/// vertex's bags induce a connected subtree.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;      // sorted vertex lists
    std::vector<std::pair<int, int>> tree;   // edges over bag indices
    int width = -1;                          // max bag size - 1

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

struct DecompositionViolation {
    enum class Kind {
        BadStructure,            // malformed indices / tree is not a tree
        VertexUncovered,         // a = vertex
        EdgeUncovered,           // a, b = endpoints
        OccurrenceDisconnected,  // a = vertex
        WidthMismatch,           // a = declared, b = actual
    };
    Kind kind;
    int a = -1;
    int b = -1;

    std::string describe() const;
};

struct DecompositionCheck {
    std::vector<DecompositionViolation> violations;
    bool ok() const { return violations.empty(); }
};

DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& t);
bool validate_decomposition(const Graph& g, const TreeDecomposition& t);

/// Exact treewidth by dynamic programming over elimination prefixes.
/// Returns the width and an optimal decomposition when treewidth(g) <=
/// w_max, nullopt otherwise. Exponential in the vertex count; throws
/// Error(ResourceLimit) past limits.exact_treewidth_max_vertices.
std::optional<std::pair<int, TreeDecomposition>> exact_treewidth(
    const Graph& g, int w_max, const Limits& limits = default_limits());

/// Min-degree elimination heuristic (ties broken by smallest vertex id).
/// Always valid; width is an upper bound on the true treewidth.
TreeDecomposition greedy_decomposition(const Graph& g);

/// Decomposition derived from an explicit elimination order.
TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order);

// Serialization: header "s td <#bags> <width> <n>", bag lines
// "b <i> <v...>" (1-based), then one "<i> <j>" line per tree edge.
// Writing then reading is bit-exact.
std::string write_decomposition(const TreeDecomposition& t);
TreeDecomposition read_decomposition(const std::string& text);

}  // namespace fdel
