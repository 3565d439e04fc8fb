#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdel/errors.hpp"
#include "fdel/limits.hpp"

namespace fdel {

/// Undirected edge with endpoints normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction: every operation that "changes" a graph builds a new one,
/// so instances are safe to share across threads.
///
/// Construction rejects self-loops and out-of-range endpoints; duplicate
/// edges are collapsed. Optional labels carry external vertex names
/// through subgraph extraction (empty means identity).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::vector<Edge> edges, std::vector<int> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;               // sorted, unique
    std::vector<std::vector<int>> adj_;     // sorted neighbor lists
    std::vector<int> labels_;               // optional, size n_ when present

    void build_adjacency();
};

// ---- parsing and formatting (edge-list format) ----
//
// First line "n m", then m lines "u v" with 1-based endpoints. Blank
// lines and lines starting with "c " are ignored. Writers emit edges
// sorted lexicographically.

/// Parse the edge-list format. Duplicate edges are collapsed and reported
/// through `warnings` when given. Malformed input throws
/// Error(ParseError) with the offending line number in the message.
Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr);

std::string format_graph(const Graph& g);

// ---- basic structure ----

bool is_connected(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Induced subgraph on `vertices` (must be sorted, distinct, in range).
/// The result's labels record the original vertex ids (composed through
/// existing labels), so nested extraction stays traceable.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// New graph with the listed vertices removed.
Graph remove_vertices(const Graph& g, const std::vector<int>& vertices);

bool has_cycle(const Graph& g);

// ---- isomorphism via brute-force canonical form ----

/// Lexicographically smallest adjacency-bitstring over all vertex
/// permutations, prefixed with the vertex count. Exact but factorial:
/// restricted to limits.canonical_max_vertices (throws ResourceLimit).
std::string canonical_key(const Graph& g, const Limits& limits = default_limits());

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits = default_limits());

// ---- small named graphs ----

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();

}  // namespace fdel
