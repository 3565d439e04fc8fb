#include "fdel/boundaried.hpp"

#include <algorithm>
#include <numeric>

namespace fdel {

BoundariedGraph::BoundariedGraph(Graph g, std::vector<int> b)
    : graph(std::move(g)), boundary(std::move(b)) {
    std::vector<char> seen(graph.vertex_count(), 0);
    for (int v : boundary) {
        if (v < 0 || v >= graph.vertex_count())
            throw Error(ErrorCode::InvalidArgument, "boundary vertex out of range");
        if (seen[v])
            throw Error(ErrorCode::InvalidArgument, "duplicate boundary vertex");
        seen[v] = 1;
    }
}

bool BoundariedGraph::is_boundary(int v) const {
    return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

Graph glue(const BoundariedGraph& a, const BoundariedGraph& b) {
    return glue_boundaried(a, b).graph;
}

BoundariedGraph glue_boundaried(const BoundariedGraph& a, const BoundariedGraph& b) {
    if (a.boundary_size() != b.boundary_size())
        throw Error(ErrorCode::BoundaryMismatch,
                    "boundary sizes differ: " + std::to_string(a.boundary_size()) + " vs " +
                        std::to_string(b.boundary_size()));
    int t = a.boundary_size();
    int na = a.graph.vertex_count();

    // Map b's vertices into the result.
    std::vector<int> map_b(b.graph.vertex_count(), -1);
    for (int i = 0; i < t; ++i) map_b[b.boundary[i]] = a.boundary[i];
    int next = na;
    for (int v = 0; v < b.graph.vertex_count(); ++v)
        if (map_b[v] < 0) map_b[v] = next++;

    std::vector<Edge> edges = a.graph.edges();
    for (const Edge& e : b.graph.edges())
        edges.emplace_back(map_b[e.u], map_b[e.v]);
    // Graph construction collapses the parallel edges.
    return BoundariedGraph(Graph(next, std::move(edges)), a.boundary);
}

BoundariedGraph normalize_boundary_first(const BoundariedGraph& b) {
    int n = b.graph.vertex_count();
    int t = b.boundary_size();
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < t; ++i) new_id[b.boundary[i]] = i;
    int next = t;
    for (int v = 0; v < n; ++v)
        if (new_id[v] < 0) new_id[v] = next++;
    std::vector<Edge> edges;
    edges.reserve(b.graph.edges().size());
    for (const Edge& e : b.graph.edges())
        edges.emplace_back(new_id[e.u], new_id[e.v]);
    std::vector<int> boundary(t);
    std::iota(boundary.begin(), boundary.end(), 0);
    return BoundariedGraph(Graph(n, std::move(edges)), std::move(boundary));
}

std::string boundary_canonical_key(const BoundariedGraph& b, const Limits& limits) {
    BoundariedGraph nb = normalize_boundary_first(b);
    int n = nb.graph.vertex_count();
    int t = nb.boundary_size();
    if (n > limits.canonical_max_vertices)
        throw Error(ErrorCode::ResourceLimit, "boundary canonical form limited to " +
                                                  std::to_string(limits.canonical_max_vertices) +
                                                  " vertices");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits;
        bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits.push_back(nb.graph.has_edge(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || bits < best) best = std::move(bits);
    } while (std::next_permutation(perm.begin() + t, perm.end()));
    return std::to_string(n) + "/" + std::to_string(t) + ":" + best;
}

bool boundary_isomorphic(const BoundariedGraph& a, const BoundariedGraph& b,
                         const Limits& limits) {
    if (a.boundary_size() != b.boundary_size()) return false;
    if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
    if (a.graph.edge_count() != b.graph.edge_count()) return false;
    return boundary_canonical_key(a, limits) == boundary_canonical_key(b, limits);
}

}  // namespace fdel
