#pragma once

#include <string>
#include <vector>

#include "fdel/graph.hpp"

namespace fdel {

/// Graph with an ordered boundary: boundary[i] carries label i+1.
/// The unit of gluing and protrusion replacement.
struct BoundariedGraph {
    Graph graph;
    std::vector<int> boundary;  // distinct vertex ids of `graph`

    BoundariedGraph() = default;
    BoundariedGraph(Graph g, std::vector<int> b);

    int boundary_size() const { return static_cast<int>(boundary.size()); }
    bool is_boundary(int v) const;
};

/// Disjoint union with boundary vertex i of `a` identified with boundary
/// vertex i of `b`; parallel edges collapse. Vertex ids: all of `a` first
/// (keeping its numbering), then the non-boundary vertices of `b` in
/// ascending order.
Graph glue(const BoundariedGraph& a, const BoundariedGraph& b);

/// Same gluing, but the result keeps a's boundary as its own.
BoundariedGraph glue_boundaried(const BoundariedGraph& a, const BoundariedGraph& b);

/// Relabel so the boundary occupies ids 0..t-1 in label order and the
/// interior follows in ascending original order.
BoundariedGraph normalize_boundary_first(const BoundariedGraph& b);

/// Canonical form under boundary-respecting isomorphism: boundary
/// vertices are fixed pointwise, interior vertices permute freely.
std::string boundary_canonical_key(const BoundariedGraph& b,
                                   const Limits& limits = default_limits());

bool boundary_isomorphic(const BoundariedGraph& a, const BoundariedGraph& b,
                         const Limits& limits = default_limits());

}  // namespace fdel
