#pragma once

#include <string>
#include <vector>

#include "fdel/treewidth.hpp"

namespace fdel {

/// Rooted decomposition in which every node is one of: Leaf (empty bag),
/// Introduce (child bag plus one vertex), Forget (child bag minus one
/// vertex), Join (two children with identical bags).
struct NiceTreeDecomposition {
    enum class NodeKind { Leaf, Introduce, Forget, Join };

    struct Node {
        NodeKind kind = NodeKind::Leaf;
        int vertex = -1;           // for Introduce / Forget
        std::vector<int> bag;      // sorted
        int left = -1, right = -1; // children (right only for Join)
    };

    std::vector<Node> nodes;
    int root = -1;

    int width() const;
    int node_count() const { return static_cast<int>(nodes.size()); }
};

/// Convert a valid decomposition to nice form, rooted at bag 0. Width is
/// preserved exactly; each tree edge expands into at most
/// |symmetric difference| intermediate nodes (forgets first, then
/// introduces, so no intermediate bag exceeds the larger endpoint).
NiceTreeDecomposition make_nice(const TreeDecomposition& t);

/// Structural node-type constraints only (no graph needed).
bool validate_nice_structure(const NiceTreeDecomposition& nt, std::string* why = nullptr);

/// View as a plain TreeDecomposition (for coverage checks against a graph).
TreeDecomposition to_tree_decomposition(const NiceTreeDecomposition& nt);

}  // namespace fdel
