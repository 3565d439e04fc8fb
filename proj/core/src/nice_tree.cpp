#include "fdel/nice_tree.hpp"

#include <algorithm>

namespace fdel {

int NiceTreeDecomposition::width() const {
    int w = -1;
    for (const Node& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return w;
}

namespace {

using Node = NiceTreeDecomposition::Node;
using Kind = NiceTreeDecomposition::NodeKind;

struct NiceBuilder {
    const TreeDecomposition& t;
    std::vector<std::vector<int>> adj;
    std::vector<Node> nodes;

    int add(Node n) {
        nodes.push_back(std::move(n));
        return static_cast<int>(nodes.size()) - 1;
    }

    /// Leaf -> introduce chain building up `bag`.
    int build_leaf_chain(const std::vector<int>& bag) {
        int cur = add({Kind::Leaf, -1, {}, -1, -1});
        std::vector<int> acc;
        for (int v : bag) {
            acc.push_back(v);
            cur = add({Kind::Introduce, v, acc, cur, -1});
        }
        return cur;
    }

    /// Adapt a subtree whose top bag is `from` into one with bag `to`:
    /// forget from\to (ascending), then introduce to\from (ascending).
    int adapt(int node, std::vector<int> from, const std::vector<int>& to) {
        int cur = node;
        for (int v : std::vector<int>(from)) {
            if (!std::binary_search(to.begin(), to.end(), v)) {
                from.erase(std::find(from.begin(), from.end(), v));
                cur = add({Kind::Forget, v, from, cur, -1});
            }
        }
        for (int v : to) {
            if (!std::binary_search(from.begin(), from.end(), v)) {
                from.insert(std::upper_bound(from.begin(), from.end(), v), v);
                cur = add({Kind::Introduce, v, from, cur, -1});
            }
        }
        return cur;
    }

    int build(int bag_idx, int parent) {
        std::vector<int> children;
        for (int c : adj[bag_idx])
            if (c != parent) children.push_back(c);
        const std::vector<int>& bag = t.bags[bag_idx];

        if (children.empty()) return build_leaf_chain(bag);

        std::vector<int> towers;
        for (int c : children) towers.push_back(adapt(build(c, bag_idx), t.bags[c], bag));
        int cur = towers[0];
        for (size_t i = 1; i < towers.size(); ++i)
            cur = add({Kind::Join, -1, bag, cur, towers[i]});
        return cur;
    }
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& t) {
    int b = static_cast<int>(t.bags.size());
    if (b == 0)
        throw Error(ErrorCode::InvalidArgument, "decomposition has no bags");
    if (static_cast<int>(t.tree.size()) != b - 1)
        throw Error(ErrorCode::InvalidArgument, "decomposition tree is not a tree");
    for (const auto& bag : t.bags)
        if (!std::is_sorted(bag.begin(), bag.end()))
            throw Error(ErrorCode::InvalidArgument, "bags must be sorted");

    NiceBuilder builder{t, std::vector<std::vector<int>>(b), {}};
    for (auto [x, y] : t.tree) {
        if (x < 0 || x >= b || y < 0 || y >= b)
            throw Error(ErrorCode::InvalidArgument, "tree edge out of range");
        builder.adj[x].push_back(y);
        builder.adj[y].push_back(x);
    }
    // Reject cycles (connectivity follows from the edge count).
    {
        std::vector<char> seen(b, 0);
        std::vector<std::pair<int, int>> stack{{0, -1}};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            auto [x, p] = stack.back();
            stack.pop_back();
            bool skipped_parent = false;
            for (int y : builder.adj[x]) {
                if (y == p && !skipped_parent) {
                    skipped_parent = true;
                    continue;
                }
                if (seen[y])
                    throw Error(ErrorCode::InvalidArgument, "decomposition tree has a cycle");
                seen[y] = 1;
                ++cnt;
                stack.push_back({y, x});
            }
        }
        if (cnt != b) throw Error(ErrorCode::InvalidArgument, "decomposition tree is disconnected");
    }

    NiceTreeDecomposition out;
    out.root = builder.build(0, -1);
    out.nodes = std::move(builder.nodes);
    return out;
}

bool validate_nice_structure(const NiceTreeDecomposition& nt, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (nt.root < 0 || nt.root >= nt.node_count()) return fail("bad root index");
    std::vector<int> indeg(nt.node_count(), 0);
    for (int i = 0; i < nt.node_count(); ++i) {
        const Node& n = nt.nodes[i];
        if (!std::is_sorted(n.bag.begin(), n.bag.end())) return fail("unsorted bag");
        auto check_child = [&](int c) {
            if (c < 0 || c >= nt.node_count() || c == i) return false;
            ++indeg[c];
            return true;
        };
        switch (n.kind) {
        case Kind::Leaf:
            if (!n.bag.empty()) return fail("leaf with nonempty bag");
            if (n.left != -1 || n.right != -1) return fail("leaf with children");
            break;
        case Kind::Introduce: {
            if (n.right != -1) return fail("introduce with two children");
            if (!check_child(n.left)) return fail("introduce child index");
            const Node& c = nt.nodes[n.left];
            std::vector<int> expect = c.bag;
            if (std::binary_search(expect.begin(), expect.end(), n.vertex))
                return fail("introduced vertex already in child bag");
            expect.insert(std::upper_bound(expect.begin(), expect.end(), n.vertex), n.vertex);
            if (expect != n.bag) return fail("introduce bag mismatch");
            break;
        }
        case Kind::Forget: {
            if (n.right != -1) return fail("forget with two children");
            if (!check_child(n.left)) return fail("forget child index");
            const Node& c = nt.nodes[n.left];
            if (!std::binary_search(c.bag.begin(), c.bag.end(), n.vertex))
                return fail("forgotten vertex not in child bag");
            std::vector<int> expect = c.bag;
            expect.erase(std::find(expect.begin(), expect.end(), n.vertex));
            if (expect != n.bag) return fail("forget bag mismatch");
            break;
        }
        case Kind::Join: {
            if (!check_child(n.left) || !check_child(n.right)) return fail("join child index");
            if (nt.nodes[n.left].bag != n.bag || nt.nodes[n.right].bag != n.bag)
                return fail("join bags differ");
            break;
        }
        }
    }
    for (int i = 0; i < nt.node_count(); ++i) {
        int expected = (i == nt.root) ? 0 : 1;
        if (indeg[i] != expected) return fail("node " + std::to_string(i) + " has wrong in-degree");
    }
    return true;
}

TreeDecomposition to_tree_decomposition(const NiceTreeDecomposition& nt) {
    TreeDecomposition t;
    t.bags.reserve(nt.nodes.size());
    for (const Node& n : nt.nodes) t.bags.push_back(n.bag);
    for (int i = 0; i < nt.node_count(); ++i) {
        if (nt.nodes[i].left >= 0) t.tree.emplace_back(i, nt.nodes[i].left);
        if (nt.nodes[i].right >= 0) t.tree.emplace_back(i, nt.nodes[i].right);
    }
    int w = -1;
    for (const auto& bag : t.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    t.width = w;
    return t;
}

}  // namespace fdel
