#include "fdel/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>

namespace fdel {

std::string DecompositionViolation::describe() const {
    switch (kind) {
    case Kind::BadStructure: return "malformed decomposition structure";
    case Kind::VertexUncovered: return "vertex " + std::to_string(a) + " in no bag";
    case Kind::EdgeUncovered:
        return "edge " + std::to_string(a) + "-" + std::to_string(b) + " in no bag";
    case Kind::OccurrenceDisconnected:
        return "bags containing vertex " + std::to_string(a) + " are not connected";
    case Kind::WidthMismatch:
        return "declared width " + std::to_string(a) + " != actual " + std::to_string(b);
    }
    return "unknown violation";
}

DecompositionCheck check_decomposition(const Graph& g, const TreeDecomposition& t) {
    DecompositionCheck out;
    using K = DecompositionViolation::Kind;
    int b = static_cast<int>(t.bags.size());

    if (b == 0) {
        out.violations.push_back({K::BadStructure});
        return out;
    }
    for (const auto& bag : t.bags)
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count()) {
                out.violations.push_back({K::BadStructure});
                return out;
            }
    for (auto [x, y] : t.tree)
        if (x < 0 || x >= b || y < 0 || y >= b || x == y) {
            out.violations.push_back({K::BadStructure});
            return out;
        }
    // Tree over bags: b-1 edges and connected.
    if (static_cast<int>(t.tree.size()) != b - 1) {
        out.violations.push_back({K::BadStructure});
        return out;
    }
    std::vector<std::vector<int>> adj(b);
    for (auto [x, y] : t.tree) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    {
        std::vector<char> seen(b, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != b) {
            out.violations.push_back({K::BadStructure});
            return out;
        }
    }

    auto bag_has = [&](int i, int v) {
        return std::binary_search(t.bags[i].begin(), t.bags[i].end(), v);
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        bool covered = false;
        for (int i = 0; i < b && !covered; ++i) covered = bag_has(i, v);
        if (!covered) out.violations.push_back({K::VertexUncovered, v});
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (int i = 0; i < b && !covered; ++i) covered = bag_has(i, e.u) && bag_has(i, e.v);
        if (!covered) out.violations.push_back({K::EdgeUncovered, e.u, e.v});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        // The bags containing v must induce a connected subtree.
        int start = -1, total = 0;
        for (int i = 0; i < b; ++i)
            if (bag_has(i, v)) {
                if (start < 0) start = i;
                ++total;
            }
        if (total <= 1) continue;
        std::vector<char> seen(b, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (!seen[y] && bag_has(y, v)) {
                    seen[y] = 1;
                    ++cnt;
                    stack.push_back(y);
                }
        }
        if (cnt != total) out.violations.push_back({K::OccurrenceDisconnected, v});
    }
    int actual = -1;
    for (const auto& bag : t.bags) actual = std::max(actual, static_cast<int>(bag.size()) - 1);
    if (actual != t.width) out.violations.push_back({K::WidthMismatch, t.width, actual});
    return out;
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& t) {
    return check_decomposition(g, t).ok();
}

// ---- elimination orders ----

TreeDecomposition decomposition_from_order(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorCode::InvalidArgument, "elimination order must list every vertex once");
    if (n == 0) return TreeDecomposition{{{}}, {}, -1};

    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
            throw Error(ErrorCode::InvalidArgument, "elimination order must list every vertex once");
        pos[order[i]] = i;
    }

    // Simulate elimination with fill-in; bag of v is v plus its current
    // neighborhood at elimination time.
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<std::vector<int>> bags(n);
    std::vector<int> parent(n, -1);  // by vertex, as bag index of next eliminated neighbor
    std::vector<int> bag_of(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        bag_of[v] = i;
        std::vector<int> nb(adj[v].begin(), adj[v].end());
        bags[i] = nb;
        bags[i].push_back(v);
        std::sort(bags[i].begin(), bags[i].end());
        for (int a : nb) {
            adj[a].erase(v);
            for (int c : nb)
                if (a < c) {
                    adj[a].insert(c);
                    adj[c].insert(a);
                }
        }
        if (!nb.empty()) {
            int next = *std::min_element(nb.begin(), nb.end(),
                                         [&](int a, int c) { return pos[a] < pos[c]; });
            parent[v] = next;
        }
    }

    TreeDecomposition t;
    t.bags = std::move(bags);
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (parent[v] >= 0)
            t.tree.emplace_back(i, bag_of[parent[v]]);
        else
            roots.push_back(i);
    }
    // One root per connected component; chain them so the bag tree is a tree.
    for (size_t i = 0; i + 1 < roots.size(); ++i) t.tree.emplace_back(roots[i], roots[i + 1]);
    int w = -1;
    for (const auto& bag : t.bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    t.width = w;
    return t;
}

TreeDecomposition greedy_decomposition(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (best < 0 || adj[v].size() < adj[best].size()) best = v;  // ties: smallest id
        }
        order.push_back(best);
        gone[best] = 1;
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (int a : nb) {
            adj[a].erase(best);
            for (int c : nb)
                if (a < c) {
                    adj[a].insert(c);
                    adj[c].insert(a);
                }
        }
        adj[best].clear();
    }
    return decomposition_from_order(g, order);
}

// ---- exact treewidth ----

namespace {

/// Fill degree of v after the prefix S has been eliminated: vertices
/// outside S (and != v) reachable from v by paths internal to S.
int fill_degree(const std::vector<std::uint32_t>& adj, std::uint32_t s, int v) {
    std::uint32_t reach = adj[v];
    std::uint32_t expanded = 0;
    while (true) {
        std::uint32_t frontier = reach & s & ~expanded;
        if (!frontier) break;
        expanded |= frontier;
        while (frontier) {
            int u = std::countr_zero(frontier);
            frontier &= frontier - 1;
            reach |= adj[u];
        }
    }
    return std::popcount(reach & ~s & ~(std::uint32_t(1) << v));
}

}  // namespace

std::optional<std::pair<int, TreeDecomposition>> exact_treewidth(const Graph& g, int w_max,
                                                                 const Limits& limits) {
    if (w_max < 0)
        throw Error(ErrorCode::InvalidArgument, "w_max must be nonnegative");
    int n = g.vertex_count();
    if (n > limits.exact_treewidth_max_vertices || n > 30)
        throw Error(ErrorCode::ResourceLimit,
                    "exact treewidth limited to " +
                        std::to_string(std::min(limits.exact_treewidth_max_vertices, 30)) +
                        " vertices, got " + std::to_string(n));
    if (n == 0) return std::make_pair(-1, TreeDecomposition{{{}}, {}, -1});

    std::vector<std::uint32_t> adj(n, 0);
    for (const Edge& e : g.edges()) {
        adj[e.u] |= std::uint32_t(1) << e.v;
        adj[e.v] |= std::uint32_t(1) << e.u;
    }

    const std::uint32_t full = (n == 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
    const std::int8_t kBig = 127;
    std::vector<std::int8_t> dp(std::size_t(1) << n, kBig);
    std::vector<std::int8_t> choice(std::size_t(1) << n, -1);
    dp[0] = -1;

    for (std::uint32_t s = 1; s <= full; ++s) {
        std::int8_t best = kBig;
        std::int8_t best_v = -1;
        std::uint32_t it = s;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            std::uint32_t prev = s & ~(std::uint32_t(1) << v);
            if (dp[prev] >= kBig || dp[prev] > w_max) continue;
            int q = fill_degree(adj, prev, v);
            int cost = std::max<int>(dp[prev], q);
            if (cost > w_max) continue;
            if (cost < best || (cost == best && best_v > v)) {
                best = static_cast<std::int8_t>(cost);
                best_v = static_cast<std::int8_t>(v);
            }
        }
        dp[s] = best;
        choice[s] = best_v;
        if (s == full) break;
    }

    if (dp[full] >= kBig || dp[full] > w_max) return std::nullopt;

    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        int v = choice[s];
        order[i] = v;
        s &= ~(std::uint32_t(1) << v);
    }
    TreeDecomposition t = decomposition_from_order(g, order);
    return std::make_pair(static_cast<int>(dp[full]), std::move(t));
}

// ---- serialization ----

std::string write_decomposition(const TreeDecomposition& t) {
    int n = 0;
    for (const auto& bag : t.bags)
        for (int v : bag) n = std::max(n, v + 1);
    std::ostringstream out;
    out << "s td " << t.bags.size() << ' ' << t.width << ' ' << n << '\n';
    for (size_t i = 0; i < t.bags.size(); ++i) {
        out << "b " << i + 1;
        for (int v : t.bags[i]) out << ' ' << v + 1;
        out << '\n';
    }
    auto edges = t.tree;
    for (auto& [x, y] : edges)
        if (x > y) std::swap(x, y);
    std::sort(edges.begin(), edges.end());
    for (auto [x, y] : edges) out << x + 1 << ' ' << y + 1 << '\n';
    return out.str();
}

TreeDecomposition read_decomposition(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    TreeDecomposition t;
    int bags = -1, n = -1;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (bags < 0) {
            std::string s, td;
            if (!(ls >> s >> td >> bags >> t.width >> n) || s != "s" || td != "td")
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": expected \"s td ...\" header");
            t.bags.resize(bags);
            continue;
        }
        if (line[0] == 'b') {
            char b;
            int idx;
            ls >> b >> idx;
            if (!ls || idx < 1 || idx > bags)
                throw Error(ErrorCode::ParseError,
                            "line " + std::to_string(line_no) + ": bad bag line");
            int v;
            while (ls >> v) t.bags[idx - 1].push_back(v - 1);
            continue;
        }
        int x, y;
        ls >> x >> y;
        if (!ls || x < 1 || x > bags || y < 1 || y > bags)
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad tree edge");
        t.tree.emplace_back(x - 1, y - 1);
    }
    if (bags < 0) throw Error(ErrorCode::ParseError, "missing decomposition header");
    return t;
}

}  // namespace fdel
