#include "fdel/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fdel {

Graph::Graph(int n) : n_(n) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    build_adjacency();
}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n, std::move(edges), {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<int> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v)
            throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw Error(ErrorCode::InvalidArgument,
                        "edge endpoint out of range: " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw Error(ErrorCode::InvalidArgument, "label vector size mismatch");
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::InvalidArgument, "vertex out of range: " + std::to_string(v));
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = neighbors(u < v ? u : v);
    int w = u < v ? v : u;
    return std::binary_search(nb.begin(), nb.end(), w);
}

int Graph::label(int v) const {
    if (v < 0 || v >= n_)
        throw Error(ErrorCode::InvalidArgument, "vertex out of range: " + std::to_string(v));
    return labels_.empty() ? v : labels_[v];
}

// ---- parsing ----

namespace {

bool ignorable_line(const std::string& line) {
    if (line.empty()) return true;
    if (line == "c" || line.rfind("c ", 0) == 0) return true;
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph parse_graph(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    long long m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (ignorable_line(line)) continue;
        std::istringstream hs(line);
        if (!(hs >> n >> m))
            parse_fail(line_no, "expected header \"n m\"");
        std::string rest;
        if (hs >> rest)
            parse_fail(line_no, "trailing tokens after header");
        if (n < 0 || m < 0)
            parse_fail(line_no, "negative counts in header");
        break;
    }
    if (n < 0)
        throw Error(ErrorCode::ParseError, "empty input, missing header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    long long read = 0;
    while (read < m && std::getline(in, line)) {
        ++line_no;
        if (ignorable_line(line)) continue;
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v))
            parse_fail(line_no, "expected edge \"u v\"");
        std::string rest;
        if (es >> rest)
            parse_fail(line_no, "trailing tokens after edge");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(line_no, "endpoint out of range 1.." + std::to_string(n));
        if (u == v)
            parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
        Edge e(static_cast<int>(u - 1), static_cast<int>(v - 1));
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
            if (warnings)
                warnings->push_back("line " + std::to_string(line_no) + ": duplicate edge " +
                                    std::to_string(u) + " " + std::to_string(v) + " collapsed");
        } else {
            edges.push_back(e);
        }
        ++read;
    }
    if (read < m)
        throw Error(ErrorCode::ParseError,
                    "declared " + std::to_string(m) + " edges, found " + std::to_string(read));
    while (std::getline(in, line)) {
        ++line_no;
        if (!ignorable_line(line))
            parse_fail(line_no, "unexpected content after edge list");
    }
    return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges())  // already sorted lexicographically
        out << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

// ---- basic structure ----

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() <= 1 || connected_components(g).size() == 1;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count())
            throw Error(ErrorCode::InvalidArgument, "subgraph vertex out of range");
        if (i > 0 && vertices[i - 1] >= v)
            throw Error(ErrorCode::InvalidArgument, "subgraph vertices must be sorted and distinct");
        pos[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0)
            edges.emplace_back(pos[e.u], pos[e.v]);
    std::vector<int> labels(vertices.size());
    for (size_t i = 0; i < vertices.size(); ++i)
        labels[i] = g.label(vertices[i]);
    return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

Graph remove_vertices(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> gone(g.vertex_count(), 0);
    for (int v : vertices) {
        if (v < 0 || v >= g.vertex_count())
            throw Error(ErrorCode::InvalidArgument, "vertex out of range");
        gone[v] = 1;
    }
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool has_cycle(const Graph& g) {
    // Iterative DFS with parent-edge exclusion.
    int n = g.vertex_count();
    std::vector<int> parent(n, -2);
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                } else if (w != parent[v]) {
                    return true;
                }
            }
        }
    }
    return false;
}

// ---- canonical form ----

namespace {

std::string adjacency_bits(const Graph& g, const std::vector<int>& perm) {
    // perm[i] = original vertex placed at position i.
    int n = g.vertex_count();
    std::string bits;
    bits.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            bits.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    return bits;
}

}  // namespace

std::string canonical_key(const Graph& g, const Limits& limits) {
    int n = g.vertex_count();
    if (n > limits.canonical_max_vertices)
        throw Error(ErrorCode::ResourceLimit,
                    "canonical form limited to " + std::to_string(limits.canonical_max_vertices) +
                        " vertices, got " + std::to_string(n));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string bits = adjacency_bits(g, perm);
        if (best.empty() || bits < best) best = std::move(bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

bool isomorphic(const Graph& a, const Graph& b, const Limits& limits) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a, limits) == canonical_key(b, limits);
}

// ---- small named graphs ----

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes i -- i+5.
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    return Graph(10, std::move(edges));
}

}  // namespace fdel
