#include "fdel/minor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

namespace fdel {

namespace {

// ---- model validation helpers ----

bool subset_connected(const Graph& g, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    std::set<int> want(vs.begin(), vs.end());
    std::vector<int> stack{vs[0]};
    std::set<int> seen{vs[0]};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (want.count(w) && !seen.count(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen.size() == want.size();
}

}  // namespace

bool validate_minor_model(const Graph& host, const Graph& pattern, const MinorModel& model,
                          std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(model.branch_sets.size()) != pattern.vertex_count())
        return fail("branch set count != pattern vertex count");
    std::vector<char> used(host.vertex_count(), 0);
    for (int p = 0; p < pattern.vertex_count(); ++p) {
        const auto& bs = model.branch_sets[p];
        if (bs.empty()) return fail("empty branch set " + std::to_string(p));
        for (int v : bs) {
            if (v < 0 || v >= host.vertex_count())
                return fail("branch set vertex out of range");
            if (used[v]) return fail("branch sets overlap at vertex " + std::to_string(v));
            used[v] = 1;
        }
        if (!subset_connected(host, bs))
            return fail("branch set " + std::to_string(p) + " not connected");
    }
    if (model.witness_edges.size() != pattern.edges().size())
        return fail("witness edge count != pattern edge count");
    for (size_t i = 0; i < pattern.edges().size(); ++i) {
        const Edge& pe = pattern.edges()[i];
        const Edge& he = model.witness_edges[i];
        if (!host.has_edge(he.u, he.v)) return fail("witness edge not in host");
        const auto& a = model.branch_sets[pe.u];
        const auto& b = model.branch_sets[pe.v];
        bool ua = std::binary_search(a.begin(), a.end(), he.u);
        bool vb = std::binary_search(b.begin(), b.end(), he.v);
        bool ub = std::binary_search(b.begin(), b.end(), he.u);
        bool va = std::binary_search(a.begin(), a.end(), he.v);
        if (!((ua && vb) || (ub && va)))
            return fail("witness edge does not join the right branch sets");
    }
    return true;
}

// ---- girth / shortest cycle ----

std::optional<std::vector<int>> shortest_cycle(const Graph& g) {
    int n = g.vertex_count();
    std::optional<std::vector<int>> best;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent(n, -1);
        std::vector<int> queue{root};
        dist[root] = 0;
        size_t head = 0;
        while (head < queue.size()) {
            int x = queue[head++];
            if (best && 2 * dist[x] + 1 >= static_cast<int>(best->size())) break;
            for (int y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (y != parent[x] && parent[y] != x) {
                    // Non-tree edge: walk both endpoints up to their
                    // lowest common ancestor to extract the cycle.
                    std::vector<int> px{x}, py{y};
                    while (px.back() != root) px.push_back(parent[px.back()]);
                    while (py.back() != root) py.push_back(parent[py.back()]);
                    while (px.size() >= 2 && py.size() >= 2 &&
                           px[px.size() - 1] == py[py.size() - 1] &&
                           px[px.size() - 2] == py[py.size() - 2]) {
                        px.pop_back();
                        py.pop_back();
                    }
                    // px and py now meet exactly at their last element.
                    std::vector<int> cycle(px.begin(), px.end());
                    for (auto it = py.rbegin() + 1; it != py.rend(); ++it) cycle.push_back(*it);
                    if (cycle.size() >= 3 && (!best || cycle.size() < best->size())) best = cycle;
                }
            }
        }
    }
    return best;
}

std::optional<int> girth(const Graph& g) {
    auto c = shortest_cycle(g);
    if (!c) return std::nullopt;
    return static_cast<int>(c->size());
}

// ---- contraction search ----

namespace {

constexpr int kMaxMaskBits = 64;

struct SearchState {
    // One entry per current super-vertex, ordered by lowest original id.
    std::vector<std::uint64_t> blocks;  // original host vertices merged into it
    std::vector<std::uint64_t> adj;     // adjacency over super-vertex indices
};

std::string state_key(const SearchState& s, int host_n) {
    // Block-min-id per original vertex; two contraction orders producing
    // the same partition collide here.
    std::string key(static_cast<size_t>(host_n), '\0');
    for (size_t i = 0; i < s.blocks.size(); ++i) {
        std::uint64_t m = s.blocks[i];
        int min_id = std::countr_zero(m);
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            key[static_cast<size_t>(v)] = static_cast<char>(min_id);
        }
    }
    return key;
}

SearchState contract(const SearchState& s, int i, int j) {
    // Merge super-vertices i and j (i < j), preserving min-id order.
    int n = static_cast<int>(s.blocks.size());
    std::vector<int> remap(n);
    SearchState out;
    out.blocks.reserve(n - 1);
    for (int k = 0; k < n; ++k) {
        if (k == j) {
            remap[k] = remap[i];
            continue;
        }
        remap[k] = static_cast<int>(out.blocks.size());
        out.blocks.push_back(k == i ? (s.blocks[i] | s.blocks[j]) : s.blocks[k]);
    }
    out.adj.assign(out.blocks.size(), 0);
    for (int k = 0; k < n; ++k) {
        std::uint64_t row = s.adj[k];
        while (row) {
            int l = std::countr_zero(row);
            row &= row - 1;
            if (remap[k] != remap[l]) {
                out.adj[remap[k]] |= std::uint64_t(1) << remap[l];
                out.adj[remap[l]] |= std::uint64_t(1) << remap[k];
            }
        }
    }
    return out;
}

int count_state_edges(const SearchState& s) {
    int total = 0;
    for (size_t i = 0; i < s.adj.size(); ++i)
        total += std::popcount(s.adj[i] >> (i + 1));
    return total;
}

/// Backtracking subgraph embedding of `pattern` into the state graph.
/// Returns the assignment (pattern vertex -> super-vertex index) or
/// nullopt. Pattern vertices are matched in order of decreasing degree.
std::optional<std::vector<int>> embed_subgraph(const Graph& pattern, const SearchState& s) {
    int pn = pattern.vertex_count();
    int sn = static_cast<int>(s.blocks.size());
    if (pn > sn) return std::nullopt;

    std::vector<int> order(pn);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });

    std::vector<int> state_deg(sn);
    for (int i = 0; i < sn; ++i) state_deg[i] = std::popcount(s.adj[i]);

    std::vector<int> assign(pn, -1);
    std::uint64_t used = 0;

    auto rec = [&](auto&& self, int idx) -> bool {
        if (idx == pn) return true;
        int p = order[idx];
        for (int cand = 0; cand < sn; ++cand) {
            if (used & (std::uint64_t(1) << cand)) continue;
            if (state_deg[cand] < pattern.degree(p)) continue;
            bool ok = true;
            for (int q : pattern.neighbors(p)) {
                if (assign[q] >= 0 && !(s.adj[cand] & (std::uint64_t(1) << assign[q]))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assign[p] = cand;
            used |= std::uint64_t(1) << cand;
            if (self(self, idx + 1)) return true;
            assign[p] = -1;
            used &= ~(std::uint64_t(1) << cand);
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return assign;
}

struct MinorSearch {
    const Graph& host;
    const Graph& core;       // pattern minus isolated vertices
    int isolated_needed;     // stripped isolated pattern vertices
    const Limits& limits;
    bool want_model;
    std::int64_t states = 0;
    std::unordered_set<std::string> failed;
    std::optional<SearchState> found_state;
    std::optional<std::vector<int>> found_assign;

    bool run(SearchState s) {
        ++states;
        if (states > limits.minor_state_budget)
            throw Error(ErrorCode::ResourceLimit, "minor search state budget exceeded");
        int sn = static_cast<int>(s.blocks.size());
        if (sn < core.vertex_count() + isolated_needed) return false;
        if (count_state_edges(s) < core.edge_count()) return false;

        if (auto assign = embed_subgraph(core, s)) {
            found_state = s;
            found_assign = assign;
            return true;
        }

        std::string key = state_key(s, host.vertex_count());
        if (failed.count(key)) return false;

        for (int i = 0; i < sn; ++i) {
            std::uint64_t row = s.adj[i] >> (i + 1);
            while (row) {
                int j = i + 1 + std::countr_zero(row);
                row &= row - 1;
                if (run(contract(s, i, j))) return true;
            }
        }
        failed.insert(std::move(key));
        return false;
    }
};

SearchState initial_state(const Graph& host) {
    SearchState s;
    int n = host.vertex_count();
    s.blocks.resize(n);
    s.adj.assign(n, 0);
    for (int v = 0; v < n; ++v) s.blocks[v] = std::uint64_t(1) << v;
    for (const Edge& e : host.edges()) {
        s.adj[e.u] |= std::uint64_t(1) << e.v;
        s.adj[e.v] |= std::uint64_t(1) << e.u;
    }
    return s;
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

/// Split pattern into (core without isolated vertices, isolated count).
std::pair<Graph, int> strip_isolated(const Graph& pattern) {
    std::vector<int> keep;
    for (int v = 0; v < pattern.vertex_count(); ++v)
        if (pattern.degree(v) > 0) keep.push_back(v);
    int isolated = pattern.vertex_count() - static_cast<int>(keep.size());
    return {induced_subgraph(pattern, keep), isolated};
}

MinorModel model_from_state(const Graph& host, const Graph& pattern, const Graph& core,
                            const SearchState& s, const std::vector<int>& core_assign) {
    // Rebuild the branch sets in original pattern-vertex order: embedded
    // core vertices take their super-vertex blocks, isolated pattern
    // vertices take unused super-vertices in ascending min-id order.
    int pn = pattern.vertex_count();
    std::vector<std::uint64_t> masks(pn, 0);
    std::vector<char> used(s.blocks.size(), 0);
    int ci = 0;
    std::vector<int> core_of(pn, -1);
    for (int v = 0; v < pn; ++v)
        if (pattern.degree(v) > 0) core_of[v] = ci++;
    for (int v = 0; v < pn; ++v) {
        if (core_of[v] >= 0) {
            int sv = core_assign[core_of[v]];
            masks[v] = s.blocks[sv];
            used[sv] = 1;
        }
    }
    size_t next_free = 0;
    for (int v = 0; v < pn; ++v) {
        if (core_of[v] >= 0) continue;
        while (next_free < s.blocks.size() && used[next_free]) ++next_free;
        masks[v] = s.blocks[next_free];
        used[next_free] = 1;
    }

    MinorModel model;
    model.branch_sets.resize(pn);
    for (int v = 0; v < pn; ++v) model.branch_sets[v] = mask_to_vertices(masks[v]);
    for (const Edge& pe : pattern.edges()) {
        Edge witness(-1, -1);
        for (const Edge& he : host.edges()) {
            std::uint64_t mu = std::uint64_t(1) << he.u;
            std::uint64_t mv = std::uint64_t(1) << he.v;
            if (((masks[pe.u] & mu) && (masks[pe.v] & mv)) ||
                ((masks[pe.u] & mv) && (masks[pe.v] & mu))) {
                witness = he;
                break;
            }
        }
        model.witness_edges.push_back(witness);
    }
    (void)core;
    return model;
}

bool general_minor_search(const Graph& host, const Graph& core, int isolated, const Limits& limits,
                          MinorModel* model_out, const Graph* full_pattern) {
    if (host.vertex_count() > limits.minor_max_host_vertices ||
        host.vertex_count() > kMaxMaskBits)
        throw Error(ErrorCode::ResourceLimit,
                    "minor search limited to " +
                        std::to_string(std::min(limits.minor_max_host_vertices, kMaxMaskBits)) +
                        " host vertices");
    MinorSearch search{host, core, isolated, limits, model_out != nullptr};
    if (!search.run(initial_state(host))) return false;
    if (model_out)
        *model_out =
            model_from_state(host, *full_pattern, core, *search.found_state, *search.found_assign);
    return true;
}

// ---- fast decision paths ----

bool is_triangle(const Graph& g) {
    return g.vertex_count() == 3 && g.edge_count() == 3;
}

bool is_k4(const Graph& g) { return g.vertex_count() == 4 && g.edge_count() == 6; }

/// Exact K4-minor test by series-parallel reduction: repeatedly delete
/// degree <= 1 vertices and suppress degree-2 vertices; a nonempty
/// remainder has minimum degree >= 3 and therefore a K4 minor.
bool has_k4_minor_sp(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> alive(n, 1);
    bool changed = true;
    int remaining = n;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (adj[v].size() <= 1) {
                for (int w : adj[v]) adj[w].erase(v);
                adj[v].clear();
                alive[v] = 0;
                --remaining;
                changed = true;
            } else if (adj[v].size() == 2) {
                auto it = adj[v].begin();
                int a = *it++;
                int b = *it;
                adj[a].erase(v);
                adj[b].erase(v);
                adj[a].insert(b);
                adj[b].insert(a);
                adj[v].clear();
                alive[v] = 0;
                --remaining;
                changed = true;
            }
        }
    }
    return remaining > 0;
}

}  // namespace

bool contains_minor(const Graph& host, const Graph& pattern, const Limits& limits) {
    if (pattern.vertex_count() == 0) return true;
    if (host.vertex_count() < pattern.vertex_count()) return false;
    if (host.edge_count() < pattern.edge_count()) return false;

    auto [core, isolated] = strip_isolated(pattern);
    if (core.vertex_count() == 0) return true;  // edgeless pattern, counts checked above
    if (core.vertex_count() == 2) return host.edge_count() >= 1;
    if (is_triangle(core)) {
        auto gr = girth(host);
        return gr && *gr <= host.vertex_count() - isolated;
    }
    if (is_k4(core) && isolated == 0) return has_k4_minor_sp(host);
    return general_minor_search(host, core, isolated, limits, nullptr, &pattern);
}

std::optional<MinorModel> has_minor(const Graph& host, const Graph& pattern,
                                    const Limits& limits) {
    if (pattern.vertex_count() == 0)
        throw Error(ErrorCode::InvalidArgument, "pattern must be nonempty");
    if (host.vertex_count() < pattern.vertex_count()) return std::nullopt;
    if (host.edge_count() < pattern.edge_count()) return std::nullopt;

    auto [core, isolated] = strip_isolated(pattern);

    // Certificate fast paths for the two smallest cores; everything else
    // goes through the contraction search.
    if (core.vertex_count() == 2 && host.edge_count() >= 1) {
        const Edge& e = host.edges().front();
        MinorModel model;
        model.branch_sets.resize(pattern.vertex_count());
        std::vector<char> used(host.vertex_count(), 0);
        int a = -1, b = -1;
        for (int v = 0; v < pattern.vertex_count(); ++v) {
            if (pattern.degree(v) > 0) {
                if (a < 0) a = v;
                else b = v;
            }
        }
        model.branch_sets[a] = {e.u};
        model.branch_sets[b] = {e.v};
        used[e.u] = used[e.v] = 1;
        int next = 0;
        for (int v = 0; v < pattern.vertex_count(); ++v) {
            if (v == a || v == b) continue;
            while (used[next]) ++next;
            model.branch_sets[v] = {next};
            used[next] = 1;
        }
        model.witness_edges = {e};
        return model;
    }
    if (is_triangle(core)) {
        auto cycle = shortest_cycle(host);
        if (!cycle || static_cast<int>(cycle->size()) > host.vertex_count() - isolated)
            return std::nullopt;
        const std::vector<int>& c = *cycle;
        // Arcs {c0}, {c1}, {c2..} cover the cycle; isolated pattern
        // vertices get the smallest unused host vertices.
        std::vector<int> tri_pattern_vertices;
        for (int v = 0; v < pattern.vertex_count(); ++v)
            if (pattern.degree(v) > 0) tri_pattern_vertices.push_back(v);
        MinorModel model;
        model.branch_sets.resize(pattern.vertex_count());
        std::vector<char> used(host.vertex_count(), 0);
        model.branch_sets[tri_pattern_vertices[0]] = {c[0]};
        model.branch_sets[tri_pattern_vertices[1]] = {c[1]};
        std::vector<int> rest(c.begin() + 2, c.end());
        std::sort(rest.begin(), rest.end());
        model.branch_sets[tri_pattern_vertices[2]] = rest;
        for (int v : c) used[v] = 1;
        int next = 0;
        for (int v = 0; v < pattern.vertex_count(); ++v) {
            if (pattern.degree(v) > 0) continue;
            while (used[next]) ++next;
            model.branch_sets[v] = {next};
            used[next] = 1;
        }
        for (const Edge& pe : pattern.edges()) {
            const auto& su = model.branch_sets[pe.u];
            const auto& sv = model.branch_sets[pe.v];
            Edge witness(-1, -1);
            for (const Edge& he : host.edges()) {
                bool uu = std::binary_search(su.begin(), su.end(), he.u);
                bool uv = std::binary_search(sv.begin(), sv.end(), he.v);
                bool vu = std::binary_search(sv.begin(), sv.end(), he.u);
                bool vv = std::binary_search(su.begin(), su.end(), he.v);
                if ((uu && uv) || (vu && vv)) {
                    witness = he;
                    break;
                }
            }
            model.witness_edges.push_back(witness);
        }
        return model;
    }

    MinorModel model;
    if (!general_minor_search(host, core, isolated, limits, &model, &pattern))
        return std::nullopt;
    return model;
}

bool is_planar(const Graph& g, const Limits& limits) {
    if (g.vertex_count() < 5) return true;
    if (contains_minor(g, complete_graph(5), limits)) return false;
    if (g.vertex_count() < 6) return true;
    return !contains_minor(g, complete_bipartite(3, 3), limits);
}

}  // namespace fdel
