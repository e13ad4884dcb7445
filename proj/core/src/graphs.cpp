#include "psalg/graphs.hpp"

#include "detail/disjoint_sets.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

namespace psalg {

using detail::DisjointSets;

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has an endpoint outside 0.." +
                                        std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (e.u == e.v) throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
    }
}

namespace {

EdgeSet normalized(const Multigraph& g, const EdgeSet& s) {
    EdgeSet out = s;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("edge subset contains a repeated index");
    if (!out.empty() && out.back() >= g.edge_count())
        throw std::invalid_argument("edge index " + std::to_string(out.back()) + " out of range");
    return out;
}

std::vector<bool> membership(std::size_t m, const EdgeSet& s) {
    std::vector<bool> in(m, false);
    for (std::size_t e : s) in[e] = true;
    return in;
}

std::vector<std::size_t> positions_of(const EdgeOrder& order, std::size_t m) {
    if (order.size() != m) throw std::invalid_argument("edge order has the wrong length");
    std::vector<std::size_t> pos(m, std::numeric_limits<std::size_t>::max());
    for (std::size_t k = 0; k < m; ++k) {
        if (order[k] >= m || pos[order[k]] != std::numeric_limits<std::size_t>::max())
            throw std::invalid_argument("edge order is not a permutation");
        pos[order[k]] = k;
    }
    return pos;
}

// Rooted view of a forest: parent vertex, parent edge and depth per vertex.
struct RootedForest {
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent, parent_edge, depth;

    RootedForest(const Multigraph& g, const std::vector<bool>& in_forest)
        : parent(g.vertex_count(), kNone), parent_edge(g.vertex_count(), kNone), depth(g.vertex_count(), 0) {
        const std::size_t n = g.vertex_count();
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (!in_forest[e]) continue;
            adj[g.edge(e).u].push_back({g.edge(e).v, e});
            adj[g.edge(e).v].push_back({g.edge(e).u, e});
        }
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack;
        for (std::size_t root = 0; root < n; ++root) {
            if (seen[root]) continue;
            seen[root] = true;
            stack.push_back(root);
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (auto [y, e] : adj[x]) {
                    if (seen[y]) continue;
                    seen[y] = true;
                    parent[y] = x;
                    parent_edge[y] = e;
                    depth[y] = depth[x] + 1;
                    stack.push_back(y);
                }
            }
        }
    }

    /// Edges on the forest path a..b, or false when a and b are in different trees.
    bool path(std::size_t a, std::size_t b, std::vector<std::size_t>& out) const {
        out.clear();
        while (depth[a] > depth[b]) out.push_back(parent_edge[a]), a = parent[a];
        while (depth[b] > depth[a]) out.push_back(parent_edge[b]), b = parent[b];
        while (a != b) {
            if (parent[a] == kNone || parent[b] == kNone) return false;
            out.push_back(parent_edge[a]);
            out.push_back(parent_edge[b]);
            a = parent[a];
            b = parent[b];
        }
        return true;
    }
};

std::size_t activity_of(const Multigraph& g, const std::vector<bool>& in_forest,
                        const std::vector<std::size_t>& pos) {
    RootedForest rooted(g, in_forest);
    std::vector<std::size_t> path;
    std::size_t active = 0;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e]) continue;
        if (!rooted.path(g.edge(e).u, g.edge(e).v, path)) continue;
        bool minimal = std::all_of(path.begin(), path.end(), [&](std::size_t f) { return pos[e] < pos[f]; });
        if (minimal) ++active;
    }
    return active;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(const Multigraph& g) {
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        adj[g.edge(e).u].push_back({g.edge(e).v, e});
        adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    return adj;
}

}  // namespace

EdgeOrder natural_order(std::size_t edge_count) {
    EdgeOrder order(edge_count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

std::size_t component_count(const Multigraph& g) { return component_count_without(g, {}); }

std::size_t component_count_without(const Multigraph& g, const EdgeSet& removed) {
    auto gone = membership(g.edge_count(), normalized(g, removed));
    DisjointSets sets(g.vertex_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!gone[e]) sets.unite(g.edge(e).u, g.edge(e).v);
    return sets.components();
}

std::size_t component_count_of(const Multigraph& g, const EdgeSet& s) {
    DisjointSets sets(g.vertex_count());
    for (std::size_t e : normalized(g, s)) sets.unite(g.edge(e).u, g.edge(e).v);
    return sets.components();
}

std::vector<std::size_t> component_labels(const Multigraph& g) {
    DisjointSets sets(g.vertex_count());
    for (const Edge& e : g.edges()) sets.unite(e.u, e.v);
    std::vector<std::size_t> label(g.vertex_count()), root_label(g.vertex_count(), RootedForest::kNone);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t r = sets.find(v);
        if (root_label[r] == RootedForest::kNone) root_label[r] = next++;
        label[v] = root_label[r];
    }
    return label;
}

bool is_forest(const Multigraph& g, const EdgeSet& s) {
    DisjointSets sets(g.vertex_count());
    for (std::size_t e : normalized(g, s))
        if (!sets.unite(g.edge(e).u, g.edge(e).v)) return false;
    return true;
}

std::size_t external_activity(const Multigraph& g, const EdgeSet& forest, const EdgeOrder& order) {
    if (!is_forest(g, forest)) throw std::invalid_argument("external_activity: edge set contains a cycle");
    return activity_of(g, membership(g.edge_count(), normalized(g, forest)), positions_of(order, g.edge_count()));
}

std::vector<ForestRecord> enumerate_forests(const Multigraph& g, const EdgeOrder& order, const Budget& budget) {
    require_enumerable(g.edge_count(), budget, "enumerate_forests");
    const auto pos = positions_of(order, g.edge_count());
    const std::size_t m = g.edge_count();
    std::vector<ForestRecord> out;
    DisjointSets sets(g.vertex_count());
    std::vector<bool> in_forest(m, false);
    EdgeSet current;

    // Depth-first over edges: each edge is skipped, or taken when it joins two trees.
    auto visit = [&](auto&& self, std::size_t i) -> void {
        if (i == m) {
            out.push_back({current, current.size(), activity_of(g, in_forest, pos)});
            return;
        }
        self(self, i + 1);
        if (sets.unite(g.edge(i).u, g.edge(i).v)) {
            in_forest[i] = true;
            current.push_back(i);
            self(self, i + 1);
            current.pop_back();
            in_forest[i] = false;
            sets.rollback();
        }
    };
    visit(visit, 0);
    return out;
}

Gf2Matrix cut_space(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const auto adj = adjacency(g);
    // Iterative DFS recording entry/exit times; subtree(v) = vertices entered within [tin[v], tout[v]).
    std::vector<std::size_t> tin(n, RootedForest::kNone), tout(n, 0);
    std::vector<bool> is_root(n, false);
    std::size_t clock = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (tin[root] != RootedForest::kNone) continue;
        is_root[root] = true;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        tin[root] = clock++;
        while (!stack.empty()) {
            auto& [x, next] = stack.back();
            if (next < adj[x].size()) {
                std::size_t y = adj[x][next++].first;
                if (tin[y] == RootedForest::kNone) {
                    tin[y] = clock++;
                    stack.push_back({y, 0});
                }
            } else {
                tout[x] = clock;
                stack.pop_back();
            }
        }
    }
    Gf2Matrix out(g.edge_count());
    for (std::size_t v = 0; v < n; ++v) {
        if (is_root[v]) continue;
        auto inside = [&](std::size_t w) { return tin[w] >= tin[v] && tin[w] < tout[v]; };
        Gf2Matrix::Bits row(g.edge_count(), false);
        for (std::size_t e = 0; e < g.edge_count(); ++e) row[e] = inside(g.edge(e).u) != inside(g.edge(e).v);
        out.add_row(row);
    }
    return out;
}

Gf2Matrix cycle_space(const Multigraph& g) {
    DisjointSets sets(g.vertex_count());
    std::vector<bool> in_forest(g.edge_count(), false);
    for (std::size_t e = 0; e < g.edge_count(); ++e) in_forest[e] = sets.unite(g.edge(e).u, g.edge(e).v);
    RootedForest rooted(g, in_forest);
    Gf2Matrix out(g.edge_count());
    std::vector<std::size_t> path;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e]) continue;
        rooted.path(g.edge(e).u, g.edge(e).v, path);
        Gf2Matrix::Bits row(g.edge_count(), false);
        row[e] = true;
        for (std::size_t f : path) row[f] = true;
        out.add_row(row);
    }
    return out;
}

bool is_cut_free_support(const Multigraph& g, const EdgeSet& s) {
    return component_count_without(g, s) == component_count(g);
}

std::vector<EdgeSet> minimal_cuts(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const auto label = component_labels(g);
    const std::size_t comps = n == 0 ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<EdgeSet> cuts;
    for (std::size_t c = 0; c < comps; ++c) {
        std::vector<std::size_t> verts;
        for (std::size_t v = 0; v < n; ++v)
            if (label[v] == c) verts.push_back(v);
        const std::size_t k = verts.size();
        if (k < 2) continue;
        if (k > 24) throw BudgetExceeded("minimal_cuts: component with " + std::to_string(k) + " vertices exceeds 24");
        std::vector<std::size_t> local(n, 0);
        for (std::size_t i = 0; i < k; ++i) local[verts[i]] = i;
        std::vector<std::pair<std::size_t, std::size_t>> local_edges;
        std::vector<std::size_t> edge_ids;
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            if (label[g.edge(e).u] != c) continue;
            local_edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
            edge_ids.push_back(e);
        }
        auto connected = [&](std::uint64_t mask) {
            DisjointSets sets(k);
            for (auto [a, b] : local_edges)
                if (((mask >> a) & 1U) && ((mask >> b) & 1U)) sets.unite(a, b);
            std::size_t outside = k - static_cast<std::size_t>(std::popcount(mask));
            return sets.components() - outside == 1;
        };
        const std::uint64_t full = (std::uint64_t{1} << k) - 1;
        // Sides containing local vertex 0 enumerate each bond exactly once.
        for (std::uint64_t side = 1; side < full; side += 2) {
            if (!connected(side) || !connected(full & ~side)) continue;
            EdgeSet bond;
            for (std::size_t i = 0; i < local_edges.size(); ++i)
                if (((side >> local_edges[i].first) & 1U) != ((side >> local_edges[i].second) & 1U))
                    bond.push_back(edge_ids[i]);
            cuts.push_back(std::move(bond));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

Multigraph clone_graph(const Multigraph& g, std::size_t t) {
    if (t == 0) throw std::invalid_argument("clone_graph: t must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() * t);
    for (const Edge& e : g.edges())
        for (std::size_t j = 0; j < t; ++j) edges.push_back(e);
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph whitney_identify(const Multigraph& g, std::size_t v, std::size_t w) {
    if (v >= g.vertex_count() || w >= g.vertex_count()) throw WhitneyError("identify: vertex out of range");
    if (v == w) throw WhitneyError("identify: vertices must be distinct");
    const auto label = component_labels(g);
    if (label[v] == label[w])
        throw WhitneyError("identify: vertices " + std::to_string(v) + " and " + std::to_string(w) +
                           " lie in the same component");
    const std::size_t keep = std::min(v, w), drop = std::max(v, w);
    auto map = [&](std::size_t x) { return x == drop ? keep : (x > drop ? x - 1 : x); };
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({map(e.u), map(e.v)});
    return Multigraph(g.vertex_count() - 1, std::move(edges));
}

Multigraph whitney_cleave(const Multigraph& g, std::size_t cut_vertex, const EdgeSet& side) {
    const std::size_t n = g.vertex_count();
    if (cut_vertex >= n) throw WhitneyError("cleave: vertex out of range");
    const EdgeSet moved = normalized(g, side);
    const auto in_side = membership(g.edge_count(), moved);
    std::vector<std::size_t> incident;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (g.edge(e).u == cut_vertex || g.edge(e).v == cut_vertex) incident.push_back(e);
    for (std::size_t e : moved)
        if (g.edge(e).u != cut_vertex && g.edge(e).v != cut_vertex)
            throw WhitneyError("cleave: edge " + std::to_string(e) + " is not incident to vertex " +
                               std::to_string(cut_vertex));
    if (moved.empty() || moved.size() == incident.size())
        throw WhitneyError("cleave: side must be a proper nonempty subset of the edges at vertex " +
                           std::to_string(cut_vertex));

    // Components of G - cut_vertex; each incident edge enters exactly one of them.
    DisjointSets sets(n);
    for (const Edge& e : g.edges())
        if (e.u != cut_vertex && e.v != cut_vertex) sets.unite(e.u, e.v);
    auto far_end = [&](std::size_t e) { return g.edge(e).u == cut_vertex ? g.edge(e).v : g.edge(e).u; };
    for (std::size_t a : incident)
        for (std::size_t b : incident)
            if (in_side[a] && !in_side[b] && sets.find(far_end(a)) == sets.find(far_end(b)))
                throw WhitneyError("cleave: edges " + std::to_string(a) + " (side) and " + std::to_string(b) +
                                   " (rest) are joined by a path avoiding vertex " + std::to_string(cut_vertex) +
                                   "; it is not a cut-vertex for this partition");

    std::vector<Edge> edges = g.edges();
    for (std::size_t e : moved) {
        if (edges[e].u == cut_vertex) edges[e].u = n;
        else edges[e].v = n;
    }
    return Multigraph(n + 1, std::move(edges));
}

Multigraph whitney_twist(const Multigraph& g, std::size_t u, std::size_t v, const EdgeSet& side) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw WhitneyError("twist: vertex out of range");
    if (u == v) throw WhitneyError("twist: u and v must be distinct");
    const EdgeSet part = normalized(g, side);
    if (part.empty() || part.size() == g.edge_count())
        throw WhitneyError("twist: side must be a proper nonempty subset of the edges");
    const auto in_side = membership(g.edge_count(), part);

    // Every vertex other than u, v must belong to one piece only.
    std::vector<std::size_t> side_edge(n, RootedForest::kNone), rest_edge(n, RootedForest::kNone);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto& slot = in_side[e] ? side_edge : rest_edge;
        for (std::size_t x : {g.edge(e).u, g.edge(e).v})
            if (slot[x] == RootedForest::kNone) slot[x] = e;
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (x == u || x == v) continue;
        if (side_edge[x] != RootedForest::kNone && rest_edge[x] != RootedForest::kNone)
            throw WhitneyError("twist: vertex " + std::to_string(x) + " touches side edge " +
                               std::to_string(side_edge[x]) + " and edge " + std::to_string(rest_edge[x]) +
                               ", so a path joins the two pieces avoiding {" + std::to_string(u) + ", " +
                               std::to_string(v) + "}");
    }

    std::vector<Edge> edges = g.edges();
    auto swap_uv = [&](std::size_t x) { return x == u ? v : (x == v ? u : x); };
    for (std::size_t e : part) edges[e] = {swap_uv(edges[e].u), swap_uv(edges[e].v)};
    return Multigraph(n, std::move(edges));
}

EdgeSet bridges(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const auto adj = adjacency(g);
    constexpr std::size_t kUnseen = RootedForest::kNone;
    std::vector<std::size_t> tin(n, kUnseen), low(n, 0);
    EdgeSet out;
    std::size_t clock = 0;
    struct Frame {
        std::size_t vertex, via_edge, next;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (tin[root] != kUnseen) continue;
        std::vector<Frame> stack{{root, kUnseen, 0}};
        tin[root] = low[root] = clock++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.vertex].size()) {
                auto [y, e] = adj[f.vertex][f.next++];
                if (e == f.via_edge) continue;
                if (tin[y] == kUnseen) {
                    tin[y] = low[y] = clock++;
                    stack.push_back({y, e, 0});
                } else {
                    low[f.vertex] = std::min(low[f.vertex], tin[y]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    std::size_t p = stack.back().vertex;
                    low[p] = std::min(low[p], low[done.vertex]);
                    if (low[done.vertex] > tin[p]) out.push_back(done.via_edge);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Multigraph bridge_free(const Multigraph& g) {
    const auto is_bridge = membership(g.edge_count(), bridges(g));
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (!is_bridge[e]) edges.push_back(g.edge(e));
    return Multigraph(g.vertex_count(), std::move(edges));
}

bool same_cycle_space(const Multigraph& g1, const Multigraph& g2, const std::vector<std::size_t>& bijection) {
    if (g1.edge_count() != g2.edge_count())
        throw std::invalid_argument("same_cycle_space: graphs have different edge counts");
    positions_of(bijection, g1.edge_count());  // validates the permutation
    return cycle_space(g1).relabel_columns(bijection).same_row_space(cycle_space(g2));
}

Multigraph relabel_vertices(const Multigraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.vertex_count()) throw std::invalid_argument("relabel_vertices: wrong permutation length");
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t p : perm) {
        if (p >= perm.size() || seen[p]) throw std::invalid_argument("relabel_vertices: not a permutation");
        seen[p] = true;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph reorder_edges(const Multigraph& g, const EdgeOrder& order) {
    positions_of(order, g.edge_count());
    std::vector<Edge> edges;
    for (std::size_t e : order) edges.push_back(g.edge(e));
    return Multigraph(g.vertex_count(), std::move(edges));
}

}  // namespace psalg
