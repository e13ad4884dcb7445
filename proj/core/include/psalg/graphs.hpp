#ifndef PSALG_GRAPHS_HPP
#define PSALG_GRAPHS_HPP

#include "psalg/budget.hpp"
#include "psalg/gf2.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace psalg {

/// Edge indices into Multigraph::edges(). Operations accept them in any
/// order and return them sorted.
using EdgeSet = std::vector<std::size_t>;

/// A linear order on edges, listed from smallest to largest.
using EdgeOrder = std::vector<std::size_t>;

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loopless undirected multigraph on vertices 0..n-1. The edge list order is
/// the default linear order on E(G).
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

/// A precondition of a Whitney operation failed; what() names the witness.
class WhitneyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ForestRecord {
    EdgeSet edges;
    std::size_t size = 0;
    std::size_t activity = 0;
};

EdgeOrder natural_order(std::size_t edge_count);

std::size_t component_count(const Multigraph& g);

/// Components of (V, E(g) \ removed).
std::size_t component_count_without(const Multigraph& g, const EdgeSet& removed);

/// Components of (V, s).
std::size_t component_count_of(const Multigraph& g, const EdgeSet& s);

/// Component label per vertex, labels numbered by first appearance.
std::vector<std::size_t> component_labels(const Multigraph& g);

bool is_forest(const Multigraph& g, const EdgeSet& s);

/// Number of edges outside `forest` that close a cycle with it and are the
/// smallest edge of that cycle under `order`. Throws if `forest` has a cycle.
std::size_t external_activity(const Multigraph& g, const EdgeSet& forest, const EdgeOrder& order);

/// Every acyclic edge subset with its external activity.
std::vector<ForestRecord> enumerate_forests(const Multigraph& g, const EdgeOrder& order,
                                            const Budget& budget = default_budget());

/// Fundamental-cut basis of the cut space: one row per non-root vertex of a
/// DFS spanning forest.
Gf2Matrix cut_space(const Multigraph& g);

/// Fundamental-cycle basis of the cycle space: one row per non-forest edge.
Gf2Matrix cycle_space(const Multigraph& g);

/// True iff `s` contains no cut of `g`.
bool is_cut_free_support(const Multigraph& g, const EdgeSet& s);

/// Inclusion-minimal cuts (bonds). Exponential in the vertex count.
std::vector<EdgeSet> minimal_cuts(const Multigraph& g);

/// Each edge replaced by t consecutive parallel copies (clone j of edge i has
/// index i*t + j).
Multigraph clone_graph(const Multigraph& g, std::size_t t);

/// Merges vertices v and w, which must lie in different components. The
/// smaller label survives and higher labels shift down. Edge indices are kept.
Multigraph whitney_identify(const Multigraph& g, std::size_t v, std::size_t w);

/// Moves the endpoints at `cut_vertex` of the edges in `side` onto a new
/// vertex (index n). `side` must be a proper nonempty subset of the edges at
/// `cut_vertex` and a union of whole blocks through it.
Multigraph whitney_cleave(const Multigraph& g, std::size_t cut_vertex, const EdgeSet& side);

/// Twisting about {u, v}: `side` is the edge set of the piece G2 that meets
/// the rest of the graph only at u and v; within it u and v are exchanged.
Multigraph whitney_twist(const Multigraph& g, std::size_t u, std::size_t v, const EdgeSet& side);

/// Edges whose removal increases the component count.
EdgeSet bridges(const Multigraph& g);

/// `g` with every bridge removed; all vertices kept, remaining edges keep
/// their relative order.
Multigraph bridge_free(const Multigraph& g);

/// True iff the cycle spaces agree when edge i of g1 is identified with edge
/// bijection[i] of g2.
bool same_cycle_space(const Multigraph& g1, const Multigraph& g2, const std::vector<std::size_t>& bijection);

/// Relabels vertex i as perm[i].
Multigraph relabel_vertices(const Multigraph& g, const std::vector<std::size_t>& perm);

/// Reorders the edge list so that new edge k is old edge order[k].
Multigraph reorder_edges(const Multigraph& g, const EdgeOrder& order);

}  // namespace psalg

#endif  // PSALG_GRAPHS_HPP
