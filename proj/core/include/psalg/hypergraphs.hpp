#ifndef PSALG_HYPERGRAPHS_HPP
#define PSALG_HYPERGRAPHS_HPP

#include "psalg/budget.hpp"
#include "psalg/exactalg.hpp"
#include "psalg/graphs.hpp"
#include "psalg/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace psalg {

/// Hypergraph on vertices 0..n-1. Each edge is a sorted set of at least two
/// distinct vertices; repeated edges are allowed.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t vertex_count, std::vector<std::vector<std::size_t>> edges);
    static Hypergraph from_graph(const Multigraph& g);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::vector<std::size_t>>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& edge(std::size_t i) const { return edges_.at(i); }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::vector<std::size_t>> edges_;
};

/// c(i, e) in Z/pZ, zero off the incidences, each column summing to zero.
struct ParameterSet {
    std::uint64_t modulus = kDefaultPrime;
    Matrix<std::uint64_t> c;  // vertex x edge
};

/// Uniform values on all but the last vertex of each edge; the last one is
/// minus their sum.
ParameterSet random_parameters(const Hypergraph& h, std::uint64_t seed, std::uint64_t modulus = kDefaultPrime);

/// True iff the incidence and zero-sum conditions hold.
bool is_parameter_set(const Hypergraph& h, const ParameterSet& params);

/// Rank mod p of the columns of `params` indexed by `subset`.
std::size_t parameter_rank(const ParameterSet& params, const EdgeSet& subset);

/// Generic rank of edge subsets: the maximum over `trials` random parameter
/// sets, memoized. Safe to query from several threads.
class RankOracle {
public:
    explicit RankOracle(Hypergraph h, unsigned trials = 2, std::uint64_t seed = 0);

    const Hypergraph& hypergraph() const noexcept { return h_; }
    const std::vector<ParameterSet>& parameter_sets() const noexcept { return params_; }

    /// Subset as a bitmask over edges (at most 63 edges).
    std::size_t rank(std::uint64_t mask) const;
    std::size_t rank(const EdgeSet& subset) const;
    bool is_independent(const EdgeSet& subset) const { return rank(subset) == subset.size(); }
    std::size_t memo_size() const;

private:
    Hypergraph h_;
    std::vector<ParameterSet> params_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::size_t> memo_;
};

std::size_t generic_rank(const Hypergraph& h, const EdgeSet& subset, unsigned trials = 2, std::uint64_t seed = 0);
bool is_independent(const Hypergraph& h, const EdgeSet& subset, unsigned trials = 2, std::uint64_t seed = 0);

/// Nonempty C with |C| = |union C| and no proper nonempty subset with the
/// same property.
bool is_cycle(const Hypergraph& h, const EdgeSet& subset, const Budget& budget = default_budget());
/// Some nonempty Y inside `subset` has |Y| = |union Y|.
bool contains_cycle(const Hypergraph& h, const EdgeSet& subset, const Budget& budget = default_budget());

/// Independent edge subsets, ordered by bitmask.
std::vector<EdgeSet> enumerate_hyperforests(const RankOracle& oracle, const Budget& budget = default_budget());
/// Forests with v(H) - 1 edges.
std::vector<EdgeSet> enumerate_hypertrees(const RankOracle& oracle, const Budget& budget = default_budget());

bool is_strongly_connected(const RankOracle& oracle);
std::size_t maximal_forest_size(const RankOracle& oracle);
/// Adds edges in index order while the set stays independent.
EdgeSet greedy_extend(const RankOracle& oracle, const EdgeSet& forest);

struct PairAssignment {
    std::size_t edge = 0;
    std::size_t u = 0;
    std::size_t v = 0;
    friend bool operator==(const PairAssignment&, const PairAssignment&) = default;
};

/// Matching plus greedy construction, without an independence check.
/// Returns nullopt when the construction gets stuck, which happens exactly
/// when `edges` is dependent.
std::optional<std::vector<PairAssignment>> try_pair_assignment(const Hypergraph& h, const EdgeSet& edges);

/// Pairs (u, v) inside each forest edge forming a forest of K_n. Throws
/// std::invalid_argument if `forest` is dependent.
std::vector<PairAssignment> edge_to_pair_assignment(const RankOracle& oracle, const EdgeSet& forest);

/// Each forest edge appears once, each pair lies in its edge, and the pairs
/// form a forest in K_n.
bool is_valid_pair_assignment(const Hypergraph& h, const EdgeSet& forest, const std::vector<PairAssignment>& pairs);

/// Tutte polynomial of the matroid given by `oracle`.
BivariatePolynomial hypergraph_tutte(const RankOracle& oracle, const Budget& budget = default_budget());

/// Hilbert series of the algebra generated by the vertex forms of `params`.
HilbertSeries hypergraph_hilbert(const Hypergraph& h, const ParameterSet& params,
                                 const Budget& budget = default_budget());

/// Edges contained in `vertices`, renumbered by the increasing order of
/// `vertices`.
Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<std::size_t>& vertices);

/// Smallest superset of `seed_vertices` closed under union with every
/// vertex set that meets it and induces a strongly connected hypergraph.
std::vector<std::size_t> strongly_connected_closure(const Hypergraph& h, const std::vector<std::size_t>& seed_vertices,
                                                    unsigned trials = 2, std::uint64_t seed = 0,
                                                    const Budget& budget = default_budget());

}  // namespace psalg

#endif  // PSALG_HYPERGRAPHS_HPP
