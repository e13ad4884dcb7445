#include "psalg/hypergraphs.hpp"

#include "psalg/nilalg.hpp"
#include "psalg/tutte.hpp"

#include "detail/disjoint_sets.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <random>
#include <string>

namespace psalg {

namespace {

std::uint64_t mask_of(const EdgeSet& s, std::size_t edge_count) {
    if (edge_count > 63) throw BudgetExceeded("hypergraph rank oracle: more than 63 edges");
    std::uint64_t mask = 0;
    for (std::size_t e : s) {
        if (e >= edge_count) throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
        mask |= std::uint64_t{1} << e;
    }
    return mask;
}

EdgeSet set_of(std::uint64_t mask) {
    EdgeSet out;
    for (std::size_t e = 0; mask; ++e, mask >>= 1)
        if (mask & 1U) out.push_back(e);
    return out;
}

std::size_t union_size(const Hypergraph& h, std::uint64_t mask) {
    std::vector<bool> seen(h.vertex_count(), false);
    std::size_t count = 0;
    for (std::size_t e = 0; mask; ++e, mask >>= 1)
        if (mask & 1U)
            for (std::size_t v : h.edge(e))
                if (!seen[v]) seen[v] = true, ++count;
    return count;
}

bool tight(const Hypergraph& h, std::uint64_t mask) {
    return static_cast<std::size_t>(std::popcount(mask)) == union_size(h, mask);
}

// Some nonempty submask of `mask` (other than `skip`) is tight.
bool has_tight_submask(const Hypergraph& h, std::uint64_t mask, std::uint64_t skip) {
    for (std::uint64_t s = mask; s; s = (s - 1) & mask)
        if (s != skip && tight(h, s)) return true;
    return false;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<std::vector<std::size_t>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("hyperedge " + std::to_string(i) + " repeats a vertex");
        if (e.size() < 2)
            throw std::invalid_argument("hyperedge " + std::to_string(i) + " has " + std::to_string(e.size()) +
                                        " vertices; edges need at least 2");
        if (e.back() >= n_)
            throw std::invalid_argument("hyperedge " + std::to_string(i) + " uses vertex " + std::to_string(e.back()) +
                                        " but n = " + std::to_string(n_));
    }
}

Hypergraph Hypergraph::from_graph(const Multigraph& g) {
    std::vector<std::vector<std::size_t>> edges;
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    return Hypergraph(g.vertex_count(), std::move(edges));
}

ParameterSet random_parameters(const Hypergraph& h, std::uint64_t seed, std::uint64_t modulus) {
    PrimeField field(modulus);
    ParameterSet out{modulus, Matrix<std::uint64_t>(h.vertex_count(), h.edge_count())};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> uniform(0, modulus - 1);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& verts = h.edge(e);
        std::uint64_t sum = 0;
        for (std::size_t k = 0; k + 1 < verts.size(); ++k) {
            std::uint64_t value = uniform(rng);
            out.c(verts[k], e) = value;
            sum = field.add(sum, value);
        }
        out.c(verts.back(), e) = field.neg(sum);
    }
    return out;
}

bool is_parameter_set(const Hypergraph& h, const ParameterSet& params) {
    if (params.c.rows() != h.vertex_count() || params.c.cols() != h.edge_count()) return false;
    PrimeField field(params.modulus);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < h.vertex_count(); ++i) {
            const std::uint64_t c = params.c(i, e);
            if (c >= params.modulus) return false;
            if (c != 0 && !std::binary_search(h.edge(e).begin(), h.edge(e).end(), i)) return false;
            sum = field.add(sum, c);
        }
        if (sum != 0) return false;
    }
    return true;
}

std::size_t parameter_rank(const ParameterSet& params, const EdgeSet& subset) {
    PrimeField field(params.modulus);
    const std::size_t n = params.c.rows();
    std::vector<std::vector<std::uint64_t>> basis;  // rows normalized with pivot 1
    std::vector<std::size_t> pivots;
    for (std::size_t e : subset) {
        std::vector<std::uint64_t> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = params.c(i, e);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const std::uint64_t f = v[pivots[b]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] = field.sub(v[i], field.mul(f, basis[b][i]));
        }
        std::size_t lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead == n) continue;
        const std::uint64_t s = field.inv(v[lead]);
        for (auto& x : v) x = field.mul(x, s);
        basis.push_back(std::move(v));
        pivots.push_back(lead);
    }
    return basis.size();
}

RankOracle::RankOracle(Hypergraph h, unsigned trials, std::uint64_t seed) : h_(std::move(h)) {
    if (trials == 0) throw std::invalid_argument("RankOracle: trials must be >= 1");
    if (h_.edge_count() > 63) throw BudgetExceeded("RankOracle: more than 63 edges");
    for (unsigned t = 0; t < trials; ++t) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(t)};
        std::array<std::uint32_t, 2> words{};
        seq.generate(words.begin(), words.end());
        params_.push_back(random_parameters(h_, (std::uint64_t{words[0]} << 32) | words[1]));
    }
}

std::size_t RankOracle::rank(std::uint64_t mask) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    }
    const EdgeSet subset = set_of(mask);
    if (!subset.empty() && subset.back() >= h_.edge_count())
        throw std::out_of_range("RankOracle: mask names edges beyond the hypergraph");
    std::size_t best = 0;
    for (const ParameterSet& p : params_) best = std::max(best, parameter_rank(p, subset));
    std::lock_guard lock(mutex_);
    memo_.emplace(mask, best);
    return best;
}

std::size_t RankOracle::rank(const EdgeSet& subset) const { return rank(mask_of(subset, h_.edge_count())); }

std::size_t RankOracle::memo_size() const {
    std::lock_guard lock(mutex_);
    return memo_.size();
}

std::size_t generic_rank(const Hypergraph& h, const EdgeSet& subset, unsigned trials, std::uint64_t seed) {
    return RankOracle(h, trials, seed).rank(subset);
}

bool is_independent(const Hypergraph& h, const EdgeSet& subset, unsigned trials, std::uint64_t seed) {
    return RankOracle(h, trials, seed).is_independent(subset);
}

bool is_cycle(const Hypergraph& h, const EdgeSet& subset, const Budget& budget) {
    if (subset.empty()) return false;
    require_enumerable(subset.size(), budget, "is_cycle");
    if (subset.size() > 20) throw BudgetExceeded("is_cycle: candidate has more than 20 edges");
    const std::uint64_t mask = mask_of(subset, h.edge_count());
    if (static_cast<std::size_t>(std::popcount(mask)) != subset.size()) return false;  // repeated index
    return tight(h, mask) && !has_tight_submask(h, mask, mask);
}

bool contains_cycle(const Hypergraph& h, const EdgeSet& subset, const Budget& budget) {
    require_enumerable(subset.size(), budget, "contains_cycle");
    return has_tight_submask(h, mask_of(subset, h.edge_count()), 0);
}

std::vector<EdgeSet> enumerate_hyperforests(const RankOracle& oracle, const Budget& budget) {
    const std::size_t m = oracle.hypergraph().edge_count();
    require_enumerable(m, budget, "enumerate_hyperforests");
    std::vector<EdgeSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
        if (oracle.rank(mask) == static_cast<std::size_t>(std::popcount(mask))) out.push_back(set_of(mask));
    return out;
}

std::vector<EdgeSet> enumerate_hypertrees(const RankOracle& oracle, const Budget& budget) {
    const std::size_t n = oracle.hypergraph().vertex_count();
    std::vector<EdgeSet> out;
    for (EdgeSet& f : enumerate_hyperforests(oracle, budget))
        if (n > 0 && f.size() == n - 1) out.push_back(std::move(f));
    return out;
}

bool is_strongly_connected(const RankOracle& oracle) {
    const std::size_t n = oracle.hypergraph().vertex_count();
    return n > 0 && maximal_forest_size(oracle) == n - 1;
}

std::size_t maximal_forest_size(const RankOracle& oracle) {
    const std::size_t m = oracle.hypergraph().edge_count();
    return oracle.rank(m == 0 ? std::uint64_t{0} : (~std::uint64_t{0} >> (64 - m)));
}

EdgeSet greedy_extend(const RankOracle& oracle, const EdgeSet& forest) {
    if (!oracle.is_independent(forest)) throw std::invalid_argument("greedy_extend: starting set is dependent");
    std::uint64_t mask = mask_of(forest, oracle.hypergraph().edge_count());
    for (std::size_t e = 0; e < oracle.hypergraph().edge_count(); ++e) {
        const std::uint64_t bit = std::uint64_t{1} << e;
        if (mask & bit) continue;
        if (oracle.rank(mask | bit) == static_cast<std::size_t>(std::popcount(mask | bit))) mask |= bit;
    }
    return set_of(mask);
}

std::optional<std::vector<PairAssignment>> try_pair_assignment(const Hypergraph& h, const EdgeSet& edges) {
    const std::size_t n = h.vertex_count();
    if (n == 0) return edges.empty() ? std::optional<std::vector<PairAssignment>>(std::vector<PairAssignment>{})
                                     : std::nullopt;
    if (edges.size() > n - 1) return std::nullopt;

    // Pad with full edges V to n - 1 edges in total; padding is marked by
    // the index h.edge_count().
    std::vector<std::size_t> ids(edges.begin(), edges.end());
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return std::nullopt;
    std::vector<std::vector<std::size_t>> verts;
    for (std::size_t e : ids) verts.push_back(h.edge(e));
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    while (ids.size() < n - 1) {
        ids.push_back(h.edge_count());
        verts.push_back(all);
    }

    // Kuhn's augmenting paths: edges against V \ {0}.
    const std::size_t k = ids.size();
    std::vector<std::size_t> owner(n, k);  // vertex -> matched edge slot
    std::vector<std::size_t> image(k, n);  // edge slot -> matched vertex
    std::vector<bool> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t slot) {
        for (std::size_t v : verts[slot]) {
            if (v == 0 || visited[v]) continue;
            visited[v] = true;
            if (owner[v] == k || augment(owner[v])) {
                owner[v] = slot;
                image[slot] = v;
                return true;
            }
        }
        return false;
    };
    for (std::size_t slot = 0; slot < k; ++slot) {
        visited.assign(n, false);
        if (!augment(slot)) return std::nullopt;
    }

    // A = {0}; take the smallest remaining edge meeting A and join
    // u = min(e meet A) to its matched vertex.
    std::vector<bool> in_a(n, false);
    in_a[0] = true;
    std::vector<bool> used(k, false);
    std::vector<PairAssignment> pairs;
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t chosen = k, u = n;
        for (std::size_t slot = 0; slot < k && chosen == k; ++slot) {
            if (used[slot]) continue;
            for (std::size_t v : verts[slot])
                if (in_a[v]) {
                    chosen = slot;
                    u = v;
                    break;
                }
        }
        if (chosen == k) return std::nullopt;
        used[chosen] = true;
        in_a[image[chosen]] = true;
        if (ids[chosen] != h.edge_count()) pairs.push_back({ids[chosen], u, image[chosen]});
    }
    std::sort(pairs.begin(), pairs.end(), [](const PairAssignment& a, const PairAssignment& b) { return a.edge < b.edge; });
    return pairs;
}

std::vector<PairAssignment> edge_to_pair_assignment(const RankOracle& oracle, const EdgeSet& forest) {
    if (!oracle.is_independent(forest))
        throw std::invalid_argument("edge_to_pair_assignment: edge set is dependent, not a forest");
    auto pairs = try_pair_assignment(oracle.hypergraph(), forest);
    if (!pairs) throw std::logic_error("edge_to_pair_assignment: no matching for an independent set");
    return *pairs;
}

bool is_valid_pair_assignment(const Hypergraph& h, const EdgeSet& forest, const std::vector<PairAssignment>& pairs) {
    EdgeSet expected(forest.begin(), forest.end()), got;
    std::sort(expected.begin(), expected.end());
    detail::DisjointSets sets(h.vertex_count());
    for (const PairAssignment& p : pairs) {
        if (p.edge >= h.edge_count() || p.u == p.v) return false;
        const auto& e = h.edge(p.edge);
        if (!std::binary_search(e.begin(), e.end(), p.u) || !std::binary_search(e.begin(), e.end(), p.v)) return false;
        if (!sets.unite(p.u, p.v)) return false;
        got.push_back(p.edge);
    }
    std::sort(got.begin(), got.end());
    return got == expected;
}

BivariatePolynomial hypergraph_tutte(const RankOracle& oracle, const Budget& budget) {
    return tutte_corank_nullity([&oracle](std::uint64_t mask) { return oracle.rank(mask); },
                                oracle.hypergraph().edge_count(), budget);
}

HilbertSeries hypergraph_hilbert(const Hypergraph& h, const ParameterSet& params, const Budget& budget) {
    if (params.c.rows() != h.vertex_count() || params.c.cols() != h.edge_count())
        throw std::invalid_argument("hypergraph_hilbert: parameter matrix shape does not match the hypergraph");
    LinearFormFamily forms(h.vertex_count(), h.edge_count(), params.modulus);
    for (std::size_t i = 0; i < h.vertex_count(); ++i)
        for (std::size_t e = 0; e < h.edge_count(); ++e) forms(i, e) = BigInt(static_cast<unsigned long>(params.c(i, e)));
    return subalgebra_hilbert(TruncatedAlgebra(h.edge_count(), 1), forms, RankPolicy{}, budget);
}

Hypergraph induced_subhypergraph(const Hypergraph& h, const std::vector<std::size_t>& vertices) {
    std::vector<std::size_t> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::size_t> relabel(h.vertex_count(), h.vertex_count());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= h.vertex_count())
            throw std::out_of_range("induced_subhypergraph: vertex " + std::to_string(sorted[i]) + " out of range");
        relabel[sorted[i]] = i;
    }
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& e : h.edges()) {
        if (std::any_of(e.begin(), e.end(), [&](std::size_t v) { return relabel[v] == h.vertex_count(); })) continue;
        std::vector<std::size_t> mapped;
        for (std::size_t v : e) mapped.push_back(relabel[v]);
        edges.push_back(std::move(mapped));
    }
    return Hypergraph(sorted.size(), std::move(edges));
}

std::vector<std::size_t> strongly_connected_closure(const Hypergraph& h, const std::vector<std::size_t>& seed_vertices,
                                                    unsigned trials, std::uint64_t seed, const Budget& budget) {
    const std::size_t n = h.vertex_count();
    require_enumerable(n, budget, "strongly_connected_closure");
    std::uint64_t current = 0;
    for (std::size_t v : seed_vertices) {
        if (v >= n) throw std::out_of_range("strongly_connected_closure: vertex out of range");
        current |= std::uint64_t{1} << v;
    }
    std::vector<bool> strong(std::size_t{1} << n, false);
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
        RankOracle oracle(induced_subhypergraph(h, set_of(w)), trials, seed);
        strong[w] = is_strongly_connected(oracle);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w)
            if (strong[w] && (w & current) && (w & ~current)) {
                current |= w;
                changed = true;
            }
    }
    return set_of(current);
}

}  // namespace psalg
