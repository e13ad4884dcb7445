#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace oracle {

std::uint64_t full_mask(std::size_t m) { return m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m)); }

std::size_t components(const Multigraph& g, std::uint64_t mask) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        if ((mask >> e) & 1U) {
            adj[g.edge(e).u].push_back(g.edge(e).v);
            adj[g.edge(e).v].push_back(g.edge(e).u);
        }
    std::vector<bool> seen(n, false);
    std::size_t count = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        std::vector<std::size_t> queue{s};
        seen[s] = true;
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (std::size_t w : adj[queue[q]])
                if (!seen[w]) seen[w] = true, queue.push_back(w);
    }
    return count;
}

std::size_t graphic_rank(const Multigraph& g, std::uint64_t mask) { return g.vertex_count() - components(g, mask); }

namespace {

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
               const std::vector<unsigned>& mult) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::size_t comps = n;
    for (std::size_t p = 0; p < pairs.size(); ++p)
        if (mult[p]) {
            auto a = find(pairs[p].first), b = find(pairs[p].second);
            if (a != b) parent[a] = b, --comps;
        }
    return comps == 1;
}

}  // namespace

std::vector<Multigraph> connected_multigraphs(std::size_t max_n, std::size_t max_e) {
    std::vector<Multigraph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) {
                pair_index[{u, v}] = pairs.size();
                pairs.push_back({u, v});
            }
        std::vector<std::vector<std::size_t>> perms;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::vector<unsigned>> seen;
        std::vector<unsigned> mult(pairs.size(), 0);
        // Odometer over multiplicity vectors with total at most max_e.
        auto visit = [&]() {
            if (!connected(n, pairs, mult)) return;
            std::vector<unsigned> best;
            for (const auto& p : perms) {
                std::vector<unsigned> image(pairs.size(), 0);
                for (std::size_t k = 0; k < pairs.size(); ++k) {
                    std::size_t a = p[pairs[k].first], b = p[pairs[k].second];
                    image[pair_index[{std::min(a, b), std::max(a, b)}]] = mult[k];
                }
                if (best.empty() || image < best) best = image;
            }
            if (!seen.insert(best).second) return;
            std::vector<psalg::Edge> edges;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                for (unsigned r = 0; r < best[k]; ++r) edges.push_back({pairs[k].first, pairs[k].second});
            out.emplace_back(n, std::move(edges));
        };
        if (pairs.empty()) {
            visit();
            continue;
        }
        for (;;) {
            visit();
            std::size_t k = 0;
            unsigned total = std::accumulate(mult.begin(), mult.end(), 0U);
            while (k < pairs.size()) {
                if (total < max_e) {
                    ++mult[k];
                    break;
                }
                total -= mult[k];
                mult[k] = 0;
                ++k;
            }
            if (k == pairs.size()) break;
        }
    }
    return out;
}

std::vector<Hypergraph> random_hypergraphs(std::size_t count, std::size_t max_n, std::size_t max_e,
                                           std::size_t max_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Hypergraph> out;
    while (out.size() < count) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, max_n)(rng);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(0, max_e)(rng);
        std::vector<std::vector<std::size_t>> edges;
        for (std::size_t e = 0; e < m; ++e) {
            const std::size_t size = std::uniform_int_distribution<std::size_t>(2, std::min(max_size, n))(rng);
            std::vector<std::size_t> verts(n);
            std::iota(verts.begin(), verts.end(), std::size_t{0});
            std::shuffle(verts.begin(), verts.end(), rng);
            verts.resize(size);
            edges.push_back(verts);
        }
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

namespace {

BivariatePolynomial shifted_power(bool in_x, unsigned k) {
    BivariatePolynomial base = in_x ? BivariatePolynomial::x() : BivariatePolynomial::y();
    base -= BivariatePolynomial::constant(1);
    BivariatePolynomial out = BivariatePolynomial::constant(1);
    for (unsigned i = 0; i < k; ++i) out = out * base;
    return out;
}

}  // namespace

BivariatePolynomial tutte(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    const std::size_t total = graphic_rank(g, full_mask(m));
    std::map<std::pair<unsigned, unsigned>, long> counts;
    for (std::uint64_t s = 0; s <= full_mask(m); ++s) {
        const std::size_t r = graphic_rank(g, s);
        counts[{static_cast<unsigned>(total - r), static_cast<unsigned>(std::popcount(s) - r)}] += 1;
        if (s == full_mask(m)) break;
    }
    BivariatePolynomial out;
    for (const auto& [k, c] : counts) out += shifted_power(true, k.first) * shifted_power(false, k.second) * BivariatePolynomial::constant(c);
    return out;
}

std::vector<Forest> forests(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<Forest> out;
    for (std::uint64_t f = 0;; ++f) {
        const std::size_t size = static_cast<std::size_t>(std::popcount(f));
        if (graphic_rank(g, f) == size) {
            std::size_t act = 0;
            for (std::size_t e = 0; e < m; ++e) {
                const std::uint64_t bit = std::uint64_t{1} << e;
                if ((f & bit) || graphic_rank(g, f | bit) != size) continue;
                // The cycle of F + e: forest edges whose removal leaves F + e acyclic.
                bool minimal = true;
                for (std::size_t x = 0; x < e; ++x) {
                    const std::uint64_t xb = std::uint64_t{1} << x;
                    if ((f & xb) && graphic_rank(g, (f | bit) & ~xb) == size) minimal = false;
                }
                act += minimal;
            }
            out.push_back({f, size, act});
        }
        if (f == full_mask(m)) break;
    }
    return out;
}

HilbertSeries forest_histogram(const Multigraph& g) {
    std::vector<std::uint64_t> dims(g.edge_count() + 1, 0);
    for (const Forest& f : forests(g)) ++dims[g.edge_count() - f.size - f.activity];
    return HilbertSeries(dims);
}

HilbertSeries tree_histogram(const Multigraph& g) {
    const std::size_t rank = graphic_rank(g, full_mask(g.edge_count()));
    const std::size_t nullity = g.edge_count() - rank;
    std::vector<std::uint64_t> dims(nullity + 1, 0);
    for (const Forest& f : forests(g))
        if (f.size == rank) ++dims[nullity - f.activity];
    return HilbertSeries(dims);
}

std::uint64_t labelled_forest_count(const Multigraph& g, std::uint64_t t) {
    std::uint64_t total = 0;
    for (const Forest& f : forests(g)) {
        std::uint64_t w = 1;
        for (std::size_t i = 0; i < f.size; ++i) w *= t;
        total += w;
    }
    return total;
}

std::vector<std::uint64_t> minimal_cuts(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    const std::size_t base = components(g, full_mask(m));
    std::vector<std::uint64_t> cuts;
    for (std::uint64_t s = 1; s <= full_mask(m) && m > 0; ++s) {
        if (components(g, full_mask(m) & ~s) == base) continue;
        bool minimal = true;
        for (std::size_t e = 0; e < m && minimal; ++e)
            if (((s >> e) & 1U) && components(g, full_mask(m) & ~(s & ~(std::uint64_t{1} << e))) > base) minimal = false;
        if (minimal) cuts.push_back(s);
        if (s == full_mask(m)) break;
    }
    return cuts;
}

std::vector<std::uint64_t> cycle_space(const Multigraph& g) {
    const std::size_t m = g.edge_count();
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0;; ++s) {
        std::vector<unsigned> degree(g.vertex_count(), 0);
        for (std::size_t e = 0; e < m; ++e)
            if ((s >> e) & 1U) ++degree[g.edge(e).u], ++degree[g.edge(e).v];
        if (std::all_of(degree.begin(), degree.end(), [](unsigned d) { return d % 2 == 0; })) out.push_back(s);
        if (s == full_mask(m)) break;
    }
    return out;
}

}  // namespace oracle
