#include "psalg/hypergraphs.hpp"
#include "psalg/tutte.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>
#include "printing.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

using namespace psalg;

namespace {

Hypergraph triple() { return Hypergraph(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}); }
Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

EdgeSet to_set(std::uint64_t mask) {
    EdgeSet s;
    for (std::size_t i = 0; mask; ++i, mask >>= 1)
        if (mask & 1) s.push_back(i);
    return s;
}

// Every nonempty Y inside S covers more vertices than it has edges.
bool hall_independent(const Hypergraph& h, std::uint64_t mask) {
    for (std::uint64_t y = mask; y; y = (y - 1) & mask) {
        std::uint64_t verts = 0;
        for (std::size_t e : to_set(y))
            for (std::size_t v : h.edge(e)) verts |= std::uint64_t{1} << v;
        if (std::popcount(verts) <= std::popcount(y)) return false;
    }
    return true;
}

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();

}  // namespace

TEST_SUITE("hypergraphs") {

TEST_CASE("construction") {
    Hypergraph h(4, {{2, 0, 1}, {3, 1}});
    CHECK(h.edge(0) == std::vector<std::size_t>{0, 1, 2});
    CHECK(h.edge(1) == std::vector<std::size_t>{1, 3});
    CHECK_THROWS_AS(Hypergraph(3, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS(Hypergraph(3, {{0, 3}}));
    CHECK(Hypergraph::from_graph(k3()) == Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}));
}

TEST_CASE("random parameters") {
    const Hypergraph h(3, {{0, 1}, {0, 1, 2}});
    const ParameterSet p = random_parameters(h, 9);
    CHECK(is_parameter_set(h, p));
    CHECK((p.c(0, 0) + p.c(1, 0)) % p.modulus == 0);
    CHECK(p.c(2, 0) == 0);
    CHECK(random_parameters(h, 9).c == p.c);
    CHECK_FALSE(random_parameters(h, 10).c == p.c);
    ParameterSet bad = p;
    bad.c(2, 0) = 1;
    CHECK_FALSE(is_parameter_set(h, bad));
    const ParameterSet small = random_parameters(h, 1, 7);
    CHECK(small.modulus == 7);
    CHECK(is_parameter_set(h, small));
}

TEST_CASE("generic rank examples") {
    CHECK(generic_rank(triple(), {0, 1, 2}) == 2);
    CHECK(generic_rank(triple(), {0, 1}) == 2);
    CHECK(generic_rank(triple(), {}) == 0);
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const RankOracle r(Hypergraph::from_graph(g));
        for (std::uint64_t m = 0; m <= oracle::full_mask(g.edge_count()); ++m)
            CHECK(r.rank(m) == oracle::graphic_rank(g, m));
    }
}

TEST_CASE("rank oracle axioms and memo") {
    for (const Hypergraph& h : oracle::random_hypergraphs(20, 5, 5, 4, 3)) {
        const RankOracle r(h);
        const std::uint64_t full = oracle::full_mask(h.edge_count());
        CHECK(r.rank(0) == 0);
        for (std::uint64_t s = 0; s <= full; ++s)
            for (std::size_t e = 0; e < h.edge_count(); ++e) {
                const std::uint64_t t = s | (std::uint64_t{1} << e);
                CHECK(r.rank(t) - r.rank(s) <= 1);
                CHECK(r.rank(t) >= r.rank(s));
            }
        for (std::uint64_t a = 0; a <= full; ++a)
            for (std::uint64_t b = 0; b <= full; ++b)
                CHECK(r.rank(a | b) + r.rank(a & b) <= r.rank(a) + r.rank(b));
        CHECK(r.memo_size() <= full + 1);
    }
}

TEST_CASE("rank oracle is safe under concurrent queries") {
    const RankOracle r(triple());
    std::vector<std::thread> pool;
    std::vector<std::size_t> seen(8);
    for (std::size_t i = 0; i < 8; ++i) pool.emplace_back([&, i] { seen[i] = r.rank(i % 8); });
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < 8; ++i) CHECK(seen[i] == static_cast<std::size_t>(std::min(std::popcount(i), 2)));
}

TEST_CASE("cycles") {
    CHECK_FALSE(is_cycle(triple(), {0, 1}));
    CHECK(is_cycle(triple(), {0, 1, 2}));
    CHECK(is_cycle(Hypergraph::from_graph(k3()), {0, 1, 2}));
    CHECK_FALSE(is_cycle(triple(), {}));
    CHECK(contains_cycle(triple(), {0, 1, 2}));
    CHECK_FALSE(contains_cycle(triple(), {0, 1}));
    Hypergraph doubled(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK(is_cycle(doubled, {0, 1}));
    CHECK_FALSE(is_cycle(doubled, {0, 1, 2}));
    Budget tiny;
    tiny.enumeration_cap = 1;
    CHECK_THROWS_AS(contains_cycle(triple(), {0, 1}, tiny), BudgetExceeded);
}

TEST_CASE("independence agrees with the cycle test and the Hall-type oracle") {
    for (const Hypergraph& h : oracle::random_hypergraphs(60, 5, 5, 4, 11)) {
        const RankOracle r(h, 2, 4);
        for (std::uint64_t m = 0; m <= oracle::full_mask(h.edge_count()); ++m) {
            const EdgeSet s = to_set(m);
            const bool indep = r.is_independent(s);
            CHECK(indep == hall_independent(h, m));
            CHECK(indep == !contains_cycle(h, s));
        }
    }
}

TEST_CASE("forests and trees") {
    const RankOracle r(triple());
    CHECK(enumerate_hyperforests(r).size() == 7);
    CHECK(enumerate_hypertrees(r).size() == 3);
    const RankOracle empty(Hypergraph(3, {}));
    CHECK(enumerate_hyperforests(empty) == std::vector<EdgeSet>{EdgeSet{}});
    CHECK(enumerate_hypertrees(empty).empty());

    const RankOracle tri(Hypergraph::from_graph(k3()));
    std::set<EdgeSet> from_graphs;
    for (const auto& f : enumerate_forests(k3(), natural_order(3))) from_graphs.insert(f.edges);
    const auto forests = enumerate_hyperforests(tri);
    CHECK(std::set<EdgeSet>(forests.begin(), forests.end()) == from_graphs);
}

TEST_CASE("strong connectivity and maximal forests") {
    CHECK_FALSE(is_strongly_connected(RankOracle(Hypergraph(3, {{0, 1, 2}}))));
    CHECK(is_strongly_connected(RankOracle(Hypergraph(3, {{0, 1, 2}, {0, 1, 2}}))));
    CHECK(maximal_forest_size(RankOracle(triple())) == 2);
    CHECK(maximal_forest_size(RankOracle(Hypergraph(4, {}))) == 0);
    CHECK(maximal_forest_size(RankOracle(Hypergraph::from_graph(k3()))) == 2);
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5))
        CHECK(is_strongly_connected(RankOracle(Hypergraph::from_graph(g))));

    for (const Hypergraph& h : oracle::random_hypergraphs(40, 5, 5, 4, 21)) {
        const RankOracle r(h);
        const std::size_t top = maximal_forest_size(r);
        const auto forests = enumerate_hyperforests(r);
        for (const EdgeSet& f : forests) {
            const EdgeSet grown = greedy_extend(r, f);
            CHECK(grown.size() == top);
            CHECK(std::includes(grown.begin(), grown.end(), f.begin(), f.end()));
            CHECK(r.is_independent(grown));
            bool maximal = true;
            for (std::size_t e = 0; e < h.edge_count() && maximal; ++e)
                if (!std::binary_search(f.begin(), f.end(), e)) {
                    EdgeSet bigger = f;
                    bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), e), e);
                    maximal = !r.is_independent(bigger);
                }
            if (maximal) CHECK(f.size() == top);
        }
    }
}

TEST_CASE("pair assignment") {
    const RankOracle r(triple());
    const auto pairs = edge_to_pair_assignment(r, {0, 1});
    CHECK(is_valid_pair_assignment(triple(), {0, 1}, pairs));
    CHECK_THROWS_AS(edge_to_pair_assignment(r, {0, 1, 2}), std::invalid_argument);
    CHECK_FALSE(try_pair_assignment(triple(), {0, 1, 2}).has_value());

    const Hypergraph single(3, {{0, 2}});
    CHECK(edge_to_pair_assignment(RankOracle(single), {0}) == std::vector<PairAssignment>{{0, 0, 2}});

    CHECK_FALSE(is_valid_pair_assignment(triple(), {0, 1}, {{0, 0, 1}, {1, 1, 0}}));
    CHECK_FALSE(is_valid_pair_assignment(triple(), {0, 1}, {{0, 0, 1}}));
    CHECK(is_valid_pair_assignment(triple(), {0, 1}, {{0, 0, 1}, {1, 0, 2}}));
    CHECK_FALSE(is_valid_pair_assignment(Hypergraph(3, {{0, 1}, {1, 2}}), {0, 1}, {{0, 0, 1}, {1, 0, 2}}));
}

TEST_CASE("pair assignment succeeds exactly on independent sets") {
    for (const Hypergraph& h : oracle::random_hypergraphs(60, 5, 5, 4, 31)) {
        const RankOracle r(h);
        for (std::uint64_t m = 0; m <= oracle::full_mask(h.edge_count()); ++m) {
            const EdgeSet s = to_set(m);
            const auto pairs = try_pair_assignment(h, s);
            CHECK(pairs.has_value() == r.is_independent(s));
            if (pairs) {
                CHECK(is_valid_pair_assignment(h, s, *pairs));
                // The pair edges form a graph forest, so the hyperedges lift to an independent set.
                std::vector<Edge> es;
                for (const auto& p : *pairs) es.push_back({p.u, p.v});
                const Multigraph pg(h.vertex_count(), es);
                CHECK(oracle::graphic_rank(pg, oracle::full_mask(es.size())) == es.size());
            }
        }
    }
}

TEST_CASE("hypergraph Tutte polynomial") {
    const RankOracle r(triple());
    const auto t = hypergraph_tutte(r);
    CHECK(t == X * X + X + Y);
    CHECK(t.evaluate(2, 1) == 7);
    CHECK(t.evaluate(1, 1) == 3);
    CHECK(hypergraph_tutte(RankOracle(Hypergraph::from_graph(k3()))) == X * X + X + Y);
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5))
        CHECK(hypergraph_tutte(RankOracle(Hypergraph::from_graph(g))) == oracle::tutte(g));
    for (const Hypergraph& h : oracle::random_hypergraphs(40, 5, 5, 4, 41)) {
        const RankOracle o(h);
        const auto poly = hypergraph_tutte(o);
        CHECK(poly.evaluate(2, 1) == static_cast<long>(enumerate_hyperforests(o).size()));
    }
}

TEST_CASE("hypergraph Hilbert series") {
    const Hypergraph h = triple();
    CHECK(hypergraph_hilbert(h, random_parameters(h, 1)) == HilbertSeries({1, 2, 3, 1}));
    const Hypergraph e(2, {{0, 1}});
    CHECK(hypergraph_hilbert(e, random_parameters(e, 1)) == HilbertSeries({1, 1}));

    // Degenerate: proportional columns for two of the three edges.
    ParameterSet p = random_parameters(h, 2);
    for (std::size_t i = 0; i < 3; ++i) p.c(i, 1) = p.c(i, 0);
    const HilbertSeries degenerate = hypergraph_hilbert(h, p);
    CHECK(degenerate.total() < 7);

    for (const Hypergraph& g : oracle::random_hypergraphs(30, 5, 5, 4, 51)) {
        const RankOracle o(g);
        const HilbertSeries expected = forest_hilbert_from_nullity(hypergraph_tutte(o), g.edge_count() - maximal_forest_size(o));
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            ParameterSet ps = random_parameters(g, seed);
            CHECK(hypergraph_hilbert(g, ps) == expected);
            // Nonzero per-edge scaling.
            for (std::size_t col = 0; col < g.edge_count(); ++col)
                for (std::size_t i = 0; i < g.vertex_count(); ++i)
                    ps.c(i, col) = static_cast<std::uint64_t>((unsigned __int128)ps.c(i, col) * (col + 2) % ps.modulus);
            CHECK(hypergraph_hilbert(g, ps) == expected);
        }
    }
}

TEST_CASE("size-2 hypergraphs match the graph module") {
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const Hypergraph h = Hypergraph::from_graph(g);
        const RankOracle r(h);
        CHECK(enumerate_hyperforests(r).size() == enumerate_forests(g, natural_order(g.edge_count())).size());
        CHECK(hypergraph_hilbert(h, random_parameters(h, 0)) ==
              forest_hilbert_from_tutte(oracle::tutte(g), g.edge_count(), g.vertex_count(), 1));
        for (const auto& f : enumerate_hyperforests(r)) CHECK(is_forest(g, f));
    }
}

TEST_CASE("induced subhypergraphs and strongly connected closure") {
    const Hypergraph h(5, {{0, 1, 2}, {0, 1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(induced_subhypergraph(h, {0, 1, 2, 3, 4}) == h);
    CHECK(induced_subhypergraph(h, {2, 3, 4}) == Hypergraph(3, {{0, 1}, {1, 2}}));
    CHECK(strongly_connected_closure(Hypergraph(3, {}), {1}) == std::vector<std::size_t>{1});
    CHECK(strongly_connected_closure(h, {0}) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(strongly_connected_closure(Hypergraph(4, {{0, 1, 2}}), {0}) == std::vector<std::size_t>{0});

    // Union of overlapping strongly connected vertex sets is strongly connected.
    for (const Hypergraph& g : oracle::random_hypergraphs(30, 5, 5, 3, 61)) {
        const std::size_t n = g.vertex_count();
        std::vector<std::uint64_t> strong;
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            std::vector<std::size_t> vs;
            for (std::size_t v = 0; v < n; ++v)
                if (m >> v & 1) vs.push_back(v);
            if (is_strongly_connected(RankOracle(induced_subhypergraph(g, vs)))) strong.push_back(m);
        }
        for (std::uint64_t a : strong)
            for (std::uint64_t b : strong)
                if (a & b) CHECK(std::find(strong.begin(), strong.end(), a | b) != strong.end());
    }
}

}
