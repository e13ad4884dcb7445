#include "psalg/nilalg.hpp"
#include "psalg/tutte.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>
#include "printing.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace psalg;

namespace {

Multigraph k3() { return Multigraph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Multigraph edge() { return Multigraph(2, {{0, 1}}); }

std::vector<std::size_t> powers(const std::vector<PowerGenerator>& gens) {
    std::vector<std::size_t> out;
    for (const auto& g : gens) out.push_back(g.power);
    return out;
}

HilbertSeries forest_c(const Multigraph& g, unsigned cap = 1) {
    return subalgebra_hilbert(TruncatedAlgebra::forest(g, cap), graph_linear_forms(g));
}

HilbertSeries forest_b(const Multigraph& g, std::size_t t = 1) {
    return quotient_hilbert(g.vertex_count(), graph_quotient_generators(g, t));
}

}  // namespace

TEST_SUITE("nilalg") {

TEST_CASE("graph linear forms") {
    const auto f = graph_linear_forms(edge());
    CHECK(f.generator_count() == 2);
    CHECK(f(0, 0) == 1);
    CHECK(f(1, 0) == -1);
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const auto forms = graph_linear_forms(g);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            BigInt sum = 0;
            int plus = 0, minus = 0;
            for (std::size_t i = 0; i < g.vertex_count(); ++i) {
                sum += forms(i, e);
                plus += forms(i, e) == 1;
                minus += forms(i, e) == -1;
            }
            CHECK(sum == 0);
            CHECK(plus == 1);
            CHECK(minus == 1);
        }
    }
}

TEST_CASE("truncated algebra multiplication") {
    const TruncatedAlgebra cap1(1), cap2(1, 2);
    const auto p1 = AlgebraElement::variable(cap1, 0);
    CHECK(multiply(p1, p1).is_zero());
    const auto p2 = AlgebraElement::variable(cap2, 0);
    const auto sq = multiply(p2, p2);
    REQUIRE(sq.terms().size() == 1);
    CHECK(sq.terms().begin()->first == Exponent{2});
    CHECK(multiply(sq, p2).is_zero());
    CHECK_THROWS_AS(multiply(p1, p2), std::invalid_argument);

    const auto tree = TruncatedAlgebra::tree(k3());
    const auto a = AlgebraElement::variable(tree, 0), b = AlgebraElement::variable(tree, 1),
               c = AlgebraElement::variable(tree, 2);
    // Any two edges of a triangle contain the cut around their shared vertex.
    CHECK(multiply(a, b).is_zero());
    CHECK(multiply(multiply(a, b), c).is_zero());
    CHECK_FALSE(a.is_zero());
    const auto forest = TruncatedAlgebra::forest(k3());
    CHECK(multiply(multiply(AlgebraElement::variable(forest, 0), AlgebraElement::variable(forest, 1)),
                   AlgebraElement::variable(forest, 2))
              .terms()
              .size() == 1);
}

TEST_CASE("forbidden supports keep only minimal sets") {
    TruncatedAlgebra alg(3, 1, {0b011, 0b111, 0b001});
    CHECK(alg.forbidden_supports() == std::vector<std::uint64_t>{0b001});
    CHECK(alg.is_basis({0, 1, 1}));
    CHECK_FALSE(alg.is_basis({1, 0, 0}));
    CHECK_FALSE(alg.is_basis({0, 2, 0}));
    CHECK_THROWS(TruncatedAlgebra(65));
}

TEST_CASE("subalgebra examples") {
    CHECK(forest_c(edge()) == HilbertSeries({1, 1}));
    CHECK(forest_c(k3()) == HilbertSeries({1, 2, 3, 1}));
    CHECK(subalgebra_hilbert(TruncatedAlgebra::tree(k3()), graph_linear_forms(k3())) == HilbertSeries({1, 2}));
    CHECK(forest_c(Multigraph(3, {})) == HilbertSeries({1}));
}

TEST_CASE("quotient examples") {
    const std::vector<PowerGenerator> single{{{1, 0}, 2}, {{0, 1}, 2}, {{1, 1}, 1}};
    CHECK(quotient_hilbert(2, single) == HilbertSeries({1, 1}));
    CHECK(quotient_hilbert(2, single, QuotientOptions{.eliminate_linear = false}) == HilbertSeries({1, 1}));
    CHECK(forest_b(k3()) == HilbertSeries({1, 2, 3, 1}));
    CHECK(quotient_hilbert(3, graph_tree_quotient_generators(k3())) == HilbertSeries({1, 2}));
    CHECK(quotient_hilbert(1, {{{1}, 3}}) == HilbertSeries({1, 1, 1}));
    CHECK(quotient_hilbert(0, {}) == HilbertSeries({1}));
    Budget shallow;
    shallow.max_degree = 5;
    CHECK_THROWS_AS(quotient_hilbert(1, {}, {}, shallow), BudgetExceeded);
    CHECK_THROWS(quotient_hilbert(2, {{{1, 0}, 0}}));
}

TEST_CASE("boundary degrees and generator powers") {
    CHECK(boundary_degree(k3(), {0}) == 2);
    CHECK(boundary_degree(k3(), {0, 1, 2}) == 0);
    CHECK(boundary_degree(Multigraph(2, {{0, 1}, {0, 1}}), {0}) == 2);
    CHECK_THROWS(boundary_degree(k3(), {}));

    auto p1 = powers(graph_quotient_generators(edge(), 1));
    std::sort(p1.begin(), p1.end());
    CHECK(p1 == std::vector<std::size_t>{1, 2, 2});
    auto p2 = powers(graph_quotient_generators(edge(), 2));
    std::sort(p2.begin(), p2.end());
    CHECK(p2 == std::vector<std::size_t>{1, 3, 3});
    auto pt = powers(graph_tree_quotient_generators(k3()));
    std::sort(pt.begin(), pt.end());
    CHECK(pt == std::vector<std::size_t>{1, 2, 2, 2, 2, 2, 2});
    CHECK_THROWS(graph_tree_quotient_generators(Multigraph(2, {})));
}

TEST_CASE("vector configurations") {
    const auto three = vector_configuration_forms(2, {{1, 0}, {0, 1}, {1, 1}});
    CHECK(three.generator_count() == 2);
    CHECK(three(1, 2) == 1);
    CHECK(subalgebra_hilbert(TruncatedAlgebra(3), three) == HilbertSeries({1, 2, 3, 1}));
    CHECK(subalgebra_hilbert(TruncatedAlgebra(0), vector_configuration_forms(2, {})) == HilbertSeries({1}));
    CHECK(subalgebra_hilbert(TruncatedAlgebra(1), vector_configuration_forms(3, {{0, 0, 0}})) == HilbertSeries({1}));
    CHECK_THROWS(vector_configuration_forms(2, {{1, 2, 3}}));
}

TEST_CASE("C and B sides agree with the Tutte specializations on the corpus") {
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const auto t = oracle::tutte(g);
        const std::size_t e = g.edge_count(), v = g.vertex_count();
        const HilbertSeries c = forest_c(g);
        CHECK(c == oracle::forest_histogram(g));
        CHECK(c == forest_hilbert_from_tutte(t, e, v, 1));
        CHECK(forest_b(g) == c);
        const HilbertSeries ct = subalgebra_hilbert(TruncatedAlgebra::tree(g), graph_linear_forms(g));
        CHECK(ct == oracle::tree_histogram(g));
        CHECK(quotient_hilbert(v, graph_tree_quotient_generators(g)) == ct);
    }
}

TEST_CASE("cap t agrees with cloning and with the quotient of powers tD+1") {
    for (const Multigraph& g : oracle::connected_multigraphs(3, 3))
        for (unsigned t : {2u, 3u}) {
            const HilbertSeries c = forest_c(g, t);
            CHECK(c == forest_c(clone_graph(g, t)));
            CHECK(c == forest_b(g, t));
            CHECK(c.total() == oracle::labelled_forest_count(g, t));
        }
}

TEST_CASE("subalgebra series is invariant under relabeling, sign flips and scaling") {
    std::mt19937_64 rng(5);
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const HilbertSeries base = forest_c(g);
        std::vector<std::size_t> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(forest_c(relabel_vertices(g, perm)) == base);

        LinearFormFamily forms = graph_linear_forms(g);
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const BigInt factor = (rng() % 2 ? -1 : 1) * static_cast<long>(1 + rng() % 5);
            for (std::size_t i = 0; i < g.vertex_count(); ++i) forms(i, e) *= factor;
        }
        CHECK(subalgebra_hilbert(TruncatedAlgebra::forest(g), forms) == base);
    }
}

TEST_CASE("rank backends agree") {
    RankPolicy exact{.backend = RankBackend::Exact};
    RankPolicy modular{.backend = RankBackend::Modular, .trials = 2, .seed = 3};
    for (const Multigraph& g : oracle::connected_multigraphs(4, 5)) {
        const auto alg = TruncatedAlgebra::forest(g);
        const auto forms = graph_linear_forms(g);
        CHECK(subalgebra_hilbert(alg, forms, exact) == subalgebra_hilbert(alg, forms, modular));
        const auto gens = graph_quotient_generators(g);
        CHECK(quotient_hilbert(g.vertex_count(), gens, {.eliminate_linear = false, .policy = modular}) ==
              quotient_hilbert(g.vertex_count(), gens, {.eliminate_linear = true, .policy = exact}));
    }
}

TEST_CASE("Whitney operations preserve the forest series") {
    // K4 minus edge {0,3}, twisted about {1,2}.
    Multigraph g(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(forest_c(whitney_twist(g, 1, 2, {0, 1})) == forest_c(g));
    Multigraph apart(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
    CHECK(forest_c(whitney_identify(apart, 2, 3)) == forest_c(apart));
    Multigraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(forest_c(whitney_cleave(bowtie, 2, {3, 5})) == forest_c(bowtie));
}

TEST_CASE("budget limits the monomial basis") {
    Budget tiny;
    tiny.max_basis = 2;
    CHECK_THROWS_AS(subalgebra_hilbert(TruncatedAlgebra::forest(k3()), graph_linear_forms(k3()), {}, tiny),
                    BudgetExceeded);
}

}
