#include "psalg/exactalg.hpp"
#include "psalg/hypergraphs.hpp"
#include "psalg/nilalg.hpp"
#include "psalg/tutte.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace psalg;

namespace {

Multigraph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
    return Multigraph(n, edges);
}

Multigraph grid(std::size_t w, std::size_t h) {
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) {
            if (c + 1 < w) edges.push_back({r * w + c, r * w + c + 1});
            if (r + 1 < h) edges.push_back({r * w + c, (r + 1) * w + c});
        }
    return Multigraph(w * h, edges);
}

Matrix<BigInt> random_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    Matrix<BigInt> m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = dist(rng);
    return m;
}

void BM_RankExact(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(m));
}
BENCHMARK(BM_RankExact)->Arg(16)->Arg(32)->Arg(64);

void BM_RankModular(benchmark::State& state) {
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank_modular(m, 2, 0));
}
BENCHMARK(BM_RankModular)->Arg(16)->Arg(32)->Arg(64);

void BM_TutteCompleteGraph(benchmark::State& state) {
    const Multigraph g = complete(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tutte_deletion_contraction(g));
}
BENCHMARK(BM_TutteCompleteGraph)->DenseRange(4, 7);

void BM_TutteGrid(benchmark::State& state) {
    const Multigraph g = grid(3, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tutte_deletion_contraction(g));
}
BENCHMARK(BM_TutteGrid)->DenseRange(2, 4);

void BM_ForestSubalgebra(benchmark::State& state) {
    const Multigraph g = complete(static_cast<std::size_t>(state.range(0)));
    const auto alg = TruncatedAlgebra::forest(g);
    const auto forms = graph_linear_forms(g);
    for (auto _ : state) benchmark::DoNotOptimize(subalgebra_hilbert(alg, forms));
}
BENCHMARK(BM_ForestSubalgebra)->DenseRange(3, 5);

void BM_ForestQuotient(benchmark::State& state) {
    const Multigraph g = complete(static_cast<std::size_t>(state.range(0)));
    const auto gens = graph_quotient_generators(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(quotient_hilbert(g.vertex_count(), gens));
}
BENCHMARK(BM_ForestQuotient)->DenseRange(3, 5);

void BM_TreeSubalgebra(benchmark::State& state) {
    const Multigraph g = complete(static_cast<std::size_t>(state.range(0)));
    const auto alg = TruncatedAlgebra::tree(g);
    const auto forms = graph_linear_forms(g);
    for (auto _ : state) benchmark::DoNotOptimize(subalgebra_hilbert(alg, forms));
}
BENCHMARK(BM_TreeSubalgebra)->DenseRange(3, 5);

void BM_HypergraphTutte(benchmark::State& state) {
    std::vector<std::vector<std::size_t>> edges;
    const auto e = static_cast<std::size_t>(state.range(0));
    for (std::size_t i = 0; i < e; ++i) edges.push_back({i % 5, (i + 1) % 5, (i + 3) % 5});
    const Hypergraph h(5, edges);
    for (auto _ : state) {
        const RankOracle oracle(h);
        benchmark::DoNotOptimize(hypergraph_tutte(oracle));
    }
}
BENCHMARK(BM_HypergraphTutte)->DenseRange(4, 10, 3);

}  // namespace
BENCHMARK_MAIN();
