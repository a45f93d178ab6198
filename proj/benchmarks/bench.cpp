#include <benchmark/benchmark.h>

#include "ktred/connectivity.hpp"
#include "ktred/generators.hpp"
#include "ktred/graph.hpp"
#include "ktred/ktree.hpp"
#include "ktred/reduction.hpp"

using namespace ktred;

namespace {

Graph make_ktree(int n, int k) {
    return build_ktree(random_ktree({n, k, 7, Family::random_attach}));
}

void BM_generate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        KTreeTrace t = random_ktree({n, k, seed++, Family::random_attach});
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_generate)->Args({200, 2})->Args({1000, 2})->Args({1000, 4});

void BM_build(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    KTreeTrace t = random_ktree({n, 3, 7, Family::random_attach});
    for (auto _ : state) {
        Graph g = build_ktree(t);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_build)->Arg(200)->Arg(1000);

void BM_recognize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Graph g = make_ktree(n, k);
    for (auto _ : state) {
        Recognition r = recognize_ktree(g, k);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_recognize)->Args({200, 2})->Args({1000, 2})->Args({1000, 4});

void BM_reduce_triangle(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_ktree(n, 2);
    for (auto _ : state) {
        ReductionResult r = reduce_two_tree(g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_reduce_triangle)->Arg(100)->Arg(400);

void BM_reduce_degree(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    Graph g = make_ktree(n, k);
    for (auto _ : state) {
        ReductionResult r = reduce_ktree(g, k, ReduceMode::fast);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_reduce_degree)->Args({100, 2})->Args({400, 2})->Args({400, 4});

void BM_edge_connectivity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Graph g = make_ktree(n, 3);
    for (auto _ : state) {
        ConnectivityVerdict v = edge_connectivity(g);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_edge_connectivity)->Arg(30)->Arg(80);

}  // namespace

BENCHMARK_MAIN();
