#include <benchmark/benchmark.h>

#include "fwdidx/bounds.hpp"
#include "fwdidx/families.hpp"
#include "fwdidx/routing.hpp"
#include "fwdidx/solver.hpp"

using namespace fwdidx;

namespace {

void BM_DistancesQ10(benchmark::State& state) {
    auto g = generate({Family::Hypercube, {10}});
    for (auto _ : state) {
        auto dm = distances(g);
        benchmark::DoNotOptimize(dm.diameter);
    }
}
BENCHMARK(BM_DistancesQ10);

void BM_ShortestPathRoutingCCC4(benchmark::State& state) {
    auto g = generate({Family::CubeConnectedCycles, {4}});
    for (auto _ : state) {
        auto r = shortestPathRouting(g, TieRule::LoadAwareGreedy);
        benchmark::DoNotOptimize(r.pairCount());
    }
}
BENCHMARK(BM_ShortestPathRoutingCCC4);

void BM_LoadProfileC16(benchmark::State& state) {
    auto g = generate({Family::Cycle, {16}});
    auto r = shortestPathRouting(g);
    for (auto _ : state) {
        auto lp = loadProfile(g, r);
        benchmark::DoNotOptimize(lp.maxEdgeLoad);
    }
}
BENCHMARK(BM_LoadProfileC16);

void BM_ExactWheelVertexGeneral(benchmark::State& state) {
    auto g = generate({Family::Wheel, {7}});
    for (auto _ : state) {
        auto r = exactIndex(g, Objective::Vertex, RoutingMode::General);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactWheelVertexGeneral);

void BM_ExactK33EdgeMinimal(benchmark::State& state) {
    auto g = generate({Family::CompleteBipartite, {3, 3}});
    for (auto _ : state) {
        auto r = exactIndex(g, Objective::Edge, RoutingMode::Minimal);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_ExactK33EdgeMinimal);

void BM_HeuristicS4Edge(benchmark::State& state) {
    auto g = generate({Family::StarGraph, {4}});
    for (auto _ : state) {
        auto r = heuristicIndex(g, Objective::Edge, 100);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_HeuristicS4Edge);

void BM_ConnectivityQ6(benchmark::State& state) {
    auto g = generate({Family::Hypercube, {6}});
    for (auto _ : state) {
        auto rep = connectivity(g);
        benchmark::DoNotOptimize(rep.kappa);
    }
}
BENCHMARK(BM_ConnectivityQ6);

}  // namespace

BENCHMARK_MAIN();
