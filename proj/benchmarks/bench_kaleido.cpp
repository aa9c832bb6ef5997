#include <benchmark/benchmark.h>

#include "kaleido/apparitions.hpp"
#include "kaleido/kaleidoscope.hpp"
#include "kaleido/transforms.hpp"

using namespace kaleido;

namespace {

const Kaleidoscope &K() { return Kaleidoscope::standard(); }

void BM_ColorSearchKind18(benchmark::State &state) {
    const Apparition a = gen18(K().geometry(1)).front();
    auto st = a.states();
    for (auto _ : state) benchmark::DoNotOptimize(color_search_exhaustive(st, a.tetrads));
}
BENCHMARK(BM_ColorSearchKind18)->Unit(benchmark::kMillisecond);

void BM_ColorSearchKind20(benchmark::State &state) {
    const Apparition a = gen20(K().geometry(1), K().catalog()).front();
    auto st = a.states();
    for (auto _ : state) benchmark::DoNotOptimize(color_search_exhaustive(st, a.tetrads));
}
BENCHMARK(BM_ColorSearchKind20)->Unit(benchmark::kMillisecond);

void BM_ColorSearchFullSystem(benchmark::State &state) {
    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    for (auto _ : state) benchmark::DoNotOptimize(color_search_backtracking(labels, K().tetrads()));
}
BENCHMARK(BM_ColorSearchFullSystem)->Unit(benchmark::kMicrosecond);

void BM_EnumerateTetrads(benchmark::State &state) {
    std::vector<int> labels;
    for (int l = 1; l <= Catalog::kSize; l++) labels.push_back(l);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_tetrads(labels, K().catalog()));
}
BENCHMARK(BM_EnumerateTetrads)->Unit(benchmark::kMicrosecond);

void BM_EnumerateApparitions(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(K().geometries(), K().catalog()));
}
BENCHMARK(BM_EnumerateApparitions)->Unit(benchmark::kMillisecond);

void BM_FindMaps(benchmark::State &state) {
    enumerate_symplectic();
    for (auto _ : state) benchmark::DoNotOptimize(find_maps(K().square(1), K().square(6)));
}
BENCHMARK(BM_FindMaps)->Unit(benchmark::kMicrosecond);

void BM_LiftAll(benchmark::State &state) {
    const auto &g = enumerate_symplectic();
    lift_to_unitary(g.front());
    for (auto _ : state) {
        for (const SymplecticMap &m : g) benchmark::DoNotOptimize(lift_to_unitary(m));
    }
}
BENCHMARK(BM_LiftAll)->Unit(benchmark::kMillisecond);

void BM_BuildKaleidoscope(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(Kaleidoscope(golden::reference()));
}
BENCHMARK(BM_BuildKaleidoscope)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
