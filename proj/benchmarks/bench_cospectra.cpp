#include "cospectra/blockgrammar.hpp"
#include "cospectra/families.hpp"
#include "cospectra/genalg.hpp"
#include "cospectra/graphio.hpp"
#include "cospectra/spectra.hpp"
#include "cospectra/switching.hpp"

#include <benchmark/benchmark.h>

using namespace cospectra;

static void BM_WindowSweepLevel2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_offdiag_level2());
}
BENCHMARK(BM_WindowSweepLevel2);

static void BM_WindowSweepLevel3(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_diag_level3());
}
BENCHMARK(BM_WindowSweepLevel3);

static void BM_Conjugate(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    auto g = build_family({Family::flower, m});
    auto a = g.adjacency_int();
    auto q = build_q(2, m);
    for (auto _ : state) benchmark::DoNotOptimize(check_matrix(a, q));
    state.SetComplexityN(2 * m);
}
BENCHMARK(BM_Conjugate)->Arg(5)->Arg(9)->Arg(15)->Arg(21)->Complexity();

static void BM_CharPoly(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    auto g = build_family({Family::flower, m});
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(g));
    state.SetComplexityN(2 * m);
}
BENCHMARK(BM_CharPoly)->Arg(5)->Arg(9)->Arg(15)->Arg(21)->Complexity();

static void BM_GenerateLevel2(benchmark::State& state) {
    GenConfig cfg;
    cfg.level = 2;
    cfg.m = static_cast<int>(state.range(0));
    uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(algorithm1(cfg));
    }
}
BENCHMARK(BM_GenerateLevel2)->Arg(4)->Arg(6)->Arg(8);

static void BM_GenerateLevel3(benchmark::State& state) {
    GenConfig cfg;
    cfg.level = 3;
    cfg.m = static_cast<int>(state.range(0));
    uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(algorithm2(cfg));
    }
}
BENCHMARK(BM_GenerateLevel3)->Arg(4)->Arg(5);

static void BM_Graph6RoundTrip(benchmark::State& state) {
    auto g = build_family({Family::example6, 6});
    for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)));
}
BENCHMARK(BM_Graph6RoundTrip);

static void BM_ColumnSweep(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const int k = 2 * m;
    auto q = build_q(2, m);
    for (auto _ : state) {
        int admissible = 0;
        std::vector<int> col(k);
        for (long long bits = 0; bits < (1LL << k); ++bits) {
            for (int i = 0; i < k; ++i) col[i] = bits >> i & 1;
            admissible += column_admissible(q, col).ok;
        }
        benchmark::DoNotOptimize(admissible);
    }
}
BENCHMARK(BM_ColumnSweep)->Arg(4)->Arg(6);

static void BM_SwitchPair(benchmark::State& state) {
    auto x = build_family({Family::flower, 5});
    Graph b(3);
    b.set_edge(0, 1, true);
    b.set_edge(1, 2, true);
    ZeroOneMatrix c(10, 3);
    for (int i = 0; i < 10; i += 2) c.set(i, 0, true);   // one neighbor per pair
    auto q = build_q(2, 5);
    for (auto _ : state) benchmark::DoNotOptimize(make_cospectral_pair({x, c, b}, q));
}
BENCHMARK(BM_SwitchPair);

BENCHMARK_MAIN();
