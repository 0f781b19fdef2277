#include <benchmark/benchmark.h>

#include <orbcc/chern.hpp>
#include <orbcc/criteria.hpp>
#include <orbcc/gg_oracle.hpp>
#include <orbcc/scan.hpp>

#include <random>

namespace {

using namespace orbcc;

SmoothOrbifoldSurface random_surface(std::mt19937& rng, int n) {
    std::uniform_int_distribution<long long> genus(0, 10);
    std::uniform_int_distribution<long long> mult(1, 100);
    std::uniform_int_distribution<long long> diag(-5, 25);
    std::uniform_int_distribution<long long> off(0, 25);

    AmbientSurfaceData amb;
    amb.c1_sq = 9;
    amb.c2 = 3;
    for (int i = 0; i < n; ++i) {
        amb.components.push_back(
            {"C" + std::to_string(i + 1), genus(rng), Multiplicity(mult(rng))});
    }
    std::vector<std::vector<long long>> rows(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = diag(rng);
        for (int j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = off(rng);
    }
    amb.intersections = IntersectionMatrix(std::move(rows));
    return surface_from_ambient(amb);
}

void BM_TheoremA(benchmark::State& state) {
    std::mt19937 rng(7);
    SmoothOrbifoldSurface s =
        random_surface(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem_a_lhs(s));
    }
}
BENCHMARK(BM_TheoremA)->Arg(2)->Arg(8)->Arg(32);

void BM_ChiJetExact(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    const long long n = state.range(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_jet_exact(k, n));
    }
}
BENCHMARK(BM_ChiJetExact)->Args({2, 50})->Args({3, 50})->Args({3, 200});

void BM_LeadingCoefficient(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(leading_coefficient(k));
    }
}
BENCHMARK(BM_LeadingCoefficient)->Arg(1)->Arg(2)->Arg(3);

void BM_PlanePairScan(benchmark::State& state) {
    ScanRequest req;
    req.family = ScanFamily::PlanePair;
    req.fixed = {{"d1", 5}, {"d2", 5}};
    req.swept_name = "m";
    req.lo = 2;
    req.hi = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_scan(req));
    }
}
BENCHMARK(BM_PlanePairScan)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
