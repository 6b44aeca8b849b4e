#include <gpramsey/oracle.hpp>
#include <gpramsey/progression.hpp>
#include <gpramsey/search.hpp>
#include <gpramsey/spectral.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace gpramsey;

static void BM_ExactThresholdSemi(benchmark::State & state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_threshold(2, k, Family::semi(1)).value);
}
BENCHMARK(BM_ExactThresholdSemi)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CountMonoColorings(benchmark::State & state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(count_mono_colorings(2, n, 4, Family::semi(2)).mono_count);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_CountMonoColorings)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_PrimaryProgression(benchmark::State & state)
{
    std::mt19937_64 rng(1);
    std::vector<Color> digits(40);
    for (auto & c : digits)
        c = static_cast<Color>(rng() % 2);
    Coloring chi(2, digits);
    const auto fam = Family::quasi(static_cast<int>(state.range(0)));
    for (auto _ : state)
        for (int a = 1; a <= 10; ++a)
            benchmark::DoNotOptimize(primary_progression(chi, a, 2, 5, fam));
}
BENCHMARK(BM_PrimaryProgression)->Arg(1)->Arg(3);

static void BM_DominantEigenvalue(benchmark::State & state)
{
    auto a = transfer_matrix(4, static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dominant_eigenvalue(a).lambda);
}
BENCHMARK(BM_DominantEigenvalue)->Arg(1)->Arg(6)->Arg(16);

static void BM_WitnessSearch(benchmark::State & state)
{
    SearchBudget budget;
    budget.max_nodes = 1'000'000;
    for (auto _ : state)
        benchmark::DoNotOptimize(random_witness_search(2, 36, 25, Family::semi(2), budget).moves);
}
BENCHMARK(BM_WitnessSearch);
BENCHMARK_MAIN();
