#include "mfdr/eisenstein.hpp"
#include "mfdr/oxring.hpp"

#include <benchmark/benchmark.h>

using namespace mfdr;

static void BM_DeltaProduct(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_q(n, DeltaRoute::product));
}
BENCHMARK(BM_DeltaProduct)->Arg(50)->Arg(200)->Arg(800);

static void BM_DeltaEisenstein(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(delta_q(n, DeltaRoute::eisenstein));
}
BENCHMARK(BM_DeltaEisenstein)->Arg(50)->Arg(200)->Arg(800);

static void BM_SeriesInverse(benchmark::State& state)
{
    QSeries d = delta_q(static_cast<int>(state.range(0)) + 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(d.inverse());
}
BENCHMARK(BM_SeriesInverse)->Arg(50)->Arg(200);

static void BM_ExpandPole(benchmark::State& state)
{
    OXElement f = OXElement::make(UVPolynomial::monomial(5, 1), 3, -10);
    const int n = static_cast<int>(state.range(0));
    expand(f, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(expand(f, n));
}
BENCHMARK(BM_ExpandPole)->Arg(40)->Arg(160);

static void BM_FromSeries(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    QSeries s = eisenstein(k, k + 10, false);
    for (auto _ : state)
        benchmark::DoNotOptimize(from_series(s, k));
}
BENCHMARK(BM_FromSeries)->Arg(12)->Arg(24)->Arg(48);
