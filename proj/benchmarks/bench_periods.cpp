#include "mfdr/periods.hpp"

#include <benchmark/benchmark.h>

using namespace mfdr;

static void BM_EvaluateDelta(benchmark::State& state)
{
    const int prec = static_cast<int>(state.range(0));
    long bits = digits_to_bits(prec);
    FormEvaluator ev(OXElement::delta(), bits);
    BigComplex z = BigComplex::from_double(bits, 0.1, 0.7);
    for (auto _ : state)
        benchmark::DoNotOptimize(ev(z));
}
BENCHMARK(BM_EvaluateDelta)->Arg(40)->Arg(80)->Arg(160);

static void BM_CocycleS(benchmark::State& state)
{
    const int prec = static_cast<int>(state.range(0));
    BigComplex z0 = BigComplex::from_double(digits_to_bits(prec + 40), 0, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(eichler_cocycle(OXElement::delta(), SL2Mat::S(), z0, prec));
}
BENCHMARK(BM_CocycleS)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_PeriodPolynomial(benchmark::State& state)
{
    const int prec = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(period_polynomial(OXElement::delta(), prec));
}
BENCHMARK(BM_PeriodPolynomial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
