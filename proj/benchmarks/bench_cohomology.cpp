#include "mfdr/cohomology.hpp"
#include "mfdr/pairing.hpp"

#include <benchmark/benchmark.h>

using namespace mfdr;

static void BM_Basis(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(drbasis(k, 20));
}
BENCHMARK(BM_Basis)->Arg(12)->Arg(24)->Arg(48);

// u^a v^b / Delta^c of weight -n
static OXElement pole_form(int n)
{
    switch (n) {
    case 4:
        return OXElement::make(UVPolynomial::monomial(2, 0), 1, -4);
    case 10:
        return OXElement::make(UVPolynomial::monomial(2, 1), 2, -10);
    default:
        return OXElement::make(UVPolynomial::monomial(2, 1), 3, -22);
    }
}

static void BM_Tail(benchmark::State& state)
{
    OXElement h = pole_form(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(tail(h));
}
BENCHMARK(BM_Tail)->Arg(4)->Arg(10)->Arg(22);

static void BM_CanonicalRep(benchmark::State& state)
{
    const int c = static_cast<int>(state.range(0));
    OXElement f = OXElement::make(UVPolynomial::monomial(3 * (c + 1), 0), c, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(canonical_rep(f, 10));
}
BENCHMARK(BM_CanonicalRep)->Arg(2)->Arg(4)->Arg(8);

static void BM_Hecke(benchmark::State& state)
{
    auto b = drbasis(12, 10);
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hecke(p, b[0], 10));
}
BENCHMARK(BM_Hecke)->Arg(2)->Arg(3)->Arg(7);

static void BM_Gram(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gram_matrix(k));
}
BENCHMARK(BM_Gram)->Arg(12)->Arg(24)->Arg(36);
