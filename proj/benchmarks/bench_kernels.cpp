#include <benchmark/benchmark.h>

#include <random>

#include "reflinv/cyclotomic.hpp"
#include "reflinv/eigenspace.hpp"
#include "reflinv/invariants.hpp"
#include "reflinv/matrix_group.hpp"
#include "reflinv/molien.hpp"

using namespace reflinv;

static void BM_CyclotomicMultiply(benchmark::State &state)
{
    const unsigned m = static_cast<unsigned>(state.range(0));
    const Cyclotomic a = Cyclotomic::cos_2pi(m, 1) + Cyclotomic::zeta(m, 3) * Cyclotomic(Rational(2, 7));
    const Cyclotomic b = Cyclotomic::sin_2pi(m, 2) - Cyclotomic::zeta(m, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(12)->Arg(20)->Arg(32);

static void BM_Closure(benchmark::State &state)
{
    const std::string spec = "hyperoctahedral:" + std::to_string(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(builtin(spec).order());
    }
}
BENCHMARK(BM_Closure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MolienDihedral(benchmark::State &state)
{
    const ReflectionGroup g = builtin("dihedral:" + std::to_string(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(molien(g, default_truncation(g)));
    }
}
BENCHMARK(BM_MolienDihedral)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

static void BM_Harmonics(benchmark::State &state)
{
    const ReflectionGroup g = builtin(state.range(0) == 0 ? "symmetric:4" : "hyperoctahedral:3");
    const FundamentalInvariants f = find_fundamental_invariants(g);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_harmonics(g, f).total_dimension);
    }
}
BENCHMARK(BM_Harmonics)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_CommutantNumeric(benchmark::State &state)
{
    const ReflectionGroup g = builtin("dihedral:" + std::to_string(state.range(0)));
    std::mt19937_64 rng(7);
    const InducedModel m = make_model(random_generic_weight(g, rng));
    const auto samples = standard_samples(g, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(commutant_dimension_numeric(m, samples, 128));
    }
}
BENCHMARK(BM_CommutantNumeric)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
