#include <benchmark/benchmark.h>

#include "taukit/fib_sieve.hpp"
#include "taukit/fm_polynomial.hpp"
#include "taukit/lucas.hpp"
#include "taukit/tau_table.hpp"
#include "taukit/thue_sieve.hpp"

using namespace taukit;

static void BM_expand(benchmark::State& state) {
    for (auto _ : state) {
        TauTable t = TauTable::expand(static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(t.at(1));
    }
}
BENCHMARK(BM_expand)->Arg(1000)->Arg(5000)->Arg(10000);

static void BM_lucas_term(benchmark::State& state) {
    static TauTable t = TauTable::expand(200);
    LucasContext ctx = tau_context(11, t);
    for (auto _ : state) benchmark::DoNotOptimize(u_n(ctx, static_cast<unsigned long>(state.range(0))));
}
BENCHMARK(BM_lucas_term)->Arg(23)->Arg(107);

static void BM_fib_scan(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fib_lucas_mod(42, 13, 199));
}
BENCHMARK(BM_fib_scan);

static void BM_modular_exclusion(benchmark::State& state) {
    ThueInstance inst{421, 7, 1};
    std::vector<std::uint64_t> pool = {23, 67, 89, 199, 331};
    for (auto _ : state) benchmark::DoNotOptimize(modular_exclusion(inst, pool));
}
BENCHMARK(BM_modular_exclusion);

BENCHMARK_MAIN();
