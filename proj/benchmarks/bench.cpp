// Micro benchmarks for the hot library paths.  Each case hoists its setup
// (contexts, character tables, rectangle families) out of the timed loop and
// reports items/second for the quantity named in the counter.

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "glp/characters.hpp"
#include "glp/contfrac.hpp"
#include "glp/lattice.hpp"
#include "glp/theorems.hpp"

namespace {

using namespace glp;

// Partial-quotient statistics for every numerator of one denominator.
void BM_quotient_stats_sweep(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        u64 total = 0;
        for (u64 a = 1; a < p; ++a) total += quotient_stats(a, p).sum;
        benchmark::DoNotOptimize(total);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<i64>(p - 1));
    state.counters["expansions/s"] =
        benchmark::Counter(static_cast<double>(state.iterations() * static_cast<i64>(p - 1)),
                           benchmark::Counter::kIsRate);
}
BENCHMARK(BM_quotient_stats_sweep)->Arg(997)->Arg(9973)->Arg(99991)->Unit(benchmark::kMillisecond);

// Exact discrepancy of one point set; the scan visits p^2 corner cells.
void BM_discrepancy_exact(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    const LatticePointSet set = make_point_set(p, p / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discrepancy_exact(set, p).d_exact.num);
    }
    state.counters["cells/s"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * static_cast<double>(p) * static_cast<double>(p),
        benchmark::Counter::kIsRate);
}
BENCHMARK(BM_discrepancy_exact)->Arg(997)->Arg(2003)->Arg(9973)->Unit(benchmark::kMillisecond);

// Full-length character sums for every non-principal character.
void BM_interval_sums(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    const PrimeContext ctx = make_context(p);
    const CharacterSystem sys(ctx);
    for (auto _ : state) {
        cplx total(0.0, 0.0);
        for (u64 j = 1; j + 1 < p; ++j) total += interval_sum(character(sys, j), p - 1);
        benchmark::DoNotOptimize(total);
    }
    state.counters["terms/s"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * static_cast<double>(p - 2) *
            static_cast<double>(p - 1),
        benchmark::Counter::kIsRate);
}
BENCHMARK(BM_interval_sums)->Arg(499)->Arg(997)->Arg(2003)->Unit(benchmark::kMillisecond);

// Factorized bilinear sum over the level-4 family, all non-principal characters.
void BM_bilinear_char_sum(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    const PrimeContext ctx = make_context(p);
    const CharacterSystem sys(ctx);
    const RectangleFamily fam = rectangle_family(p, 4.0);
    for (auto _ : state) {
        cplx total(0.0, 0.0);
        for (u64 j = 1; j + 1 < p; ++j) total += bilinear_char_sum(fam, character(sys, j));
        benchmark::DoNotOptimize(total);
    }
    state.counters["characters/s"] =
        benchmark::Counter(static_cast<double>(state.iterations()) * static_cast<double>(p - 2),
                           benchmark::Counter::kIsRate);
}
BENCHMARK(BM_bilinear_char_sum)->Arg(499)->Arg(997)->Arg(2003)->Unit(benchmark::kMillisecond);

// Hyperbolic solution counts for every generator at level 16 ln p.
void BM_solution_count_sweep(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    const RectangleFamily fam = rectangle_family(p, 16.0 * std::log(static_cast<double>(p)));
    for (auto _ : state) {
        u64 total = 0;
        for (u64 a = 1; a < p; ++a) total += solution_count(fam, a);
        benchmark::DoNotOptimize(total);
    }
    state.counters["generators/s"] =
        benchmark::Counter(static_cast<double>(state.iterations()) * static_cast<double>(p - 1),
                           benchmark::Counter::kIsRate);
}
BENCHMARK(BM_solution_count_sweep)->Arg(499)->Arg(997)->Arg(2003)->Unit(benchmark::kMillisecond);

// Approximation-level sums for every generator of one prime.
void BM_approx_level_sum_sweep(benchmark::State& state) {
    const u64 p = static_cast<u64>(state.range(0));
    for (auto _ : state) {
        u64 total = 0;
        for (u64 a = 1; a < p; ++a) total += approx_level_sum(p, a);
        benchmark::DoNotOptimize(total);
    }
    state.counters["pairs/s"] = benchmark::Counter(
        static_cast<double>(state.iterations()) * static_cast<double>(p - 1) *
            static_cast<double>(p - 1),
        benchmark::Counter::kIsRate);
}
BENCHMARK(BM_approx_level_sum_sweep)->Arg(499)->Arg(997)->Arg(2003)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
