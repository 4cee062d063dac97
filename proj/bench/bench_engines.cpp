// Fast engine vs brute-force oracle (serial and OpenMP) on the m = 0 table
// rows. Oracle rows stop at r = 4 so a run finishes in seconds.

#include <benchmark/benchmark.h>

#include "frobkern/counting.hpp"
#include "frobkern/oracle.hpp"

using namespace frobkern;

namespace {

void row_fast(benchmark::State& state)
{
    const auto p = state.range(0);
    const auto r = state.range(1);
    for (auto _ : state) {
        MemoCache cache; // cold each iteration
        for (std::int64_t n = 0; n <= 10; n += 2) benchmark::DoNotOptimize(n_classical({p, r, 0, n}, &cache));
    }
}

template <bool Parallel>
void row_oracle(benchmark::State& state)
{
    const auto p = state.range(0);
    const auto r = state.range(1);
    const OracleOptions opts{.force = true, .parallel = Parallel};
    for (auto _ : state) {
        for (std::int64_t n = 0; n <= 10; n += 2) benchmark::DoNotOptimize(brute_count({p, r, 0, n}, opts));
    }
}

void quantum_fast(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(n_quantum(state.range(0), state.range(1), 10));
}

} // namespace

BENCHMARK(row_fast)->ArgsProduct({{3, 5}, {2, 3, 4, 5}})->Unit(benchmark::kMicrosecond);
BENCHMARK(row_oracle<false>)->Name("row_oracle_serial")->ArgsProduct({{3, 5}, {2, 3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(row_oracle<true>)->Name("row_oracle_omp")->ArgsProduct({{3, 5}, {2, 3, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(quantum_fast)->ArgsProduct({{3, 5}, {2, 3, 4}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
