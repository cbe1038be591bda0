// Serial reference vs OpenMP kernels.
#include "gzeta/graph.hpp"
#include "gzeta/walk.hpp"
#include "gzeta/zeta.hpp"

#include <benchmark/benchmark.h>

using namespace gzeta;

namespace {

Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_ModifiedCharpoly(benchmark::State& state) {
    const Graph g = generate_named("petersen");
    const IntMatrix s = squared_support(g).matrix.to_int();
    for (auto _ : state) benchmark::DoNotOptimize(det_poly_linear(s, PencilSign::minus, mode(state)));
}
BENCHMARK(BM_ModifiedCharpoly)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IotaEnumeration(benchmark::State& state) {
    const Graph g = generate_from_spec("k5");
    for (auto _ : state) benchmark::DoNotOptimize(iota_bruteforce(g, mode(state)));
}
BENCHMARK(BM_IotaEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ReducedCycles(benchmark::State& state) {
    const Graph g = generate_named("petersen");
    for (auto _ : state) benchmark::DoNotOptimize(count_reduced_cycles(g, 9, mode(state)));
}
BENCHMARK(BM_ReducedCycles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TwoStepCycles(benchmark::State& state) {
    const Graph g = generate_from_spec("k4");
    for (auto _ : state) benchmark::DoNotOptimize(count_two_step_cycles(g, 5, mode(state)));
}
BENCHMARK(BM_TwoStepCycles)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
