// Serial reference against OpenMP sweeps; the argument is the thread count.
#include "parabraid/braiding.hpp"
#include "parabraid/parastat.hpp"
#include "parabraid/schur.hpp"
#include "parabraid/ternary.hpp"

#include <benchmark/benchmark.h>

using namespace parabraid;

namespace {

Braiding z3_braiding() { return Braiding::diagonal(Grading(GradeGroup{3, 2}, SigmaForm{{{1, 2}, {2, 1}}}, 1)); }

void BM_YangBaxter(benchmark::State& state) {
    Braiding psi = z3_braiding();
    const Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(check_yang_baxter(psi, exec));
}

void BM_Derivation(benchmark::State& state) {
    Braiding psi = Braiding::diagonal(Grading(GradeGroup{2, 2}, SigmaForm{{{1, 0}, {0, 1}}}, 1));
    const Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(check_derivation({Side::left, Signs::alt}, psi, exec));
}

void BM_Symmetrizer(benchmark::State& state) {
    Braiding psi = z3_braiding();
    const Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(check_symmetrizer_bracket(psi, Side::left, exec));
}

void BM_RealizedJacobi(benchmark::State& state) {
    Grading g(GradeGroup{2, 2}, SigmaForm{{{1, 0}, {0, 1}}}, 1);
    SpeciesSpec s(g, {{"c", {1, 1}, 2, true}}, {parse_q_rule("c+", "c", "delta")});
    const Execution exec{static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(check_realized_jacobi(s, Side::left, exec));
}

}  // namespace

BENCHMARK(BM_YangBaxter)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Derivation)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Symmetrizer)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RealizedJacobi)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
