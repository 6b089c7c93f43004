#include "hbmosc/reference.hpp"
#include "hbmosc/solver.hpp"

#include <benchmark/benchmark.h>

using namespace hbmosc;

namespace {

void BM_PolyMul(benchmark::State& state) {
    HbmSystem sys = build_hbm_system(2, 3);
    const MultiPoly& a = sys.equations[0];
    const MultiPoly& b = sys.equations[1];
    for (auto _ : state) {
        MultiPoly p = a * b;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_PolyMul);

void BM_BuildSystem(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        HbmSystem sys = build_hbm_system(1, order);
        benchmark::DoNotOptimize(sys);
    }
}
BENCHMARK(BM_BuildSystem)->Arg(2)->Arg(4)->Arg(6);

void BM_BuchbergerLex(benchmark::State& state) {
    HbmSystem sys = build_hbm_system(0, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        GroebnerBasis gb = buchberger(sys.ideal_equations, lex_order());
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_BuchbergerLex)->Arg(2)->Arg(3);

void BM_LexViaGrevlex(benchmark::State& state) {
    HbmSystem sys = build_hbm_system(0, static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        GroebnerBasis gb = lex_via_grevlex(sys.ideal_equations);
        benchmark::DoNotOptimize(gb);
    }
}
BENCHMARK(BM_LexViaGrevlex)->Arg(3)->Arg(4);

void BM_IsolateRoots(benchmark::State& state) {
    HbmSystem sys = build_hbm_system(0, 3);
    UniPoly g1 = eliminate_univariate(buchberger(sys.ideal_equations, lex_order()));
    for (auto _ : state) {
        auto roots = isolate_positive_roots(g1);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_IsolateRoots);

void BM_RefineRoot(benchmark::State& state) {
    HbmSystem sys = build_hbm_system(0, 3);
    UniPoly g1 = eliminate_univariate(buchberger(sys.ideal_equations, lex_order()));
    auto roots = isolate_positive_roots(g1);
    for (auto _ : state) {
        RootEnclosure r = refine(roots.back(), g1, pow10_inv(30));
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RefineRoot);

void BM_SolveHbm(benchmark::State& state) {
    const unsigned order = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        SolveReport r = solve_hbm(0, order);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SolveHbm)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QuadraturePeriod(benchmark::State& state) {
    for (auto _ : state) {
        PeriodResult r = regularized_period_quadrature(1.0L, 1e-3L);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_QuadraturePeriod);

void BM_OdePeriod(benchmark::State& state) {
    for (auto _ : state) {
        PeriodResult r = regularized_period_ode(1.0L, 0.5L);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_OdePeriod)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
