#include <benchmark/benchmark.h>

#include "blowup/identity_suite.hpp"
#include "blowup/scenario.hpp"

namespace {

using namespace blowup;

Built line_scenario() {
    Scenario s;
    s.m_preset = "cp:3";
    s.n_preset = "cp-linear:1";
    return build_scenario(s);
}

Built formal_scenario(int r) {
    Scenario s;
    s.formal = true;
    s.dim_m = 2 + 2 * r;
    s.dim_n = 2;
    return build_scenario(s);
}

void BM_poly_mul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Generator h{"h", 2, "T"}, k{"k", 2, "T"};
    GradedPoly a = GradedPoly::constant(1, Coeff::integers);
    GradedPoly b = GradedPoly::constant(1, Coeff::integers);
    a += GradedPoly::generator(h, Coeff::integers);
    b += GradedPoly::generator(h, Coeff::integers) + GradedPoly::generator(k, Coeff::integers);
    a = a.pow(n);
    b = b.pow(n);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(4)->Arg(8)->Arg(16);

void BM_bundle_normal_form(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Built built = formal_scenario(r);
    const auto& pe = *built.ctx->pe();
    GradedPoly p = GradedPoly::from_monomial(Monomial::power(pe.xi(), 2 * r), 1,
                                             Coeff::integers);
    for (auto _ : state) benchmark::DoNotOptimize(pe.ring()->reduce(p));
}
BENCHMARK(BM_bundle_normal_form)->Arg(3)->Arg(6);

void BM_total_class(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const Built built = formal_scenario(r);
    for (auto _ : state) benchmark::DoNotOptimize(built.ctx->total_class());
}
BENCHMARK(BM_total_class)->Arg(2)->Arg(4)->Arg(6);

void BM_context_build(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(line_scenario());
}
BENCHMARK(BM_context_build);

void BM_identity_trials(benchmark::State& state) {
    const Built built = line_scenario();
    for (auto _ : state)
        benchmark::DoNotOptimize(check_projection_formula(*built.ctx,
                                                          static_cast<int>(state.range(0)),
                                                          7));
}
BENCHMARK(BM_identity_trials)->Arg(10);

} // namespace

BENCHMARK_MAIN();
