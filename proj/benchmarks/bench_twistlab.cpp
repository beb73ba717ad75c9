#include <benchmark/benchmark.h>

#include "twistlab/cli/runner.hpp"
#include "twistlab/exprcas/scalar.hpp"
#include "twistlab/momentum/momentum.hpp"
#include "twistlab/quantizeudf/udf.hpp"
#include "twistlab/ueahopf/uea.hpp"

using namespace twistlab;

static void RationalFunctionSum(benchmark::State& state) {
    auto x = exprcas::Scalar::coord("x"), y = exprcas::Scalar::coord("y");
    for (auto _ : state) {
        exprcas::Scalar s;
        for (int k = 1; k <= state.range(0); ++k) s += (x + exprcas::Scalar(k)) / (y * y + exprcas::Scalar(k));
        benchmark::DoNotOptimize(s);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(RationalFunctionSum)->DenseRange(2, 8, 2)->Complexity();

static void JordanianTwist(benchmark::State& state) {
    auto g = liebialg::build_axb();
    for (auto _ : state) benchmark::DoNotOptimize(ueahopf::jordanian_twist(g, static_cast<int>(state.range(0))));
}
BENCHMARK(JordanianTwist)->DenseRange(1, 4);

static void TwistCocycle(benchmark::State& state) {
    auto F = ueahopf::jordanian_twist(liebialg::build_axb(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(ueahopf::twist_check(F));
}
BENCHMARK(TwistCocycle)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

// all products of monomials x^i y^j, i + j <= 2, under the dressing action
static void StarMonomials(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto F = ueahopf::jordanian_twist(liebialg::build_axb(), n);
    quantizeudf::StarProduct star(F, quantizeudf::dressing_hopf_action(), n);
    auto mono = quantizeudf::monomials(star.action().chart(), 2);
    for (auto _ : state)
        for (const auto& f : mono)
            for (const auto& g : mono) benchmark::DoNotOptimize(star(f, g));
}
BENCHMARK(StarMonomials)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void ExpModified(benchmark::State& state) {
    auto h = exprcas::Scalar::coord("xiH"), e = exprcas::Scalar::coord("xiE");
    for (auto _ : state) benchmark::DoNotOptimize(momentum::exp_modified(h, e));
}
BENCHMARK(ExpModified);

static void VerifyAll(benchmark::State& state) {
    cli::SuiteConfig c;
    c.suites = {"all"};
    c.order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cli::run_suite(c).passed());
}
BENCHMARK(VerifyAll)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
