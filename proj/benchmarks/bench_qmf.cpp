#include <benchmark/benchmark.h>

#include "qmf/forms.hpp"
#include "qmf/hecke.hpp"
#include "qmf/nearly.hpp"
#include "qmf/verify.hpp"

using namespace qmf;

static void BM_MulInteger(benchmark::State& state)
{
    const auto prec = static_cast<std::size_t>(state.range(0));
    const auto e4 = eisenstein(4, prec).series;
    const auto e6 = eisenstein(6, prec).series;
    for (auto _ : state) {
        benchmark::DoNotOptimize(e4 * e6);
    }
}
BENCHMARK(BM_MulInteger)->Arg(64)->Arg(128)->Arg(256);

static void BM_MulRational(benchmark::State& state)
{
    const auto prec = static_cast<std::size_t>(state.range(0));
    const auto e4 = eisenstein(4, prec).series;
    const auto e6 = eisenstein(6, prec).series;
    for (auto _ : state) {
        benchmark::DoNotOptimize(mul_rational(e4, e6));
    }
}
BENCHMARK(BM_MulRational)->Arg(64)->Arg(128)->Arg(256);

static void BM_CuspDelta(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(cusp_delta(static_cast<int>(state.range(0)), 128));
    }
}
BENCHMARK(BM_CuspDelta)->Arg(12)->Arg(26);

static void BM_Hecke(benchmark::State& state)
{
    const auto f = cusp_delta(26, 1024);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hecke(f, static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_Hecke)->Arg(2)->Arg(7)->Arg(10);

static void BM_EigenformTest(benchmark::State& state)
{
    const FormCatalog cat(128);
    const auto f = cat.get("E2") * cat.get("Delta12");
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenform_test(f));
    }
}
BENCHMARK(BM_EigenformTest);

static void BM_MaassShimuraEigen(benchmark::State& state)
{
    const auto f = maass_shimura(YPolyForm(cusp_delta(12, 128)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenform_test(f));
    }
}
BENCHMARK(BM_MaassShimuraEigen);

static void BM_Decompose(benchmark::State& state)
{
    const auto f = eval_generator_poly(parse_polynomial("E2^3*E4*E6 - 2*E2^2*E4^3 + E6^2*E2^2"), 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(quasimodular_decompose(f, 3));
    }
}
BENCHMARK(BM_Decompose);

static void BM_ProductSearch(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(product_search(26, 1, 10, 128));
    }
}
BENCHMARK(BM_ProductSearch)->Unit(benchmark::kMillisecond)->Iterations(3);
BENCHMARK_MAIN();
