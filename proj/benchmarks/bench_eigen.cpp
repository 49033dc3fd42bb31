#include <benchmark/benchmark.h>

#include "sympspec/eigen.hpp"
#include "sympspec/operator_models.hpp"
#include "sympspec/symplectic.hpp"

namespace {

using namespace sympspec;

DenseMatrix tridiag(std::size_t n) {
    return truncate_h(make_toeplitz({2.0, 0.5}), n);
}

void bm_sym_eig(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix t = tridiag(n);
    for (auto _ : state) {
        auto eig = sym_eig(t);
        benchmark::DoNotOptimize(eig.eigenvalues.data());
    }
}
BENCHMARK(bm_sym_eig)->Arg(50)->Arg(100)->Arg(250)->Arg(500)->Unit(benchmark::kMillisecond);

void bm_symplectic_eigenvalues(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix t =
        truncate_hh(make_class_a(make_toeplitz({2.0, 0.5}), make_toeplitz({2.0, -0.5})), n);
    for (auto _ : state) {
        auto d = symplectic_eigenvalues(t);
        benchmark::DoNotOptimize(d.data());
    }
}
BENCHMARK(bm_symplectic_eigenvalues)->Arg(25)->Arg(50)->Arg(100)->Arg(250)
    ->Unit(benchmark::kMillisecond);

void bm_williamson(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DenseMatrix t =
        truncate_hh(make_class_a(make_toeplitz({2.0, 0.5}), make_toeplitz({2.0, -0.5})), n);
    for (auto _ : state) {
        auto result = williamson(t);
        benchmark::DoNotOptimize(result.d.data());
    }
}
BENCHMARK(bm_williamson)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
