#include <benchmark/benchmark.h>

#include "symblob/symblob.hpp"

namespace {

using namespace symblob;

void BM_eigh(benchmark::State& state) {
    const Matrix m = random_spd(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(eigh(m));
}
BENCHMARK(BM_eigh)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Arg(20);

void BM_eigvals_general(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Matrix jm = standard_J(n) * random_spd(2 * n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(eigvals_general(jm));
}
BENCHMARK(BM_eigvals_general)->Arg(1)->Arg(2)->Arg(4)->Arg(6)->Arg(10);

void BM_williamson(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Matrix m = random_spd(2 * n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(williamson_diagonalize(m));
}
BENCHMARK(BM_williamson)->Arg(1)->Arg(2)->Arg(3)->Arg(5)->Arg(10);

void BM_is_admissible(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const Ellipsoid e(random_spd(2 * n, 4));
    for (auto _ : state) benchmark::DoNotOptimize(is_admissible(e));
}
BENCHMARK(BM_is_admissible)->Arg(1)->Arg(3)->Arg(5);

void BM_wigner_quadrature(benchmark::State& state) {
    const GaussianPureState psi = random_pure_state(1, 5);
    const PhasePoint z{{0.3, -0.4}};
    for (auto _ : state) benchmark::DoNotOptimize(wigner_quadrature_oracle(psi, z));
}
BENCHMARK(BM_wigner_quadrature);

}  // namespace
BENCHMARK_MAIN();
