#include "koszul/cyclic.hpp"
#include "koszul/document.hpp"
#include "koszul/koszul_complex.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace koszul;

namespace {

QlcSplit fixture_split(const std::string& name) {
    return split(associative_form(load_document(std::string(KOSZUL_FIXTURE_DIR) + "/" + name + ".json")));
}

// n×n with about three small entries per row, fixed seed
Matrix random_sparse(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> col(0, n - 1), val(-3, 3);
    Matrix m(n, n);
    for (int r = 0; r < n; ++r)
        for (int k = 0; k < 3; ++k) m.set(r, col(rng), val(rng));
    return m;
}

void BM_rank(benchmark::State& state) {
    const Matrix m = random_sparse(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(100)->Arg(400)->Arg(1600);

void BM_kernel(benchmark::State& state) {
    const Matrix m = random_sparse(static_cast<int>(state.range(0)), 11);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_kernel)->Arg(100)->Arg(400);

void BM_resolution_weyl(benchmark::State& state) {
    const QlcSplit s = fixture_split("weyl");
    for (auto _ : state) benchmark::DoNotOptimize(resolution_check(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_resolution_weyl)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_hochschild_weyl(benchmark::State& state) {
    const QlcSplit s = fixture_split("weyl");
    for (auto _ : state)
        benchmark::DoNotOptimize(hochschild(s, static_cast<int>(state.range(0)), HochschildMethod::koszul, 2));
}
BENCHMARK(BM_hochschild_weyl)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_chain_maps_sym2(benchmark::State& state) {
    const CurvedAlgebra a = CurvedAlgebra::from_graded(FilteredAlgebra(fixture_split("sym2"), 3));
    for (auto _ : state) benchmark::DoNotOptimize(chain_map_checks(a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_chain_maps_sym2)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
