#include <benchmark/benchmark.h>

#include "kostant/exact_count.hpp"
#include "kostant/lidskii.hpp"
#include "kostant/netflow.hpp"

using namespace kostant;

namespace {

void BM_count_exact_tesler(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BigInt k = count_exact(v);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_count_exact_tesler)->DenseRange(4, 8);

void BM_count_exact_cry(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::cry, 2}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BigInt k = count_exact(v);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_count_exact_cry)->DenseRange(6, 12, 2);

void BM_count_brute_tesler(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BigInt k = count_brute(v);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_count_brute_tesler)->DenseRange(4, 6);

void BM_lidskii_count(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        BigInt k = lidskii_count(v);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_lidskii_count)->DenseRange(3, 5);

}  // namespace
