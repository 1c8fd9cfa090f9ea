#include <benchmark/benchmark.h>

#include "kostant/netflow.hpp"
#include "kostant/scaling.hpp"
#include "kostant/vertex_average.hpp"

using namespace kostant;

namespace {

void BM_maximize_entropy(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ScalingResult res = maximize_entropy(v);
        benchmark::DoNotOptimize(res.h_star);
    }
}
BENCHMARK(BM_maximize_entropy)->DenseRange(4, 10, 2);

void BM_maximize_log_product(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        LogProductResult res = maximize_log_product(v);
        benchmark::DoNotOptimize(res.sup_log_product);
    }
}
BENCHMARK(BM_maximize_log_product)->DenseRange(4, 8, 2);

void BM_enumerate_vertices_positive(benchmark::State& state) {
    const NetflowVector v = family({FamilyTag::tesler, 1}, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto verts = enumerate_vertices(v);
        benchmark::DoNotOptimize(verts.size());
    }
}
BENCHMARK(BM_enumerate_vertices_positive)->DenseRange(4, 7);

}  // namespace
