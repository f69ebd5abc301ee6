// Serial reference vs parallel kernels on training-shaped workloads:
// N=900 units, d=36 (satellite pixels) and d=784 (digit images).
#include <benchmark/benchmark.h>

#include <cstdio>
#include <vector>

#include "afm/kernels.hpp"
#include "afm/rng.hpp"

namespace {

using afm::kernels::Exec;

struct Workload {
    std::vector<double> rows, queries;
    int n, d;
    std::size_t m;
};

Workload make_workload(int n, int d, std::size_t m) {
    Workload w{{}, {}, n, d, m};
    afm::Rng rng(42);
    w.rows.resize(static_cast<std::size_t>(n) * d);
    for (auto& x : w.rows) x = rng.uniform();
    w.queries.resize(m * static_cast<std::size_t>(d));
    for (auto& x : w.queries) x = rng.uniform();
    return w;
}

template <Exec exec>
void bm_nearest_row(benchmark::State& state) {
    const auto w = make_workload(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 64);
    std::size_t q = 0;
    for (auto _ : state) {
        const auto r = afm::kernels::nearest_row(
            w.rows.data(), w.n, w.d, w.queries.data() + (q++ % w.m) * w.d, exec);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * w.n);
}

template <Exec exec>
void bm_nearest_two(benchmark::State& state) {
    const auto w = make_workload(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 64);
    std::size_t q = 0;
    for (auto _ : state) {
        const auto r = afm::kernels::nearest_two_rows(
            w.rows.data(), w.n, w.d, w.queries.data() + (q++ % w.m) * w.d, exec);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * w.n);
}

template <Exec exec>
void bm_batch(benchmark::State& state) {
    const auto w = make_workload(static_cast<int>(state.range(0)),
                                 static_cast<int>(state.range(1)), 1024);
    std::vector<afm::kernels::Nearest> out(w.m);
    for (auto _ : state) {
        afm::kernels::nearest_row_batch(w.rows.data(), w.n, w.queries.data(), w.m,
                                        w.d, out.data(), exec);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * w.m * w.n);
}

void shapes(benchmark::internal::Benchmark* b) {
    b->Args({900, 36})->Args({900, 784})->Args({1600, 36});
}

}  // namespace

BENCHMARK(bm_nearest_row<Exec::serial>)->Apply(shapes);
BENCHMARK(bm_nearest_row<Exec::parallel>)->Apply(shapes);
BENCHMARK(bm_nearest_two<Exec::serial>)->Apply(shapes);
BENCHMARK(bm_nearest_two<Exec::parallel>)->Apply(shapes);
BENCHMARK(bm_batch<Exec::serial>)->Apply(shapes);
BENCHMARK(bm_batch<Exec::parallel>)->Apply(shapes);

int main(int argc, char** argv) {
    std::printf("parallel kernels compiled in: %s\n",
                afm::kernels::parallel_enabled() ? "yes" : "no");
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    benchmark::Shutdown();
    return 0;
}
