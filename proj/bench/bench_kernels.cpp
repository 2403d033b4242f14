#include <benchmark/benchmark.h>

#include "ecclab/conjectures.hpp"
#include "ecclab/enumeration.hpp"
#include "ecclab/families.hpp"
#include "ecclab/kernels.hpp"

using namespace ecclab;
namespace fam = ecclab::families;

namespace {

Graph bench_graph(int which) {
    switch (which) {
        case 0: return fam::hypercube(12);
        case 1: return fam::path(3000);
        case 2: return fam::lollipop(1200, 400);
        default: return fam::pc_graph(40, 12);
    }
}

const char* bench_name(int which) {
    static const char* names[] = {"Q_12", "P_3000", "LP(1200,400)", "PC(40,12)"};
    return names[which];
}

void BM_EccSerial(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(eccentricities_serial(g));
}

void BM_EccParallel(benchmark::State& state) {
    Graph g = bench_graph(static_cast<int>(state.range(0)));
    state.SetLabel(bench_name(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(eccentricities_parallel(g));
}

void scan_bench(benchmark::State& state, bool parallel) {
    const auto& spec = find_conjecture("A.462-L");
    ScanOptions opt;
    opt.parallel = parallel;
    const int hi = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scan(spec, GraphClass::connected_graphs, 4, hi, opt));
}

void BM_ScanSerial(benchmark::State& state) { scan_bench(state, false); }
void BM_ScanParallel(benchmark::State& state) { scan_bench(state, true); }

void BM_ConnectedGraphs(benchmark::State& state) {
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected_graphs(8, {}, threads));
}

}  // namespace

BENCHMARK(BM_EccSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EccParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectedGraphs)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
