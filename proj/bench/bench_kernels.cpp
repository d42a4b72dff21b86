// Serial-vs-parallel comparison of the two data-parallel kernels: per-program
// measure aggregation and synthetic population generation. Both kernels
// partition the index space, so the parallel forms must produce byte-identical
// results to the serial references they are measured against.
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "citerank/dataset.hpp"
#include "citerank/measures.hpp"
#include "citerank/synthgen.hpp"

namespace {

using namespace citerank;

const std::vector<int> kNs = {20, 40, 60, 80};

// Synthetic faculty spread round-robin across programs.
Dataset bench_dataset(std::size_t n_faculty, std::size_t n_programs) {
    SynthConfig config;
    config.n = n_faculty;
    config.seed = 42;
    auto faculty = generate(config);
    for (std::size_t i = 0; i < faculty.size(); ++i)
        faculty[i].university_id = "program-" + std::to_string(i % n_programs);
    auto programs = implied_programs(faculty);
    return make_dataset(std::move(programs), std::move(faculty));
}

void BM_measures_serial(benchmark::State& state) {
    auto data = bench_dataset(static_cast<std::size_t>(state.range(0)), 200);
    for (auto _ : state) {
        auto report = compute_all_measures_serial(data, kNs);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_measures_serial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_measures_parallel(benchmark::State& state) {
    auto data = bench_dataset(static_cast<std::size_t>(state.range(0)), 200);
    for (auto _ : state) {
        auto report = compute_all_measures(data, kNs);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_measures_parallel)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_generate_serial(benchmark::State& state) {
    SynthConfig config;
    config.n = static_cast<std::size_t>(state.range(0));
    config.seed = 7;
    for (auto _ : state) {
        auto faculty = generate_serial(config);
        benchmark::DoNotOptimize(faculty);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_generate_serial)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_generate_parallel(benchmark::State& state) {
    SynthConfig config;
    config.n = static_cast<std::size_t>(state.range(0));
    config.seed = 7;
    for (auto _ : state) {
        auto faculty = generate(config);
        benchmark::DoNotOptimize(faculty);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_generate_parallel)->Arg(20000)->Arg(200000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
