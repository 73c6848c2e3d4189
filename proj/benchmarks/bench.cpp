#include <benchmark/benchmark.h>

#include "upward/embedding.hpp"
#include "upward/equivalence.hpp"
#include "upward/formats.hpp"
#include "upward/generate.hpp"
#include "upward/npp.hpp"

using namespace upward;

namespace {

Drawing medium_drawing() {
    GeneratorConfig config;
    config.vertex_count = 12;
    config.target_edge_count = 20;
    config.seed = 7;
    return generate(config).drawing;
}

void BM_generate(benchmark::State& state) {
    GeneratorConfig config;
    config.vertex_count = static_cast<std::size_t>(state.range(0));
    config.target_edge_count = 2 * config.vertex_count;
    config.seed = 7;
    for (auto _ : state) benchmark::DoNotOptimize(generate(config));
}
BENCHMARK(BM_generate)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_validate(benchmark::State& state) {
    const Drawing d = medium_drawing();
    for (auto _ : state) benchmark::DoNotOptimize(validate_drawing(d));
}
BENCHMARK(BM_validate)->Unit(benchmark::kMillisecond);

void BM_min_clearance(benchmark::State& state) {
    const Drawing d = medium_drawing();
    for (auto _ : state) benchmark::DoNotOptimize(min_clearance(d));
}
BENCHMARK(BM_min_clearance)->Unit(benchmark::kMillisecond);

void BM_signature(benchmark::State& state) {
    const Drawing d = medium_drawing();
    for (auto _ : state)
        benchmark::DoNotOptimize(signature(npp_extend_auto(d).extended.drawing));
}
BENCHMARK(BM_signature)->Unit(benchmark::kMillisecond);

void BM_equivalent(benchmark::State& state) {
    const Drawing d = medium_drawing();
    const Drawing moved = transform(d, Translate{Rat(3), Rat(-2)});
    for (auto _ : state) benchmark::DoNotOptimize(equivalent(d, moved));
}
BENCHMARK(BM_equivalent)->Unit(benchmark::kMillisecond);

void BM_perturb_step(benchmark::State& state) {
    const Drawing d = medium_drawing();
    std::uint64_t step = 0;
    for (auto _ : state) benchmark::DoNotOptimize(perturb_step(d, 3, step++));
}
BENCHMARK(BM_perturb_step)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
