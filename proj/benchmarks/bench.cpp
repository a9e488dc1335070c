#include <benchmark/benchmark.h>

#include <regraph/chain.hpp>
#include <regraph/graph.hpp>
#include <regraph/mixing.hpp>
#include <regraph/pairing.hpp>
#include <regraph/scenario.hpp>
#include <regraph/state_space.hpp>
#include <regraph/transition_matrix.hpp>

namespace {

void bm_chain_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    regraph::RegularGraph z = regraph::circulant_start(n, d);
    regraph::Rng rng(12345);
    for (auto _ : state) {
        z = regraph::step(z, rng);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(bm_chain_step)->Args({6, 3})->Args({24, 3})->Args({64, 5})->Args({256, 4});

void bm_enumerate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto space = regraph::enumerate_state_space(n, d);
        benchmark::DoNotOptimize(space);
    }
}
BENCHMARK(bm_enumerate)->Args({6, 2})->Args({6, 3})->Args({8, 3})->Unit(benchmark::kMillisecond);

void bm_transition_matrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const int d = static_cast<int>(state.range(1));
    auto space = regraph::enumerate_state_space(n, d);
    for (auto _ : state) {
        auto matrix = regraph::build_transition_matrix(space.states());
        benchmark::DoNotOptimize(matrix);
    }
}
BENCHMARK(bm_transition_matrix)->Args({6, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

void bm_exact_mixing_time(benchmark::State& state) {
    auto space = regraph::enumerate_state_space(6, 2);
    auto matrix = regraph::build_transition_matrix(space.states());
    for (auto _ : state) {
        benchmark::DoNotOptimize(regraph::exact_mixing_time(matrix, 0.25));
    }
}
BENCHMARK(bm_exact_mixing_time)->Unit(benchmark::kMillisecond);

void bm_spectral_gap(benchmark::State& state) {
    auto space = regraph::enumerate_state_space(6, 3);
    auto matrix = regraph::build_transition_matrix(space.states());
    for (auto _ : state) {
        benchmark::DoNotOptimize(regraph::spectral_gap(matrix));
    }
}
BENCHMARK(bm_spectral_gap)->Unit(benchmark::kMillisecond);

void bm_worked_example_pairings(benchmark::State& state) {
    auto scenario = regraph::scenario::ScenarioState::build();
    auto colored = scenario.colored();
    for (auto _ : state) {
        regraph::PairingEnumerator it(colored, regraph::PairingMode::alternating);
        std::uint64_t seen = 0;
        regraph::Pairing psi;
        while (it.next(psi)) ++seen;
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(bm_worked_example_pairings)->Unit(benchmark::kMillisecond);

void bm_empirical_tv(benchmark::State& state) {
    auto space = regraph::enumerate_state_space(6, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(regraph::empirical_tv(6, 2, 40, 20000, 99, &space));
    }
}
BENCHMARK(bm_empirical_tv)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
