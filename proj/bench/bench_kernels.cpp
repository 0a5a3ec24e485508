// Copyright 2026 The graphgame Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference paths against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>

#include "graphgame/classical_solver.hpp"
#include "graphgame/game_runner.hpp"
#include "graphgame/io.hpp"
#include "graphgame/quantum_solver.hpp"

using namespace graphgame;

namespace {

const CompiledGame &fixture(const char *name) {
    static std::map<std::string, CompiledGame> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, CompiledGame(load_game(
                                     std::filesystem::path(GRAPHGAME_FIXTURE_DIR) / name)))
                 .first;
    }
    return it->second;
}

Execution mode(const benchmark::State &state) {
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State &state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_ClassicalEnumeration(benchmark::State &state) {
    const auto &g = fixture("cube3.game");
    for (auto _ : state) {
        benchmark::DoNotOptimize(classical_value(g, {.execution = mode(state)}).value);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << 24));
    label(state);
}

void BM_Session(benchmark::State &state) {
    const auto &g = fixture("star4.game");
    OptimizeOptions options;
    options.restarts = 1;
    SessionConfig config;
    config.rounds = 200000;
    config.seed = 1;
    config.strategy = optimize_quantum(g, options).strategy;
    config.execution = mode(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_session(g, config).wins);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.rounds));
    label(state);
}

void BM_OptimizerRestarts(benchmark::State &state) {
    const auto &g = fixture("star4.game");
    OptimizeOptions options;
    options.restarts = 16;
    options.execution = mode(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(optimize_quantum(g, options).value);
    }
    state.SetItemsProcessed(state.iterations() * options.restarts);
    label(state);
}

} // namespace

BENCHMARK(BM_ClassicalEnumeration)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Session)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OptimizerRestarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
