// Copyright 2026 The aafre authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "aafre/optimizer.hpp"
#include "aafre/oracle.hpp"
#include "aafre/resolution.hpp"

namespace {

aafre::Instance sized_instance(std::size_t m, std::size_t n) {
    aafre::oracle::GeneratorConfig cfg;
    cfg.equations = m;
    cfg.variables = n;
    cfg.density = 0.9;
    cfg.lambda = 3.0;
    cfg.seed = 100 + m * 10 + n;
    return aafre::oracle::generate_feasible(cfg);
}

void BM_Solve(benchmark::State& state) {
    const auto inst = sized_instance(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aafre::solve(inst));
    }
}
BENCHMARK(BM_Solve)->Args({4, 6})->Args({6, 8})->Args({8, 10});

void BM_SolvePruned(benchmark::State& state) {
    const auto inst = sized_instance(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    aafre::SolveOptions opts;
    opts.prune = true;
    for (auto _ : state) {
        benchmark::DoNotOptimize(aafre::solve(inst, opts));
    }
}
BENCHMARK(BM_SolvePruned)->Args({4, 6})->Args({6, 8})->Args({8, 10});

void BM_FeasibleCandidates(benchmark::State& state) {
    const auto inst = sized_instance(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aafre::feasible_candidates(inst));
    }
}
BENCHMARK(BM_FeasibleCandidates)->Args({4, 6})->Args({6, 8});

void BM_BruteForceReference(benchmark::State& state) {
    const auto inst = sized_instance(static_cast<std::size_t>(state.range(0)),
                                     static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(aafre::oracle::brute_force_solve(inst));
    }
}
BENCHMARK(BM_BruteForceReference)->Args({3, 4})->Args({4, 5});

}  // namespace

BENCHMARK_MAIN();
