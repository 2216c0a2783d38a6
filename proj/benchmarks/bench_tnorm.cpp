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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "aafre/tnorm.hpp"

namespace {

std::vector<double> unit_samples(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.001, 0.999);
    std::vector<double> out(count);
    for (auto& v : out) v = unit(rng);
    return out;
}

void BM_TnormEval(benchmark::State& state) {
    const aafre::TNormParam p(static_cast<double>(state.range(0)));
    const auto as = unit_samples(1024, 1);
    const auto xs = unit_samples(1024, 2);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            aafre::tnorm_eval(as[k & 1023], xs[k & 1023], p));
        ++k;
    }
}
BENCHMARK(BM_TnormEval)->Arg(1)->Arg(3)->Arg(20);

void BM_TnormResidual(benchmark::State& state) {
    const aafre::TNormParam p(static_cast<double>(state.range(0)));
    const auto as = unit_samples(1024, 3);
    const auto us = unit_samples(1024, 4);
    std::size_t k = 0;
    for (auto _ : state) {
        const double a = as[k & 1023];
        const double b = a * us[k & 1023];
        benchmark::DoNotOptimize(aafre::tnorm_residual(a, b, p));
        ++k;
    }
}
BENCHMARK(BM_TnormResidual)->Arg(1)->Arg(3)->Arg(20);

void BM_MaxCompose(benchmark::State& state) {
    const aafre::TNormParam p(3.0);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto row = unit_samples(n, 5);
    const auto x = unit_samples(n, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(aafre::max_compose(row, x, p));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxCompose)->RangeMultiplier(8)->Range(8, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
