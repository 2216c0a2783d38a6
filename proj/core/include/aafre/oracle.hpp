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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aafre/instance.hpp"

// Independent verification machinery: witness-based instance generation, an
// exhaustive reference solver that never uses the greatest-solution shortcut,
// feasible-set sampling, and a scalar fit that recovers an unknown t-norm
// exponent from (a, b, residual) observations. Deliberately single-threaded;
// determinism under a seed matters more than speed at these sizes.

namespace aafre::oracle {

struct GeneratorConfig {
    std::size_t equations = 3;
    std::size_t variables = 4;
    double density = 1.0;  ///< fraction of nonzero matrix entries, in (0, 1]
    double lambda = 2.0;
    std::uint64_t seed = 0;
    double tol = Instance::kDefaultTol;
};

/// Builds a solvable instance by sampling a matrix and a witness point w and
/// defining each right-hand side as the composition value at w. Costs are
/// drawn with mixed signs (when more than one variable allows it). Identical
/// configs produce identical instances.
Instance generate_feasible(const GeneratorConfig& cfg);

struct BruteForceResult {
    bool feasible = false;
    Point x_star;
    double z_star = 0.0;
    Point x_bar;
    std::vector<Point> feasible_candidates;  ///< deduplicated, direct-checked
    std::uint64_t unreduced_count = 0;
};

/// Exhaustive reference solver. Enumerates every selection without reduction
/// or pruning, keeps the candidates that satisfy every equation by direct
/// evaluation, and optimizes by scanning the sign-split merge of every
/// feasible candidate. A few random points of each candidate box are then
/// drawn and verified not to beat the reported optimum.
/// Throws SizeError when the raw selection count exceeds `limit`.
BruteForceResult brute_force_solve(const Instance& inst,
                                   std::uint64_t limit = 100000,
                                   std::size_t sanity_samples = 32,
                                   std::uint64_t seed = 12345);

/// Random feasible points, each drawn inside the box spanned by a feasible
/// candidate and the greatest solution, and verified by direct membership.
std::vector<Point> sample_feasible(const Instance& inst,
                                   const BruteForceResult& bf,
                                   std::size_t count, std::uint64_t seed);

struct FitSample {
    double a = 0.0;
    double b = 0.0;
    double expected = 0.0;  ///< observed residual of (a, b)
};

/// Recovers the t-norm exponent that best explains the observed residuals,
/// by golden-section search of the least-squares error over [lo, hi].
/// Throws FitError when a sample is underdetermined (a == b, or an expected
/// value at the boundary) or when the best fit still misses an observation
/// by more than 1e-3.
double fit_lambda(std::span<const FitSample> samples, double lo = 0.1,
                  double hi = 50.0);

}  // namespace aafre::oracle
