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

#include "aafre/resolution.hpp"

namespace aafre {

/// Sign split of the cost vector: plus[j] = max(c[j], 0),
/// minus[j] = min(c[j], 0); plus + minus == c exactly.
struct CostSplit {
    std::vector<double> plus;
    std::vector<double> minus;
};

CostSplit split_cost(std::span<const double> c);

struct SolveOptions {
    bool prune = false;       ///< bound-based pruning of the candidate scan
    bool all_optima = false;  ///< collect every selection tied at the optimum
    std::uint64_t max_candidates = 0;  ///< 0 = unlimited; else SizeError beyond
    unsigned workers = 1;  ///< parallel scan (ignored in pruning mode)
};

struct Z1Result {
    Selection e_star;
    Point x_e_star;
    double z1 = 0.0;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    std::vector<Selection> tied;  ///< filled when all_optima was requested
};

/// Picks the kept candidate minimizing the positive-cost part
/// z1(x) = sum_j max(c_j, 0) * x_j, breaking ties by lexicographically
/// smallest selection. Without pruning the report's kept list is scanned;
/// with pruning the reduced selection stream is searched depth-first and a
/// partial selection whose accumulated z1 already exceeds the incumbent is
/// abandoned. Both modes return identical results.
/// Throws InfeasibleError when the report is infeasible.
Z1Result minimize_z1(const Instance& inst, const ResolutionReport& report,
                     const SolveOptions& opts = {});

/// Componentwise merge by cost sign: the greatest solution where c_j < 0, the
/// optimal candidate where c_j >= 0. The result sits between its two inputs.
Point merge_optimum(const Instance& inst, const Point& x_bar,
                    const Point& x_e_star);

struct OptimizationReport {
    bool feasible = false;
    Point x_star;
    double z_star = 0.0;
    Selection e_star;
    Point x_e_star;
    double z1 = 0.0;
    std::uint64_t candidates_examined = 0;
    std::uint64_t candidates_pruned = 0;
    std::vector<Selection> tied_optima;
    ResolutionReport resolution;
};

/// End-to-end minimization of c.x over the solution set: admissible sets,
/// greatest solution, feasibility, candidate scan, merge. Infeasible
/// instances come back with feasible = false rather than an exception.
/// The candidate scan streams selections without materializing them, so only
/// max_candidates (when set) limits problem size.
OptimizationReport solve(const Instance& inst, const SolveOptions& opts = {});

}  // namespace aafre
