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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "aafre/optimizer.hpp"
#include "aafre/oracle.hpp"
#include "aafre/resolution.hpp"
#include "support/example1.hpp"

using namespace aafre;

namespace {

bool approx_point(const Point& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::fabs(a[j] - b[j]) > tol) return false;
    }
    return true;
}

std::vector<int> one_based(const Selection& s) {
    std::vector<int> out;
    for (int col : s.e) out.push_back(col + 1);
    return out;
}

}  // namespace

TEST_SUITE("optimizer") {

TEST_CASE("cost split is an exact sign split") {
    const CostSplit split = split_cost(std::vector<double>{-7.6648, 4.9208});
    CHECK(split.plus == std::vector<double>{0.0, 4.9208});
    CHECK(split.minus == std::vector<double>{-7.6648, 0.0});

    const CostSplit zeros = split_cost(std::vector<double>{0.0, 0.0});
    CHECK(zeros.plus == std::vector<double>{0.0, 0.0});
    CHECK(zeros.minus == std::vector<double>{0.0, 0.0});

    const CostSplit single = split_cost(std::vector<double>{3.0});
    CHECK(single.plus == std::vector<double>{3.0});
    CHECK(single.minus == std::vector<double>{0.0});
}

TEST_CASE("positive-part minimization on the reference instance") {
    const Instance inst = testsupport::example1();
    ResolveOptions ropts;
    ropts.minimality_filter = false;
    const ResolutionReport report = feasible_candidates(inst, ropts);
    const Z1Result z1 = minimize_z1(inst, report);
    CHECK(one_based(z1.e_star) == testsupport::kExample1EStar);
    CHECK(z1.z1 == 0.0);
    CHECK(approx_point(z1.x_e_star, testsupport::kExample1XEStar, 1e-4));
}

TEST_CASE("all costs nonpositive returns the first candidate") {
    const Instance inst(Matrix::from_rows({{0.8, 0.7}}), {0.5}, {-1.0, -2.0},
                        TNormParam(2.0));
    const ResolutionReport report = feasible_candidates(inst);
    const Z1Result z1 = minimize_z1(inst, report);
    CHECK(z1.z1 == 0.0);
    CHECK(z1.e_star == Selection{{0}});
}

TEST_CASE("single-candidate instances are trivial") {
    const Instance inst(Matrix::from_rows({{0.9, 0.3}, {0.3, 0.9}}),
                        {0.5, 0.5}, {2.0, -3.0}, TNormParam(1.0));
    const ResolutionReport report = feasible_candidates(inst);
    REQUIRE(report.kept.size() == 1);
    const Z1Result z1 = minimize_z1(inst, report);
    CHECK(z1.e_star == report.kept[0].e);
}

TEST_CASE("minimization requires a feasible report") {
    const Instance blocked(Matrix::from_rows({{0.2}}), {0.9}, {1.0},
                           TNormParam(2.0));
    const ResolutionReport report = feasible_candidates(blocked);
    CHECK_THROWS_AS(minimize_z1(blocked, report), InfeasibleError);
}

TEST_CASE("merge picks by cost sign") {
    const Instance inst = testsupport::example1();
    const Point x_bar = global_max(inst);
    const SolveOptions opts;
    const ResolutionReport report = feasible_candidates(inst);
    const Z1Result z1 = minimize_z1(inst, report, opts);
    const Point x_star = merge_optimum(inst, x_bar, z1.x_e_star);
    CHECK(approx_point(x_star, testsupport::kExample1XStar, 1e-3));
    for (std::size_t j = 0; j < x_star.size(); ++j) {
        CHECK(z1.x_e_star[j] <= x_star[j]);
        CHECK(x_star[j] <= x_bar[j]);
    }

    const Instance all_pos(Matrix::from_rows({{0.8, 0.7}}), {0.5}, {1.0, 2.0},
                           TNormParam(2.0));
    const Point lo{0.1, 0.2}, hi{0.5, 0.6};
    CHECK(merge_optimum(all_pos, hi, lo) == lo);

    const Instance all_neg(Matrix::from_rows({{0.8, 0.7}}), {0.5},
                           {-1.0, -2.0}, TNormParam(2.0));
    CHECK(merge_optimum(all_neg, hi, lo) == hi);
}

TEST_CASE("end-to-end solve of the reference instance") {
    const Instance inst = testsupport::example1();
    const OptimizationReport report = solve(inst);
    CHECK(report.feasible);
    CHECK(one_based(report.e_star) == testsupport::kExample1EStar);
    CHECK(approx_point(report.x_star, testsupport::kExample1XStar, 1e-3));
    CHECK(std::fabs(report.z_star - testsupport::kExample1ZStar) <= 5e-3);
    CHECK(report.z1 == 0.0);
    CHECK(report.resolution.unreduced_count ==
          testsupport::kExample1UnreducedCount);
    CHECK(report.candidates_examined == 216);
    CHECK(membership(inst, report.x_star));
}

TEST_CASE("solve reports infeasibility without throwing") {
    const Instance blocked(Matrix::from_rows({{0.2}}), {0.9}, {1.0},
                           TNormParam(2.0));
    const OptimizationReport report = solve(blocked);
    CHECK_FALSE(report.feasible);
    CHECK(report.resolution.empty_equation == 0);
    CHECK(report.x_star.empty());
}

TEST_CASE("zero cost vector still produces a feasible optimum") {
    const Instance inst(Matrix::from_rows({{0.9, 0.3}, {0.3, 0.9}}),
                        {0.5, 0.5}, {0.0, 0.0}, TNormParam(1.0));
    const OptimizationReport report = solve(inst);
    CHECK(report.feasible);
    CHECK(report.z_star == 0.0);
    CHECK(membership(inst, report.x_star));
}

TEST_CASE("pruned and exhaustive scans agree") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        oracle::GeneratorConfig cfg;
        cfg.equations = 2 + static_cast<std::size_t>(seed % 3);
        cfg.variables = 3 + static_cast<std::size_t>(seed % 3);
        cfg.density = 0.8;
        cfg.lambda = 1.0 + 0.5 * static_cast<double>(seed % 6);
        cfg.seed = 2000 + seed;
        const Instance inst = oracle::generate_feasible(cfg);

        const OptimizationReport plain = solve(inst);
        SolveOptions popts;
        popts.prune = true;
        const OptimizationReport pruned = solve(inst, popts);

        REQUIRE(plain.feasible == pruned.feasible);
        if (!plain.feasible) continue;
        CHECK(plain.e_star == pruned.e_star);
        CHECK(plain.z1 == pruned.z1);
        CHECK(plain.x_star == pruned.x_star);
        CHECK(pruned.candidates_examined + pruned.candidates_pruned ==
              plain.candidates_examined);
    }
}

TEST_CASE("parallel solve matches sequential") {
    const Instance inst = testsupport::example1();
    const OptimizationReport seq = solve(inst);
    SolveOptions wopts;
    wopts.workers = 4;
    const OptimizationReport par = solve(inst, wopts);
    CHECK(seq.e_star == par.e_star);
    CHECK(seq.z1 == par.z1);
    CHECK(seq.x_star == par.x_star);
}

TEST_CASE("scaling positive costs keeps the optimal selection") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        oracle::GeneratorConfig cfg;
        cfg.equations = 3;
        cfg.variables = 4;
        cfg.lambda = 2.0;
        cfg.seed = 3000 + seed;
        const Instance inst = oracle::generate_feasible(cfg);

        std::vector<double> scaled = inst.c();
        for (double& cj : scaled) {
            if (cj > 0.0) cj *= 3.7;
        }
        const Instance scaled_inst(inst.A(), inst.b(), scaled, inst.tnorm(),
                                   inst.tol());
        const OptimizationReport a = solve(inst);
        const OptimizationReport b = solve(scaled_inst);
        REQUIRE(a.feasible);
        CHECK(a.e_star == b.e_star);
    }
}

TEST_CASE("all tied optima are collected on request") {
    const Instance inst = testsupport::example1();
    SolveOptions opts;
    opts.all_optima = true;
    const OptimizationReport report = solve(inst, opts);
    // Equations 1 and 2 can each pick two zero-cost columns independently.
    CHECK(report.tied_optima.size() == 4);
    CHECK(report.tied_optima.front() == report.e_star);
    for (const Selection& s : report.tied_optima) {
        CHECK_FALSE(lex_less(s, report.e_star));
    }

    SolveOptions pruned = opts;
    pruned.prune = true;
    const OptimizationReport pruned_report = solve(inst, pruned);
    CHECK(pruned_report.tied_optima.size() == report.tied_optima.size());
    for (std::size_t k = 0; k < report.tied_optima.size(); ++k) {
        CHECK(report.tied_optima[k] == pruned_report.tied_optima[k]);
    }
}

TEST_CASE("sandwich between candidate and greatest solution") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        oracle::GeneratorConfig cfg;
        cfg.equations = 2 + static_cast<std::size_t>(seed % 2);
        cfg.variables = 3;
        cfg.lambda = 1.5;
        cfg.seed = 4000 + seed;
        const Instance inst = oracle::generate_feasible(cfg);
        const OptimizationReport report = solve(inst);
        REQUIRE(report.feasible);
        CHECK(membership(inst, report.x_star));
        for (std::size_t j = 0; j < report.x_star.size(); ++j) {
            CHECK(report.x_e_star[j] <= report.x_star[j] + 1e-15);
            CHECK(report.x_star[j] <= report.resolution.x_bar[j] + 1e-15);
        }
    }
}

}  // TEST_SUITE
