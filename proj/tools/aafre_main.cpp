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
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aafre/instance_io.hpp"
#include "aafre/optimizer.hpp"
#include "aafre/oracle.hpp"
#include "aafre/resolution.hpp"

// Exit codes: 0 solved/ok, 1 infeasible, 2 input error, 3 size or limit
// exceeded, 4 verification mismatch or internal failure.

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInternal = 4;

struct CommonOptions {
    std::optional<double> lambda;
    std::optional<double> tol;
    std::string format = "text";
    std::uint64_t max_candidates = 0;
    unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--lambda", opts.lambda,
                    "Override the t-norm exponent of the instance document");
    cmd->add_option("--tol", opts.tol, "Override the feasibility tolerance");
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    cmd->add_option("--max-candidates", opts.max_candidates,
                    "Abort (exit 3) when the candidate enumeration would "
                    "exceed this many selections; 0 = unlimited");
    cmd->add_option("--parallel", opts.workers,
                    "Worker threads for the candidate scan")
        ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw aafre::ParseError("cannot open instance file " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

aafre::Instance load_instance(const std::string& path,
                              const CommonOptions& opts) {
    aafre::Instance inst = aafre::io::parse_instance(read_file(path));
    if (opts.lambda) inst = inst.with_lambda(*opts.lambda);
    if (opts.tol) inst = inst.with_tol(*opts.tol);
    return inst;
}

int run_resolve(const std::string& path, const CommonOptions& common,
                bool no_minimality) {
    const aafre::Instance inst = load_instance(path, common);
    aafre::ResolveOptions opts;
    opts.minimality_filter = !no_minimality;
    opts.max_candidates = common.max_candidates;
    opts.workers = common.workers;
    const aafre::ResolutionReport report = aafre::feasible_candidates(inst, opts);
    std::cout << aafre::io::emit_report(report,
                                        aafre::io::parse_format(common.format));
    return report.feasible ? kExitSolved : kExitInfeasible;
}

int run_optimize(const std::string& path, const CommonOptions& common,
                 bool prune, bool all_optima) {
    const aafre::Instance inst = load_instance(path, common);
    aafre::SolveOptions opts;
    opts.prune = prune;
    opts.all_optima = all_optima;
    opts.max_candidates = common.max_candidates;
    opts.workers = common.workers;
    const aafre::OptimizationReport report = aafre::solve(inst, opts);
    std::cout << aafre::io::emit_report(report,
                                        aafre::io::parse_format(common.format));
    return report.feasible ? kExitSolved : kExitInfeasible;
}

int run_check(const std::string& path, const CommonOptions& common,
              std::uint64_t limit) {
    const aafre::Instance inst = load_instance(path, common);
    const aafre::oracle::BruteForceResult reference =
        aafre::oracle::brute_force_solve(inst, limit);
    const aafre::OptimizationReport report = aafre::solve(inst);

    if (report.feasible != reference.feasible) {
        std::cout << "check: MISMATCH: solver says "
                  << (report.feasible ? "feasible" : "infeasible")
                  << ", exhaustive reference says "
                  << (reference.feasible ? "feasible" : "infeasible") << "\n";
        return kExitInternal;
    }
    if (!report.feasible) {
        std::cout << "check: OK: both report infeasible\n";
        return kExitInfeasible;
    }
    const double gap = std::fabs(report.z_star - reference.z_star);
    if (gap > 1e-9) {
        std::cout << "check: MISMATCH: objective " << report.z_star
                  << " vs reference " << reference.z_star << " (gap " << gap
                  << ")\n";
        return kExitInternal;
    }
    std::cout << "check: OK: optimum agrees with the exhaustive reference to "
                 "1e-9 over "
              << reference.unreduced_count << " raw selections ("
              << reference.feasible_candidates.size()
              << " feasible candidates)\n";
    return kExitSolved;
}

int run_generate(const aafre::oracle::GeneratorConfig& cfg) {
    const aafre::Instance inst = aafre::oracle::generate_feasible(cfg);
    std::cout << aafre::io::instance_to_json(inst);
    return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "aafre - linear optimization over max-Aczel-Alsina fuzzy relational "
        "equations"};
    app.require_subcommand(1);

    CommonOptions resolve_common, optimize_common, check_common;
    std::string resolve_file, optimize_file, check_file;
    bool no_minimality = false;
    bool prune = false;
    bool all_optima = false;
    std::uint64_t check_limit = 100000;

    CLI::App* resolve =
        app.add_subcommand("resolve",
                           "Feasibility, greatest solution and minimal "
                           "candidate report");
    resolve->add_option("file", resolve_file, "Instance document")->required();
    add_common(resolve, resolve_common);
    resolve->add_flag("--no-minimality-filter", no_minimality,
                      "Keep every candidate below the greatest solution, not "
                      "only the componentwise-minimal ones");

    CLI::App* optimize = app.add_subcommand(
        "optimize", "Minimize the cost over the solution set");
    optimize->add_option("file", optimize_file, "Instance document")->required();
    add_common(optimize, optimize_common);
    optimize->add_flag("--prune", prune,
                       "Bound-based pruning of the candidate scan");
    optimize->add_flag("--all-optima", all_optima,
                       "Report every selection tied at the optimum");

    CLI::App* check = app.add_subcommand(
        "check", "Cross-validate the solver against exhaustive enumeration");
    check->add_option("file", check_file, "Instance document")->required();
    add_common(check, check_common);
    check->add_option("--limit", check_limit,
                      "Raw selection-space bound for the reference solver")
        ->capture_default_str();

    aafre::oracle::GeneratorConfig gen_cfg;
    CLI::App* generate = app.add_subcommand(
        "generate", "Emit a solvable instance document built from a witness");
    generate->add_option("--m", gen_cfg.equations, "Equations")
        ->capture_default_str();
    generate->add_option("--n", gen_cfg.variables, "Variables")
        ->capture_default_str();
    generate->add_option("--density", gen_cfg.density,
                         "Fraction of nonzero matrix entries")
        ->capture_default_str();
    generate->add_option("--lambda", gen_cfg.lambda, "T-norm exponent")
        ->capture_default_str();
    generate->add_option("--seed", gen_cfg.seed, "Random seed")
        ->capture_default_str();
    generate->add_option("--tol", gen_cfg.tol, "Feasibility tolerance")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    try {
        if (resolve->parsed()) {
            return run_resolve(resolve_file, resolve_common, no_minimality);
        }
        if (optimize->parsed()) {
            return run_optimize(optimize_file, optimize_common, prune,
                                all_optima);
        }
        if (check->parsed()) {
            return run_check(check_file, check_common, check_limit);
        }
        if (generate->parsed()) {
            return run_generate(gen_cfg);
        }
    } catch (const aafre::SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const aafre::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aafre::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const aafre::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInputError;
}
