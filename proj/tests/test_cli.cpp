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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "aafre/instance_io.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stdout+stderr captured through a temp file.
RunResult run_cli(const std::string& args) {
    const std::string out_path =
        std::string(AAFRE_BUILD_DIR) + "/cli_test_output.txt";
    const std::string cmd =
        std::string(AAFRE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    result.output = buf.str();
    return result;
}

std::string golden(const std::string& name) {
    return std::string(AAFRE_GOLDEN_DIR) + "/" + name;
}

std::string data(const std::string& name) {
    return std::string(AAFRE_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("optimize solves the reference instance") {
    const RunResult r = run_cli("optimize " + golden("example1.instance.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status: optimal") != std::string::npos);
    CHECK(r.output.find("e*: [1, 1, 7, 1, 1, 1]") != std::string::npos);
    CHECK(r.output.find("Z* = ") != std::string::npos);
}

TEST_CASE("optimize machine output parses back") {
    const RunResult r = run_cli("optimize --format machine " +
                                golden("example1.instance.json"));
    CHECK(r.exit_code == 0);
    const auto report = aafre::io::parse_optimization_report(r.output);
    CHECK(report.feasible);
    CHECK(std::fabs(report.z_star - (-12.4057)) <= 5e-3);
    CHECK(report.resolution.unreduced_count == 2400);
}

TEST_CASE("resolve reports candidates") {
    const RunResult r = run_cli("resolve " + golden("example1.instance.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("status: feasible") != std::string::npos);
    CHECK(r.output.find("kept candidates:") != std::string::npos);
}

TEST_CASE("infeasible instances exit 1") {
    const RunResult r =
        run_cli("optimize " + golden("empty-region.instance.json"));
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("infeasible") != std::string::npos);
    CHECK(r.output.find("X_bar: [1.0000]") != std::string::npos);
}

TEST_CASE("input errors exit 2") {
    CHECK(run_cli("optimize " + data("bad_missing_b.json")).exit_code == 2);
    CHECK(run_cli("optimize " + data("bad_range.json")).exit_code == 2);
    CHECK(run_cli("optimize " + data("no_such_file.json")).exit_code == 2);
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("optimize --lambda -1 " + golden("example1.instance.json"))
              .exit_code == 2);
}

TEST_CASE("candidate limits exit 3") {
    const RunResult r = run_cli("optimize --max-candidates 10 " +
                                golden("example1.instance.json"));
    CHECK(r.exit_code == 3);

    const RunResult check_limited =
        run_cli("check --limit 100 " + golden("example1.instance.json"));
    CHECK(check_limited.exit_code == 3);
}

TEST_CASE("check validates against the exhaustive reference") {
    const RunResult r = run_cli("check " + golden("example1.instance.json"));
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("check: OK") != std::string::npos);
}

TEST_CASE("generate emits a solvable instance that optimize accepts") {
    const RunResult gen =
        run_cli("generate --m 3 --n 4 --density 0.8 --lambda 2.5 --seed 11");
    CHECK(gen.exit_code == 0);

    const std::string path =
        std::string(AAFRE_BUILD_DIR) + "/generated_instance.json";
    {
        std::ofstream out(path);
        out << gen.output;
    }

    const RunResult opt = run_cli("optimize " + path);
    CHECK(opt.exit_code == 0);
    CHECK(opt.output.find("status: optimal") != std::string::npos);

    const RunResult chk = run_cli("check " + path);
    CHECK(chk.exit_code == 0);
}

TEST_CASE("minimality filter can be disabled") {
    const RunResult filtered =
        run_cli("resolve --format machine " + golden("example1.instance.json"));
    const RunResult full = run_cli("resolve --format machine --no-minimality-filter " +
                                   golden("example1.instance.json"));
    const auto a = aafre::io::parse_resolution_report(filtered.output);
    const auto b = aafre::io::parse_resolution_report(full.output);
    CHECK(a.kept.size() == 4);    // minimal solutions only
    CHECK(b.kept.size() == 216);  // every candidate below the greatest solution
}

TEST_CASE("tolerance override changes the verdict") {
    const RunResult strict =
        run_cli("optimize " + golden("conflict-infeasible.instance.json"));
    CHECK(strict.exit_code == 1);
    const RunResult loose = run_cli(
        "optimize --tol 0.5 " + golden("conflict-infeasible.instance.json"));
    CHECK(loose.exit_code == 0);
}

TEST_CASE("lambda override changes the solution") {
    const RunResult base =
        run_cli("optimize --format machine " + golden("lambda1-product.instance.json"));
    const RunResult overridden = run_cli(
        "optimize --format machine --lambda 4 " +
        golden("lambda1-product.instance.json"));
    CHECK(base.exit_code == 0);
    CHECK(overridden.exit_code == 0);
    const auto a = aafre::io::parse_optimization_report(base.output);
    const auto b = aafre::io::parse_optimization_report(overridden.output);
    CHECK(a.z_star != b.z_star);
}

TEST_CASE("pruned and parallel runs match the plain one") {
    const RunResult plain = run_cli("optimize --format machine " +
                                    golden("example1.instance.json"));
    const RunResult pruned = run_cli("optimize --format machine --prune " +
                                     golden("example1.instance.json"));
    const RunResult parallel = run_cli(
        "optimize --format machine --parallel 4 " +
        golden("example1.instance.json"));
    const auto a = aafre::io::parse_optimization_report(plain.output);
    const auto b = aafre::io::parse_optimization_report(pruned.output);
    const auto c = aafre::io::parse_optimization_report(parallel.output);
    CHECK(a.z_star == b.z_star);
    CHECK(a.z_star == c.z_star);
    CHECK(a.e_star == b.e_star);
    CHECK(a.e_star == c.e_star);
}

}  // TEST_SUITE
