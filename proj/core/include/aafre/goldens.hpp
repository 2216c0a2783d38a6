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
#include <optional>
#include <string>
#include <vector>

#include "aafre/instance.hpp"

// Golden regression corpus: a directory of paired documents
//   <name>.instance.json   - an instance document (see instance_io.hpp)
//   <name>.expected.json   - expected solver outputs with per-field
//                            tolerances; every field carries a "note" string
//                            recording where its value comes from.
//
// Supported expectation fields: feasible, index_sets, x_bar, unreduced_count,
// e_star, x_e_star, x_star, z_star, z1, empty_equation, kept_contains.
// Indices are 1-based in the documents.

namespace aafre::goldens {

struct Expectation {
    std::string field;
    std::string note;
    double tol = 0.0;
    std::optional<bool> bool_value;
    std::optional<double> number_value;
    std::optional<std::uint64_t> count_value;
    std::optional<std::vector<double>> vector_value;
    std::optional<std::vector<int>> index_vector;           // 1-based
    std::optional<std::vector<std::vector<int>>> index_table;  // 1-based
    std::optional<std::vector<std::vector<double>>> point_set;
};

struct GoldenCase {
    std::string name;
    Instance instance;
    std::vector<Expectation> expects;
};

struct CaseResult {
    std::string name;
    bool passed = false;
    std::vector<std::string> failures;
};

struct GoldenReport {
    std::vector<CaseResult> cases;

    bool all_passed() const noexcept;
};

/// Loads every *.instance.json / *.expected.json pair under `dir`, sorted by
/// name. Throws ParseError/ValidationError on malformed corpus files,
/// including expectation values missing their "note".
std::vector<GoldenCase> load_corpus(const std::string& dir);

/// Solves one case and evaluates its expectations.
CaseResult run_case(const GoldenCase& c);

/// Runs the whole corpus; failures are recorded per case, never thrown.
GoldenReport run_goldens(const std::string& dir);

}  // namespace aafre::goldens
