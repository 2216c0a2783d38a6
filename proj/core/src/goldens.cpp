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

#include "aafre/goldens.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aafre/instance_io.hpp"
#include "aafre/optimizer.hpp"
#include "aafre/resolution.hpp"

namespace aafre::goldens {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kInstanceSuffix = ".instance.json";
constexpr const char* kExpectedSuffix = ".expected.json";

std::string read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open corpus file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Expectation parse_expectation(const std::string& field, const json& body,
                              const std::string& case_name) {
    if (!body.is_object() || !body.contains("value")) {
        throw ParseError("expectation '" + field + "' of case '" + case_name +
                         "' must be an object with a 'value'");
    }
    Expectation e;
    e.field = field;
    if (!body.contains("note") || !body["note"].is_string() ||
        body["note"].get<std::string>().empty()) {
        throw ValidationError("expectation '" + field + "' of case '" +
                              case_name + "' is missing its source note");
    }
    e.note = body["note"].get<std::string>();
    if (body.contains("tol")) e.tol = body["tol"].get<double>();

    const json& v = body["value"];
    if (field == "feasible") {
        e.bool_value = v.get<bool>();
    } else if (field == "z_star" || field == "z1") {
        e.number_value = v.get<double>();
    } else if (field == "unreduced_count" || field == "empty_equation") {
        e.count_value = v.get<std::uint64_t>();
    } else if (field == "x_bar" || field == "x_e_star" || field == "x_star") {
        e.vector_value = v.get<std::vector<double>>();
    } else if (field == "e_star") {
        e.index_vector = v.get<std::vector<int>>();
    } else if (field == "index_sets") {
        e.index_table = v.get<std::vector<std::vector<int>>>();
    } else if (field == "kept_contains") {
        e.point_set = v.get<std::vector<std::vector<double>>>();
    } else {
        throw ParseError("unknown expectation field '" + field + "' in case '" +
                         case_name + "'");
    }
    return e;
}

void check_vector(const std::string& field, const Point& actual,
                  const std::vector<double>& expected, double tol,
                  std::vector<std::string>& failures) {
    if (actual.size() != expected.size()) {
        std::ostringstream msg;
        msg << field << " has " << actual.size() << " components, expected "
            << expected.size();
        failures.push_back(msg.str());
        return;
    }
    for (std::size_t j = 0; j < actual.size(); ++j) {
        if (std::fabs(actual[j] - expected[j]) > tol) {
            std::ostringstream msg;
            msg << field << "[" << j + 1 << "] = " << actual[j]
                << " differs from " << expected[j] << " by more than " << tol;
            failures.push_back(msg.str());
        }
    }
}

}  // namespace

bool GoldenReport::all_passed() const noexcept {
    return std::all_of(cases.begin(), cases.end(),
                       [](const CaseResult& c) { return c.passed; });
}

std::vector<GoldenCase> load_corpus(const std::string& dir) {
    std::vector<fs::path> instance_files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.size() > std::string(kInstanceSuffix).size() &&
            name.ends_with(kInstanceSuffix)) {
            instance_files.push_back(entry.path());
        }
    }
    std::sort(instance_files.begin(), instance_files.end());

    std::vector<GoldenCase> corpus;
    for (const fs::path& inst_path : instance_files) {
        std::string name = inst_path.filename().string();
        name.resize(name.size() - std::string(kInstanceSuffix).size());

        fs::path expected_path = inst_path.parent_path() / (name + kExpectedSuffix);
        if (!fs::exists(expected_path)) {
            throw ParseError("case '" + name + "' has no expectation document");
        }

        GoldenCase c{name, io::parse_instance(read_file(inst_path)), {}};
        json doc;
        try {
            doc = json::parse(read_file(expected_path));
        } catch (const json::parse_error& e) {
            throw ParseError("malformed expectations for case '" + name +
                             "': " + e.what());
        }
        for (const auto& [key, body] : doc.items()) {
            if (key == "note") continue;  // case-level description
            c.expects.push_back(parse_expectation(key, body, name));
        }
        corpus.push_back(std::move(c));
    }
    return corpus;
}

CaseResult run_case(const GoldenCase& c) {
    CaseResult result{c.name, false, {}};
    const OptimizationReport report = solve(c.instance);
    const IndexSets sets = index_sets(c.instance);

    for (const Expectation& e : c.expects) {
        if (e.field == "feasible") {
            if (report.feasible != *e.bool_value) {
                result.failures.push_back(
                    std::string("feasible = ") +
                    (report.feasible ? "true" : "false") + ", expected " +
                    (*e.bool_value ? "true" : "false"));
            }
        } else if (e.field == "z_star") {
            if (std::fabs(report.z_star - *e.number_value) > e.tol) {
                std::ostringstream msg;
                msg << "z_star = " << report.z_star << " differs from "
                    << *e.number_value << " by more than " << e.tol;
                result.failures.push_back(msg.str());
            }
        } else if (e.field == "z1") {
            if (std::fabs(report.z1 - *e.number_value) > e.tol) {
                std::ostringstream msg;
                msg << "z1 = " << report.z1 << " differs from "
                    << *e.number_value << " by more than " << e.tol;
                result.failures.push_back(msg.str());
            }
        } else if (e.field == "unreduced_count") {
            if (report.resolution.unreduced_count != *e.count_value) {
                std::ostringstream msg;
                msg << "unreduced_count = " << report.resolution.unreduced_count
                    << ", expected " << *e.count_value;
                result.failures.push_back(msg.str());
            }
        } else if (e.field == "empty_equation") {
            if (!report.resolution.empty_equation ||
                *report.resolution.empty_equation + 1 != *e.count_value) {
                std::ostringstream msg;
                msg << "empty_equation missing or not " << *e.count_value;
                result.failures.push_back(msg.str());
            }
        } else if (e.field == "x_bar") {
            check_vector("x_bar", report.resolution.x_bar, *e.vector_value,
                         e.tol, result.failures);
        } else if (e.field == "x_e_star") {
            check_vector("x_e_star", report.x_e_star, *e.vector_value, e.tol,
                         result.failures);
        } else if (e.field == "x_star") {
            check_vector("x_star", report.x_star, *e.vector_value, e.tol,
                         result.failures);
        } else if (e.field == "e_star") {
            std::vector<int> actual;
            for (int col : report.e_star.e) actual.push_back(col + 1);
            if (actual != *e.index_vector) {
                result.failures.push_back("e_star differs from expectation");
            }
        } else if (e.field == "index_sets") {
            std::vector<std::vector<int>> actual;
            for (const auto& ji : sets.sets) {
                std::vector<int> one;
                for (int col : ji) one.push_back(col + 1);
                actual.push_back(std::move(one));
            }
            if (actual != *e.index_table) {
                result.failures.push_back("index_sets differ from expectation");
            }
        } else if (e.field == "kept_contains") {
            const ResolutionReport res = feasible_candidates(c.instance);
            for (const auto& want : *e.point_set) {
                const bool found = std::any_of(
                    res.kept.begin(), res.kept.end(),
                    [&](const KeptCandidate& k) {
                        if (k.x.size() != want.size()) return false;
                        for (std::size_t j = 0; j < want.size(); ++j) {
                            if (std::fabs(k.x[j] - want[j]) > e.tol) {
                                return false;
                            }
                        }
                        return true;
                    });
                if (!found) {
                    result.failures.push_back(
                        "kept candidates miss an expected point");
                }
            }
        }
    }
    result.passed = result.failures.empty();
    return result;
}

GoldenReport run_goldens(const std::string& dir) {
    GoldenReport report;
    for (const GoldenCase& c : load_corpus(dir)) {
        report.cases.push_back(run_case(c));
    }
    return report;
}

}  // namespace aafre::goldens
