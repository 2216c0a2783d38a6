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

#include "aafre/instance_io.hpp"

#include <cstdio>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace aafre::io {

using nlohmann::json;

namespace {

json require_key(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw ParseError(std::string("missing key '") + key + "'");
    }
    return doc.at(key);
}

double require_number(const json& doc, const char* key) {
    const json v = require_key(doc, key);
    if (!v.is_number()) {
        throw ParseError(std::string("key '") + key + "' must be a number");
    }
    return v.get<double>();
}

std::vector<double> require_number_array(const json& v, const char* key) {
    if (!v.is_array()) {
        throw ParseError(std::string("key '") + key + "' must be an array");
    }
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& item : v) {
        if (!item.is_number()) {
            throw ParseError(std::string("key '") + key +
                             "' must contain numbers only");
        }
        out.push_back(item.get<double>());
    }
    return out;
}

json point_to_json(const Point& p) { return json(p); }

json selection_to_json(const Selection& s) {
    json arr = json::array();
    for (int col : s.e) arr.push_back(col + 1);  // 1-based in documents
    return arr;
}

Selection selection_from_json(const json& arr, const char* key) {
    if (!arr.is_array()) {
        throw ParseError(std::string("key '") + key + "' must be an array");
    }
    Selection s;
    for (const auto& item : arr) {
        if (!item.is_number_integer()) {
            throw ParseError(std::string("key '") + key +
                             "' must contain integers only");
        }
        s.e.push_back(item.get<int>() - 1);
    }
    return s;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "text") return OutputFormat::text;
    if (name == "machine") return OutputFormat::machine;
    throw ParseError("unknown output format '" + std::string(name) +
                     "' (expected 'text' or 'machine')");
}

Instance parse_instance(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("instance document must be a JSON object");
    }

    const double lambda = require_number(doc, "lambda");

    const json a_json = require_key(doc, "A");
    if (!a_json.is_array() || a_json.empty()) {
        throw ParseError("key 'A' must be a nonempty array of rows");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(a_json.size());
    for (std::size_t i = 0; i < a_json.size(); ++i) {
        if (!a_json[i].is_array()) {
            std::ostringstream msg;
            msg << "row " << i + 1 << " of 'A' must be an array";
            throw ParseError(msg.str());
        }
        rows.push_back(require_number_array(a_json[i], "A"));
        if (rows.back().size() != rows.front().size()) {
            std::ostringstream msg;
            msg << "row " << i + 1 << " of 'A' has " << rows.back().size()
                << " entries, expected " << rows.front().size();
            throw ValidationError(msg.str());
        }
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!is_unit_value(rows[i][j])) {
                std::ostringstream msg;
                msg << "A entry at row " << i + 1 << ", column " << j + 1
                    << " is " << rows[i][j] << ", outside [0, 1]";
                throw ValidationError(msg.str());
            }
        }
    }

    std::vector<double> b = require_number_array(require_key(doc, "b"), "b");
    std::vector<double> c = require_number_array(require_key(doc, "c"), "c");
    double tol = Instance::kDefaultTol;
    if (doc.contains("tol")) tol = require_number(doc, "tol");

    // Instance's own validation covers the remaining shape and range rules.
    return Instance(Matrix::from_rows(rows), std::move(b), std::move(c),
                    TNormParam(lambda), tol);
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["lambda"] = inst.tnorm().lambda();
    json rows = json::array();
    for (std::size_t i = 0; i < inst.equations(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < inst.variables(); ++j) {
            row.push_back(inst.A()(i, j));
        }
        rows.push_back(std::move(row));
    }
    doc["A"] = std::move(rows);
    doc["b"] = inst.b();
    doc["c"] = inst.c();
    doc["tol"] = inst.tol();
    return dump(doc);
}

std::string format_point(const Point& p, int decimals) {
    std::ostringstream out;
    out << "[";
    char buf[64];
    for (std::size_t j = 0; j < p.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%.*f", decimals, p[j]);
        if (j) out << ", ";
        out << buf;
    }
    out << "]";
    return out.str();
}

namespace {

std::string format_selection(const Selection& s) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < s.e.size(); ++i) {
        if (i) out << ", ";
        out << s.e[i] + 1;
    }
    out << "]";
    return out.str();
}

json resolution_to_json(const ResolutionReport& r) {
    json doc;
    doc["feasible"] = r.feasible;
    doc["x_bar"] = point_to_json(r.x_bar);
    doc["unreduced_count"] = r.unreduced_count;
    doc["examined"] = r.examined;
    if (r.empty_equation) {
        doc["empty_equation"] = *r.empty_equation + 1;
    } else {
        doc["empty_equation"] = nullptr;
    }
    json kept = json::array();
    for (const KeptCandidate& k : r.kept) {
        json entry;
        entry["x"] = point_to_json(k.x);
        entry["e"] = selection_to_json(k.e);
        kept.push_back(std::move(entry));
    }
    doc["kept"] = std::move(kept);
    return doc;
}

ResolutionReport resolution_from_json(const json& doc) {
    ResolutionReport r;
    r.feasible = require_key(doc, "feasible").get<bool>();
    r.x_bar = require_number_array(require_key(doc, "x_bar"), "x_bar");
    r.unreduced_count = require_key(doc, "unreduced_count").get<std::uint64_t>();
    r.examined = require_key(doc, "examined").get<std::uint64_t>();
    if (doc.contains("empty_equation") && !doc["empty_equation"].is_null()) {
        r.empty_equation = doc["empty_equation"].get<std::size_t>() - 1;
    }
    for (const auto& entry : require_key(doc, "kept")) {
        KeptCandidate k;
        k.x = require_number_array(require_key(entry, "x"), "kept.x");
        k.e = selection_from_json(require_key(entry, "e"), "kept.e");
        r.kept.push_back(std::move(k));
    }
    return r;
}

}  // namespace

std::string emit_report(const ResolutionReport& report, OutputFormat fmt) {
    if (fmt == OutputFormat::machine) {
        return dump(resolution_to_json(report));
    }
    std::ostringstream out;
    out << "status: " << (report.feasible ? "feasible" : "infeasible") << "\n";
    out << "X_bar: " << format_point(report.x_bar) << "\n";
    if (report.empty_equation) {
        out << "equation " << *report.empty_equation + 1
            << " has no admissible column\n";
    }
    out << "selections: " << report.unreduced_count << " total, "
        << report.examined << " examined\n";
    if (report.feasible) {
        out << "kept candidates: " << report.kept.size() << "\n";
        constexpr std::size_t kMaxListed = 24;
        for (std::size_t k = 0; k < report.kept.size() && k < kMaxListed; ++k) {
            out << "  " << format_point(report.kept[k].x) << " via e = "
                << format_selection(report.kept[k].e) << "\n";
        }
        if (report.kept.size() > kMaxListed) {
            out << "  ... (" << report.kept.size() - kMaxListed << " more)\n";
        }
    }
    return out.str();
}

std::string emit_report(const OptimizationReport& report, OutputFormat fmt) {
    if (fmt == OutputFormat::machine) {
        json doc;
        doc["feasible"] = report.feasible;
        doc["x_star"] = point_to_json(report.x_star);
        doc["z_star"] = report.z_star;
        doc["e_star"] = selection_to_json(report.e_star);
        doc["x_e_star"] = point_to_json(report.x_e_star);
        doc["z1"] = report.z1;
        doc["candidates_examined"] = report.candidates_examined;
        doc["candidates_pruned"] = report.candidates_pruned;
        json tied = json::array();
        for (const Selection& s : report.tied_optima) {
            tied.push_back(selection_to_json(s));
        }
        doc["tied_optima"] = std::move(tied);
        doc["resolution"] = resolution_to_json(report.resolution);
        return dump(doc);
    }
    std::ostringstream out;
    out << "status: " << (report.feasible ? "optimal" : "infeasible") << "\n";
    out << "X_bar: " << format_point(report.resolution.x_bar) << "\n";
    if (report.resolution.empty_equation) {
        out << "equation " << *report.resolution.empty_equation + 1
            << " has no admissible column\n";
    }
    out << "selections: " << report.resolution.unreduced_count << " total, "
        << report.candidates_examined << " examined, "
        << report.candidates_pruned << " pruned\n";
    if (report.feasible) {
        out << "e*: " << format_selection(report.e_star) << "\n";
        out << "X(e*): " << format_point(report.x_e_star) << "\n";
        out << "x*: " << format_point(report.x_star) << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.4f", report.z1);
        out << "Z1 = " << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.4f", report.z_star);
        out << "Z* = " << buf << "\n";
        if (!report.tied_optima.empty()) {
            out << "tied optimal selections:\n";
            for (const Selection& s : report.tied_optima) {
                out << "  " << format_selection(s) << "\n";
            }
        }
    }
    return out.str();
}

ResolutionReport parse_resolution_report(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    return resolution_from_json(doc);
}

OptimizationReport parse_optimization_report(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
    OptimizationReport r;
    r.feasible = require_key(doc, "feasible").get<bool>();
    r.x_star = require_number_array(require_key(doc, "x_star"), "x_star");
    r.z_star = require_key(doc, "z_star").get<double>();
    r.e_star = selection_from_json(require_key(doc, "e_star"), "e_star");
    r.x_e_star =
        require_number_array(require_key(doc, "x_e_star"), "x_e_star");
    r.z1 = require_key(doc, "z1").get<double>();
    r.candidates_examined =
        require_key(doc, "candidates_examined").get<std::uint64_t>();
    r.candidates_pruned =
        require_key(doc, "candidates_pruned").get<std::uint64_t>();
    for (const auto& s : require_key(doc, "tied_optima")) {
        r.tied_optima.push_back(selection_from_json(s, "tied_optima"));
    }
    r.resolution = resolution_from_json(require_key(doc, "resolution"));
    return r;
}

}  // namespace aafre::io
