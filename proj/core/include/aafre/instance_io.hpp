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

#include <string>
#include <string_view>

#include "aafre/optimizer.hpp"

// Instance documents are JSON objects with keys:
//   lambda : number > 0
//   A      : array of m arrays of n numbers in [0,1]
//   b      : array of m numbers in [0,1]
//   c      : array of n numbers (any sign)
//   tol    : optional number > 0 (default 1e-9)
//
// Machine reports round-trip losslessly: every number re-parses to the same
// double. Column and equation indices are 1-based in documents and text.

namespace aafre::io {

enum class OutputFormat { text, machine };

/// Maps "text"/"machine" to the enum; throws ParseError otherwise.
OutputFormat parse_format(std::string_view name);

/// Parses and validates an instance document. ParseError carries the
/// offending key for malformed documents; ValidationError names the row and
/// column of a range or shape violation.
Instance parse_instance(const std::string& text);

/// Serializes an instance back to the document format above.
std::string instance_to_json(const Instance& inst);

std::string emit_report(const ResolutionReport& report, OutputFormat fmt);
std::string emit_report(const OptimizationReport& report, OutputFormat fmt);

ResolutionReport parse_resolution_report(const std::string& text);
OptimizationReport parse_optimization_report(const std::string& text);

/// "[0.1347, 0.4505, ...]" with fixed decimals; the text-report convention.
std::string format_point(const Point& p, int decimals = 4);

}  // namespace aafre::io
