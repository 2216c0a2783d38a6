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

#include <stdexcept>
#include <string>

namespace aafre {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arguments outside the mathematical domain of an operation, e.g. asking for
/// the residual of (a, b) with b > a, for which no solution exists.
class DomainError : public Error {
    using Error::Error;
};

/// Vector or matrix lengths do not agree.
class DimensionError : public Error {
    using Error::Error;
};

/// A selection refers to a column outside the admissible index set.
class SelectionError : public Error {
    using Error::Error;
};

/// An equation has no admissible column at all.
class EmptySelectionError : public Error {
    using Error::Error;
};

/// An operation that requires a nonempty feasible region was given an
/// infeasible resolution.
class InfeasibleError : public Error {
    using Error::Error;
};

/// A configured size or enumeration limit was exceeded.
class SizeError : public Error {
    using Error::Error;
};

/// A parameter fit did not reach the required accuracy or is underdetermined.
class FitError : public Error {
    using Error::Error;
};

/// A document could not be parsed (malformed syntax, missing or mistyped key).
class ParseError : public Error {
    using Error::Error;
};

/// Well-formed input with values that violate the data model (ranges, shapes).
class ValidationError : public Error {
    using Error::Error;
};

}  // namespace aafre
