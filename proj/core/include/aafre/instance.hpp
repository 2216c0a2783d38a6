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

#include <cstddef>
#include <span>
#include <vector>

#include "aafre/errors.hpp"

namespace aafre {

/// A point of the unit hypercube [0,1]^n; candidate or confirmed solution.
using Point = std::vector<double>;

/// True when v is a membership degree, i.e. lies in [0,1]. NaN is rejected.
constexpr bool is_unit_value(double v) noexcept { return v >= 0.0 && v <= 1.0; }

/// Exponent of the Aczel-Alsina t-norm family. Must be finite and strictly
/// positive; the limits lambda -> 0 (drastic product) and lambda -> infinity
/// (minimum) are asymptotic properties, not runnable parameter values.
class TNormParam {
public:
    explicit TNormParam(double lambda);

    double lambda() const noexcept { return lambda_; }

private:
    double lambda_;
};

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);

    /// Builds from nested vectors; throws DimensionError when rows are ragged.
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }
    double& operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// One admissible column per equation, 0-based. e[i] must index a column j
/// with a[i][j] >= b[i].
struct Selection {
    std::vector<int> e;

    friend bool operator==(const Selection&, const Selection&) = default;
};

/// Lexicographic order on selection vectors; the deterministic tie-breaker
/// used throughout enumeration and optimization.
bool lex_less(const Selection& lhs, const Selection& rhs) noexcept;

/// Immutable problem data: minimize c.x subject to
/// max_j T(a_ij, x_j) = b_i for every equation i, x in [0,1]^n.
///
/// The constructor validates shapes and ranges (entries of A and b must lie in
/// [0,1], tol must be positive) and throws ValidationError otherwise. All
/// derived computations treat an Instance as read-only, so a constructed
/// Instance may be shared freely across threads.
class Instance {
public:
    Instance(Matrix a, std::vector<double> b, std::vector<double> c,
             TNormParam p, double tol = kDefaultTol);

    static constexpr double kDefaultTol = 1e-9;

    const Matrix& A() const noexcept { return a_; }
    const std::vector<double>& b() const noexcept { return b_; }
    const std::vector<double>& c() const noexcept { return c_; }
    TNormParam tnorm() const noexcept { return p_; }
    double tol() const noexcept { return tol_; }

    std::size_t equations() const noexcept { return a_.rows(); }
    std::size_t variables() const noexcept { return a_.cols(); }

    /// Copies with a replaced t-norm exponent (CLI override).
    Instance with_lambda(double lambda) const;
    /// Copies with a replaced feasibility tolerance.
    Instance with_tol(double tol) const;

private:
    Matrix a_;
    std::vector<double> b_;
    std::vector<double> c_;
    TNormParam p_;
    double tol_;
};

/// Plain dot product; both spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace aafre
