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

#include "aafre/instance.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace aafre {

TNormParam::TNormParam(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        std::ostringstream msg;
        msg << "t-norm exponent must be a finite positive real, got " << lambda;
        throw ValidationError(msg.str());
    }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    Matrix m;
    if (rows.empty()) return m;
    m.rows_ = rows.size();
    m.cols_ = rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) {
            std::ostringstream msg;
            msg << "matrix row " << i + 1 << " has " << rows[i].size()
                << " entries, expected " << m.cols_;
            throw DimensionError(msg.str());
        }
        m.data_.insert(m.data_.end(), rows[i].begin(), rows[i].end());
    }
    return m;
}

bool lex_less(const Selection& lhs, const Selection& rhs) noexcept {
    return std::lexicographical_compare(lhs.e.begin(), lhs.e.end(),
                                        rhs.e.begin(), rhs.e.end());
}

namespace {

void validate_instance(const Matrix& a, const std::vector<double>& b,
                       const std::vector<double>& c, double tol) {
    if (a.rows() == 0 || a.cols() == 0) {
        throw ValidationError("instance needs at least one equation and one variable");
    }
    if (b.size() != a.rows()) {
        std::ostringstream msg;
        msg << "right-hand side has " << b.size() << " entries, expected "
            << a.rows();
        throw ValidationError(msg.str());
    }
    if (c.size() != a.cols()) {
        std::ostringstream msg;
        msg << "cost vector has " << c.size() << " entries, expected "
            << a.cols();
        throw ValidationError(msg.str());
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!is_unit_value(a(i, j))) {
                std::ostringstream msg;
                msg << "A entry at row " << i + 1 << ", column " << j + 1
                    << " is " << a(i, j) << ", outside [0, 1]";
                throw ValidationError(msg.str());
            }
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!is_unit_value(b[i])) {
            std::ostringstream msg;
            msg << "b entry at row " << i + 1 << " is " << b[i]
                << ", outside [0, 1]";
            throw ValidationError(msg.str());
        }
    }
    for (double cj : c) {
        if (!std::isfinite(cj)) {
            throw ValidationError("cost vector entries must be finite");
        }
    }
    if (!std::isfinite(tol) || tol <= 0.0) {
        std::ostringstream msg;
        msg << "tolerance must be a finite positive real, got " << tol;
        throw ValidationError(msg.str());
    }
}

}  // namespace

Instance::Instance(Matrix a, std::vector<double> b, std::vector<double> c,
                   TNormParam p, double tol)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), p_(p), tol_(tol) {
    validate_instance(a_, b_, c_, tol_);
}

Instance Instance::with_lambda(double lambda) const {
    return Instance(a_, b_, c_, TNormParam(lambda), tol_);
}

Instance Instance::with_tol(double tol) const {
    return Instance(a_, b_, c_, p_, tol);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot product over vectors of different length");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) sum += a[j] * b[j];
    return sum;
}

}  // namespace aafre
