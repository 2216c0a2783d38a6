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

#include "aafre/tnorm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

namespace aafre {

namespace {

// log(exp(u) + exp(v)), symmetric in its arguments bit-for-bit.
double log_sum_exp(double u, double v) {
    const double hi = std::max(u, v);
    const double lo = std::min(u, v);
    if (std::isinf(hi) && hi < 0.0) return hi;  // both terms vanish
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace

double tnorm_eval(double a, double x, TNormParam p) noexcept {
    assert(is_unit_value(a) && is_unit_value(x));
    if (a == 0.0 || x == 0.0) return 0.0;
    if (a == 1.0) return x;  // neutral element, exact
    if (x == 1.0) return a;

    // Interior case: both arguments in (0,1), so -ln of each is in (0, inf).
    // The power sum (-ln a)^lambda + (-ln x)^lambda lives entirely in the log
    // domain; only its lambda-th root is exponentiated back.
    const double lam = p.lambda();
    const double u = lam * std::log(-std::log(a));
    const double v = lam * std::log(-std::log(x));
    const double root = std::exp(log_sum_exp(u, v) / lam);
    // The result can drift one ulp above the min(a, x) bound for large
    // exponents; clamp back into the codomain.
    return std::clamp(std::exp(-root), 0.0, std::min(a, x));
}

double tnorm_residual(double a, double b, TNormParam p) {
    if (!(b > 0.0)) {
        std::ostringstream msg;
        msg << "residual undefined for right-hand side " << b
            << "; the zero case has no unique preimage";
        throw DomainError(msg.str());
    }
    if (b > a) {
        std::ostringstream msg;
        msg << "no solution: residual requires a >= b, got a = " << a
            << ", b = " << b;
        throw DomainError(msg.str());
    }
    assert(is_unit_value(a) && is_unit_value(b));
    if (a == b) return 1.0;
    if (a == 1.0) return b;  // (-ln a)^lambda term vanishes exactly

    // 0 < b < a < 1. The difference of powers is
    //   exp(u) - exp(v),  u = lambda*ln(-ln b),  v = lambda*ln(-ln a),  u > v,
    // evaluated as exp(u + log(-expm1(v - u))). The exponent gap v - u is
    // itself produced cancellation-free from log1p of the relative argument
    // gap, which keeps the residual accurate when b is close to a.
    const double lam = p.lambda();
    const double neg_log_b = -std::log(b);
    const double u = lam * std::log(neg_log_b);
    const double log_ratio = std::log1p((b - a) / a);  // ln(b/a), negative
    const double v_minus_u = lam * std::log1p(log_ratio / neg_log_b);
    const double d = u + std::log(-std::expm1(v_minus_u));
    const double root = std::exp(d / lam);
    return std::clamp(std::exp(-root), 0.0, 1.0);
}

double max_compose(std::span<const double> row, std::span<const double> x,
                   TNormParam p) {
    if (row.size() != x.size() || row.empty()) {
        std::ostringstream msg;
        msg << "composition over mismatched lengths " << row.size() << " and "
            << x.size();
        throw DimensionError(msg.str());
    }
    double best = 0.0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        best = std::max(best, tnorm_eval(row[j], x[j], p));
    }
    return best;
}

}  // namespace aafre
