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

#include <span>

#include "aafre/instance.hpp"

namespace aafre {

/// Aczel-Alsina t-norm
///
///   T(a, x) = exp(-[(-ln a)^lambda + (-ln x)^lambda]^(1/lambda))
///
/// with the annihilator convention T(a, 0) = T(0, x) = 0. The neutral cases
/// a = 1 and x = 1 return the other argument exactly, before any transform.
/// The interior case evaluates the power sum in the log domain (log-sum-exp of
/// lambda*ln(-ln a) and lambda*ln(-ln x)), so large lambda and arguments near
/// 0 or 1 neither overflow nor underflow. The result is clamped into [0,1].
///
/// Inputs must lie in [0,1]; commutative bit-for-bit in its two arguments.
double tnorm_eval(double a, double x, TNormParam p) noexcept;

/// Partial inverse of the t-norm: the unique x with tnorm_eval(a, x, p) == b,
/// defined for a >= b > 0:
///
///   x = exp(-[(-ln b)^lambda - (-ln a)^lambda]^(1/lambda))
///
/// Returns exactly 1 when a == b. The difference of powers is evaluated in
/// the log domain with log1p/expm1 so that nearly equal arguments keep their
/// accuracy. Throws DomainError when b > a (the equation has no solution) or
/// b <= 0 (the zero right-hand side is a case the caller must resolve).
double tnorm_residual(double a, double b, TNormParam p);

/// max_j tnorm_eval(row[j], x[j], p).
/// Throws DimensionError when row and x differ in length or are empty.
double max_compose(std::span<const double> row, std::span<const double> x,
                   TNormParam p);

}  // namespace aafre
