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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "aafre/tnorm.hpp"
#include "support/example1.hpp"

using aafre::TNormParam;
using aafre::max_compose;
using aafre::tnorm_eval;
using aafre::tnorm_residual;

TEST_SUITE("tnorm") {

TEST_CASE("annihilator and neutral element are exact") {
    const TNormParam p(2.0);
    CHECK(tnorm_eval(0.7, 0.0, p) == 0.0);
    CHECK(tnorm_eval(0.0, 0.7, p) == 0.0);
    CHECK(tnorm_eval(0.7, 1.0, p) == 0.7);
    CHECK(tnorm_eval(1.0, 0.7, p) == 0.7);
    CHECK(tnorm_eval(1.0, 1.0, p) == 1.0);
    CHECK(tnorm_eval(0.0, 0.0, p) == 0.0);
}

TEST_CASE("exponent 1 reduces to the product") {
    CHECK(tnorm_eval(0.5, 0.4, TNormParam(1.0)) ==
          doctest::Approx(0.2).epsilon(1e-12));

    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const TNormParam p(1.0);
    for (int s = 0; s < 2000; ++s) {
        const double a = unit(rng), x = unit(rng);
        CHECK(std::fabs(tnorm_eval(a, x, p) - a * x) <= 1e-12);
    }
}

TEST_CASE("interior value agrees with the residual cross-check") {
    // The residual of (0.8606, 0.4505) at exponent 3 is 0.4513, so evaluating
    // the t-norm back at that point lands on 0.4505.
    CHECK(std::fabs(tnorm_eval(0.8606, 0.4513, TNormParam(3.0)) - 0.4505) <=
          1e-3);
}

TEST_CASE("commutative bit-for-bit") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> lam(0.2, 20.0);
    for (int s = 0; s < 2000; ++s) {
        const double a = unit(rng), x = unit(rng);
        const TNormParam p(lam(rng));
        CHECK(tnorm_eval(a, x, p) == tnorm_eval(x, a, p));
    }
}

TEST_CASE("bounded by the minimum and monotone") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> lam(0.2, 20.0);
    for (int s = 0; s < 2000; ++s) {
        const double a = unit(rng), x = unit(rng);
        const TNormParam p(lam(rng));
        CHECK(tnorm_eval(a, x, p) <= std::min(a, x));

        const double a2 = a + (1.0 - a) * unit(rng);  // a2 >= a
        CHECK(tnorm_eval(a, x, p) <= tnorm_eval(a2, x, p));
    }
}

TEST_CASE("associative within 1e-12") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> mid(0.01, 0.99);
    std::uniform_real_distribution<double> lam(0.2, 20.0);
    for (int s = 0; s < 2000; ++s) {
        const double a = mid(rng), b = mid(rng), c = mid(rng);
        const TNormParam p(lam(rng));
        const double left = tnorm_eval(tnorm_eval(a, b, p), c, p);
        const double right = tnorm_eval(a, tnorm_eval(b, c, p), p);
        CHECK(std::fabs(left - right) <= 1e-12);
    }
}

TEST_CASE("large exponents approach the minimum") {
    std::mt19937_64 rng(45);
    std::uniform_real_distribution<double> mid(0.1, 0.9);
    const TNormParam p(200.0);
    for (int s = 0; s < 2000; ++s) {
        const double a = mid(rng), x = mid(rng);
        CHECK(std::fabs(tnorm_eval(a, x, p) - std::min(a, x)) <= 1e-2);
    }
}

TEST_CASE("strictly increasing in the second argument on (0,1]") {
    std::mt19937_64 rng(46);
    std::uniform_real_distribution<double> mid(0.05, 0.95);
    std::uniform_real_distribution<double> lam(0.5, 10.0);
    for (int s = 0; s < 1000; ++s) {
        const double a = mid(rng);
        const TNormParam p(lam(rng));
        double x1 = mid(rng), x2 = mid(rng);
        if (x1 == x2) continue;
        if (x1 > x2) std::swap(x1, x2);
        CHECK(tnorm_eval(a, x1, p) < tnorm_eval(a, x2, p));
    }
}

TEST_CASE("residual at equal arguments is exactly 1") {
    CHECK(tnorm_residual(0.6, 0.6, TNormParam(7.0)) == 1.0);
    CHECK(tnorm_residual(1.0, 1.0, TNormParam(0.5)) == 1.0);
}

TEST_CASE("residual reproduces reference values at exponent 3") {
    const TNormParam p(3.0);
    CHECK(std::fabs(tnorm_residual(0.8606, 0.4505, p) - 0.4513) <= 1e-4);
    CHECK(std::fabs(tnorm_residual(0.6430, 0.5723, p) - 0.6413) <= 1e-4);
}

TEST_CASE("residual domain errors") {
    const TNormParam p(2.0);
    CHECK_THROWS_AS(tnorm_residual(0.4, 0.5, p), aafre::DomainError);
    CHECK_THROWS_AS(tnorm_residual(0.4, 0.0, p), aafre::DomainError);
    CHECK_THROWS_AS(tnorm_residual(0.0, 0.0, p), aafre::DomainError);
}

TEST_CASE("residual inverts the t-norm to 1e-9") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> lam_hi(1.0, 20.0);
    std::uniform_real_distribution<double> lam_all(0.2, 20.0);

    // Exponents >= 1: the inverse is well conditioned everywhere, so the
    // right-hand side may be drawn uniformly below a.
    for (int s = 0; s < 600; ++s) {
        const double a = 0.01 + 0.99 * unit(rng);
        const double b = a * (0.01 + 0.99 * unit(rng));
        if (!(b > 0.0) || b > a) continue;
        const TNormParam p(lam_hi(rng));
        const double r = tnorm_residual(a, b, p);
        CHECK(std::fabs(tnorm_eval(a, r, p) - b) <= 1e-9);
    }

    // Full exponent range: draw b from the image of T(a, .) so that some
    // representable x can reproduce it. For exponents below 1 the map has
    // unbounded slope near x = 1 and right-hand sides off the representable
    // image grid cannot be matched by any double.
    for (int s = 0; s < 600; ++s) {
        const double a = 0.01 + 0.99 * unit(rng);
        const double x = 0.01 + 0.99 * unit(rng);
        const TNormParam p(lam_all(rng));
        const double b = tnorm_eval(a, x, p);
        if (!(b > 0.0) || b > a) continue;
        const double r = tnorm_residual(a, b, p);
        CHECK(std::fabs(tnorm_eval(a, r, p) - b) <= 1e-9);
    }

    // Stress region: tiny arguments with large exponents.
    std::uniform_real_distribution<double> tiny(1e-6, 1e-3);
    std::uniform_real_distribution<double> lam_stress(10.0, 20.0);
    for (int s = 0; s < 600; ++s) {
        double a = tiny(rng), b = tiny(rng);
        if (a < b) std::swap(a, b);
        const TNormParam p(lam_stress(rng));
        const double r = tnorm_residual(a, b, p);
        CHECK(std::fabs(tnorm_eval(a, r, p) - b) <= 1e-9);
    }
}

TEST_CASE("composition over a row") {
    const TNormParam p(3.0);
    const std::vector<double> row{0.1347, 0.0955, 0.0716, 0.0,
                                  0.8463, 0.0162, 0.0115, 0.1236};
    const aafre::Point x_bar{1.0, 0.5344, 0.8999, 1.0,
                             0.1347, 0.4197, 0.6413, 0.4729};
    CHECK(std::fabs(max_compose(row, x_bar, p) - 0.1347) <= 1e-4);

    const std::vector<double> zeros(8, 0.0);
    CHECK(max_compose(zeros, x_bar, p) == 0.0);

    const std::vector<double> ones(8, 1.0);
    CHECK(max_compose(ones, x_bar, p) ==
          *std::max_element(x_bar.begin(), x_bar.end()));

    const std::vector<double> shorter(7, 0.5);
    CHECK_THROWS_AS(max_compose(shorter, x_bar, p), aafre::DimensionError);
}

TEST_CASE("exponent validation") {
    CHECK_THROWS_AS(TNormParam(0.0), aafre::ValidationError);
    CHECK_THROWS_AS(TNormParam(-1.0), aafre::ValidationError);
    CHECK_THROWS_AS(TNormParam(std::numeric_limits<double>::infinity()),
                    aafre::ValidationError);
    CHECK_THROWS_AS(TNormParam(std::numeric_limits<double>::quiet_NaN()),
                    aafre::ValidationError);
}

}  // TEST_SUITE
