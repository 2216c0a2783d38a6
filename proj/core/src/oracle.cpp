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

#include "aafre/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <utility>

#include "aafre/resolution.hpp"
#include "aafre/tnorm.hpp"

namespace aafre::oracle {

namespace {

// Direct check of every equation; no greatest-solution shortcut anywhere.
bool direct_membership(const Instance& inst, const Point& x) {
    for (std::size_t i = 0; i < inst.equations(); ++i) {
        const double lhs = max_compose(inst.A().row(i), x, inst.tnorm());
        if (std::fabs(lhs - inst.b()[i]) > inst.tol()) return false;
    }
    return true;
}

}  // namespace

namespace {

// A draw is accepted only when every admissible residual is numerically
// stable: perturbing the right-hand side by a couple of ulps must move the
// residual by less than 1e-11. Rounded right-hand sides combined with nearly
// flat equations (large exponents, coefficients close to b) would otherwise
// leave the minimal candidates fuzzy on the variable scale, which the
// reference-agreement tests cannot tolerate.
bool residuals_stable(const Matrix& a, const std::vector<double>& b,
                      TNormParam p) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (b[i] <= 0.0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) < b[i]) continue;
            const double r = tnorm_residual(a(i, j), b[i], p);
            const double bumped = std::min(b[i] * (1.0 + 4e-16), a(i, j));
            const double r_bumped = tnorm_residual(a(i, j), bumped, p);
            if (std::fabs(r_bumped - r) > 1e-11) return false;
        }
    }
    return true;
}

}  // namespace

Instance generate_feasible(const GeneratorConfig& cfg) {
    if (cfg.equations < 1 || cfg.variables < 1) {
        throw ValidationError("generator needs at least one equation and one variable");
    }
    if (!(cfg.density > 0.0) || cfg.density > 1.0) {
        std::ostringstream msg;
        msg << "generator density must lie in (0, 1], got " << cfg.density;
        throw ValidationError(msg.str());
    }
    const TNormParam p(cfg.lambda);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    Matrix a;
    std::vector<double> b;
    for (int attempt = 0; attempt < 500; ++attempt) {
        a = Matrix(cfg.equations, cfg.variables, 0.0);
        for (std::size_t i = 0; i < cfg.equations; ++i) {
            for (std::size_t j = 0; j < cfg.variables; ++j) {
                const bool nonzero = unit(rng) < cfg.density;
                const double value = unit(rng);
                if (nonzero) a(i, j) = value;
            }
        }

        // The witness makes the instance solvable by construction.
        Point witness(cfg.variables);
        for (auto& w : witness) w = unit(rng);

        b.assign(cfg.equations, 0.0);
        for (std::size_t i = 0; i < cfg.equations; ++i) {
            b[i] = max_compose(a.row(i), witness, p);
        }
        if (residuals_stable(a, b, p)) break;
    }

    std::uniform_real_distribution<double> cost(-10.0, 10.0);
    std::vector<double> c(cfg.variables);
    for (int attempt = 0; attempt < 100; ++attempt) {
        bool pos = false, neg = false;
        for (auto& cj : c) {
            cj = cost(rng);
            pos = pos || cj > 0.0;
            neg = neg || cj < 0.0;
        }
        if (cfg.variables == 1 || (pos && neg)) break;
    }

    return Instance(std::move(a), std::move(b), std::move(c), p, cfg.tol);
}

BruteForceResult brute_force_solve(const Instance& inst, std::uint64_t limit,
                                   std::size_t sanity_samples,
                                   std::uint64_t seed) {
    BruteForceResult out;
    const IndexSets sets = index_sets(inst);
    out.unreduced_count = selection_space_size(sets);
    if (out.unreduced_count > limit) {
        std::ostringstream msg;
        msg << "raw selection space of " << out.unreduced_count
            << " exceeds the reference-solver limit of " << limit;
        throw SizeError(msg.str());
    }
    out.x_bar = global_max(inst);

    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) {
            // b[i] > 0 is implied: a zero right-hand side admits every column.
            return out;
        }
    }

    const std::size_t m = inst.equations();
    std::vector<std::size_t> idx(m, 0);
    bool done = false;
    while (!done) {
        Selection e;
        e.e.resize(m);
        for (std::size_t i = 0; i < m; ++i) e.e[i] = sets[i][idx[i]];
        Point x = candidate(inst, e);
        if (direct_membership(inst, x)) {
            out.feasible_candidates.push_back(std::move(x));
        }
        // Odometer over the raw product, last equation fastest.
        std::size_t level = m;
        while (level-- > 0) {
            if (++idx[level] < sets[level].size()) break;
            idx[level] = 0;
            if (level == 0) done = true;
        }
    }
    std::sort(out.feasible_candidates.begin(), out.feasible_candidates.end());
    out.feasible_candidates.erase(std::unique(out.feasible_candidates.begin(),
                                              out.feasible_candidates.end()),
                                  out.feasible_candidates.end());

    if (out.feasible_candidates.empty()) return out;
    out.feasible = true;

    for (const Point& cand : out.feasible_candidates) {
        Point merged(inst.variables());
        for (std::size_t j = 0; j < merged.size(); ++j) {
            merged[j] = inst.c()[j] < 0.0 ? out.x_bar[j] : cand[j];
        }
        const double z = dot(inst.c(), merged);
        if (out.x_star.empty() || z < out.z_star) {
            out.z_star = z;
            out.x_star = std::move(merged);
        }
    }

    if (sanity_samples > 0) {
        const auto points = sample_feasible(inst, out, sanity_samples, seed);
        for (const Point& x : points) {
            if (dot(inst.c(), x) < out.z_star - 1e-9) {
                throw Error("reference solver inconsistency: a sampled feasible point beats the reported optimum");
            }
        }
    }
    return out;
}

std::vector<Point> sample_feasible(const Instance& inst,
                                   const BruteForceResult& bf,
                                   std::size_t count, std::uint64_t seed) {
    std::vector<Point> out;
    if (!bf.feasible || bf.feasible_candidates.empty()) return out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(
        0, bf.feasible_candidates.size() - 1);
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const Point& lo = bf.feasible_candidates[pick(rng)];
        Point x(inst.variables());
        for (std::size_t j = 0; j < x.size(); ++j) {
            x[j] = lo[j] + unit(rng) * (bf.x_bar[j] - lo[j]);
        }
        if (!direct_membership(inst, x)) {
            throw Error("reference solver inconsistency: a box point failed direct membership");
        }
        out.push_back(std::move(x));
    }
    return out;
}

double fit_lambda(std::span<const FitSample> samples, double lo, double hi) {
    if (samples.empty()) throw FitError("no samples to fit");
    for (const FitSample& s : samples) {
        if (!(s.a > s.b) || !(s.b > 0.0)) {
            std::ostringstream msg;
            msg << "underdetermined sample (a = " << s.a << ", b = " << s.b
                << "): the residual is exponent-independent unless a > b > 0";
            throw FitError(msg.str());
        }
        if (!(s.expected > 0.0) || !(s.expected < 1.0)) {
            std::ostringstream msg;
            msg << "underdetermined sample: expected residual " << s.expected
                << " must lie strictly inside (0, 1)";
            throw FitError(msg.str());
        }
    }

    const auto sse = [&](double lambda) {
        const TNormParam p(lambda);
        double acc = 0.0;
        for (const FitSample& s : samples) {
            const double r = tnorm_residual(s.a, s.b, p) - s.expected;
            acc += r * r;
        }
        return acc;
    };

    // Golden-section search; the least-squares objective is unimodal on the
    // bracket for residual data coming from a single exponent.
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = sse(x1), f2 = sse(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = sse(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = sse(x2);
        }
    }
    const double best = 0.5 * (a + b);

    const TNormParam p(best);
    double worst = 0.0;
    for (const FitSample& s : samples) {
        worst = std::max(worst,
                         std::fabs(tnorm_residual(s.a, s.b, p) - s.expected));
    }
    if (worst > 1e-3) {
        std::ostringstream msg;
        msg << "no exponent in [" << lo << ", " << hi
            << "] reproduces the samples; best fit " << best
            << " still misses by " << worst;
        throw FitError(msg.str());
    }
    return best;
}

}  // namespace aafre::oracle
