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

#include "aafre/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "aafre/tnorm.hpp"

namespace aafre {

CostSplit split_cost(std::span<const double> c) {
    CostSplit out;
    out.plus.reserve(c.size());
    out.minus.reserve(c.size());
    for (double cj : c) {
        out.plus.push_back(std::max(cj, 0.0));
        out.minus.push_back(std::min(cj, 0.0));
    }
    return out;
}

namespace {

// z1 of a selection, replayed equation by equation so that every code path
// (flat scan, depth-first search, parallel chunks) accumulates the exact same
// floating-point value. Increments are nonnegative, so prefixes of this
// recurrence never exceed the final value.
double replay_z1(const SelectionStream& stream, std::span<const double> cplus,
                 std::span<const std::size_t> idx, Point& scratch) {
    scratch.assign(stream.variables(), 0.0);
    double z1 = 0.0;
    for (std::size_t i = 0; i < stream.equations(); ++i) {
        const CandidateChoice& ch = stream.choices(i)[idx[i]];
        auto& slot = scratch[static_cast<std::size_t>(ch.col)];
        if (ch.value > slot) {
            z1 += cplus[static_cast<std::size_t>(ch.col)] * (ch.value - slot);
            slot = ch.value;
        }
    }
    return z1;
}

struct Incumbent {
    double z1 = std::numeric_limits<double>::infinity();
    std::uint64_t rank = 0;  // lexicographic rank of the selection
    bool valid = false;
};

// Linear scan over [lo, hi); ranks are lexicographic, so the smallest rank
// achieving the minimum is also the lexicographically smallest selection.
void scan_chunk(const SelectionStream& stream, std::span<const double> cplus,
                std::uint64_t lo, std::uint64_t hi, Incumbent& best,
                std::vector<std::uint64_t>* ties) {
    const std::size_t m = stream.equations();
    std::vector<std::size_t> idx(m, 0);
    Point scratch;
    for (std::uint64_t k = lo; k < hi; ++k) {
        std::uint64_t rest = k;
        for (std::size_t i = m; i-- > 0;) {
            idx[i] = static_cast<std::size_t>(rest % stream.choices(i).size());
            rest /= stream.choices(i).size();
        }
        const double z1 = replay_z1(stream, cplus, idx, scratch);
        if (!best.valid || z1 < best.z1) {
            best = {z1, k, true};
            if (ties) {
                ties->clear();
                ties->push_back(k);
            }
        } else if (ties && z1 == best.z1) {
            ties->push_back(k);
        }
    }
}

struct DfsContext {
    const SelectionStream& stream;
    std::span<const double> cplus;
    std::vector<std::size_t> idx;
    Point acc;
    Incumbent best;
    std::uint64_t examined = 0;
    std::uint64_t pruned = 0;
    std::vector<std::uint64_t>* ties = nullptr;
    std::vector<std::uint64_t> subtree;  // leaves below each equation level
};

// Depth-first walk in lexicographic order. The accumulated z1 of a prefix is
// a lower bound on every completion, so a prefix already above the incumbent
// discards its whole subtree.
void dfs(DfsContext& ctx, std::size_t level, std::uint64_t rank, double z1) {
    if (level == ctx.stream.equations()) {
        ++ctx.examined;
        if (!ctx.best.valid || z1 < ctx.best.z1) {
            ctx.best = {z1, rank, true};
            if (ctx.ties) {
                ctx.ties->clear();
                ctx.ties->push_back(rank);
            }
        } else if (ctx.ties && z1 == ctx.best.z1) {
            ctx.ties->push_back(rank);
        }
        return;
    }
    const auto& choices = ctx.stream.choices(level);
    for (std::size_t t = 0; t < choices.size(); ++t) {
        const CandidateChoice& ch = choices[t];
        auto& slot = ctx.acc[static_cast<std::size_t>(ch.col)];
        const double old = slot;
        double next_z1 = z1;
        if (ch.value > slot) {
            next_z1 += ctx.cplus[static_cast<std::size_t>(ch.col)] *
                       (ch.value - slot);
            slot = ch.value;
        }
        if (ctx.best.valid && next_z1 > ctx.best.z1) {
            ctx.pruned += ctx.subtree[level];
        } else {
            dfs(ctx, level + 1, rank + t * ctx.subtree[level], next_z1);
        }
        slot = old;
    }
}

Z1Result run_z1(const Instance& inst, const SelectionStream& stream,
                const SolveOptions& opts) {
    const CostSplit split = split_cost(inst.c());
    const std::uint64_t total = stream.size();
    Incumbent best;
    std::vector<std::uint64_t> tie_ranks;
    std::vector<std::uint64_t>* ties = opts.all_optima ? &tie_ranks : nullptr;
    std::uint64_t examined = total;
    std::uint64_t pruned = 0;

    if (opts.prune) {
        DfsContext ctx{stream, split.plus, {}, {}, {}, 0, 0, nullptr, {}};
        ctx.acc.assign(stream.variables(), 0.0);
        ctx.ties = ties;
        ctx.subtree.assign(stream.equations(), 1);
        for (std::size_t i = stream.equations(); i-- > 0;) {
            if (i + 1 < stream.equations()) {
                ctx.subtree[i] =
                    ctx.subtree[i + 1] * stream.choices(i + 1).size();
            }
        }
        dfs(ctx, 0, 0, 0.0);
        best = ctx.best;
        examined = ctx.examined;
        pruned = ctx.pruned;
    } else {
        unsigned workers = std::max(1u, opts.workers);
        workers = static_cast<unsigned>(
            std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
        if (workers <= 1 || total < 2048) {
            scan_chunk(stream, split.plus, 0, total, best, ties);
        } else {
            std::vector<Incumbent> bests(workers);
            std::vector<std::vector<std::uint64_t>> tie_parts(workers);
            std::vector<std::thread> threads;
            const std::uint64_t chunk = (total + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t lo =
                    std::min<std::uint64_t>(w * chunk, total);
                const std::uint64_t hi =
                    std::min<std::uint64_t>(lo + chunk, total);
                threads.emplace_back([&, w, lo, hi] {
                    scan_chunk(stream, split.plus, lo, hi, bests[w],
                               ties ? &tie_parts[w] : nullptr);
                });
            }
            for (auto& t : threads) t.join();
            for (unsigned w = 0; w < workers; ++w) {
                if (!bests[w].valid) continue;
                if (!best.valid || bests[w].z1 < best.z1) best = bests[w];
            }
            if (ties) {
                // Chunk-local ties may sit above the global minimum; they are
                // re-filtered below when the ranks are materialized.
                tie_ranks.clear();
                for (unsigned w = 0; w < workers; ++w) {
                    tie_ranks.insert(tie_ranks.end(), tie_parts[w].begin(),
                                     tie_parts[w].end());
                }
            }
        }
    }

    Z1Result out;
    out.examined = examined;
    out.pruned = pruned;
    if (!best.valid) {
        throw InfeasibleError("no candidate available for optimization");
    }
    out.z1 = best.z1;
    out.e_star = stream.at(best.rank);
    out.x_e_star = stream.candidate_at(best.rank);
    if (ties) {
        std::vector<std::size_t> idx;
        Point scratch;
        for (std::uint64_t rank : tie_ranks) {
            const std::size_t m = stream.equations();
            idx.assign(m, 0);
            std::uint64_t rest = rank;
            for (std::size_t i = m; i-- > 0;) {
                idx[i] =
                    static_cast<std::size_t>(rest % stream.choices(i).size());
                rest /= stream.choices(i).size();
            }
            if (replay_z1(stream, split.plus, idx, scratch) == best.z1) {
                out.tied.push_back(stream.at(rank));
            }
        }
    }
    return out;
}

}  // namespace

Z1Result minimize_z1(const Instance& inst, const ResolutionReport& report,
                     const SolveOptions& opts) {
    if (!report.feasible) {
        throw InfeasibleError("cannot optimize over an empty solution set");
    }
    if (opts.prune) {
        // Bound-based search over the reduced stream; identical outcome to
        // the exhaustive scan by construction of the shared z1 recurrence.
        const IndexSets sets = index_sets(inst);
        const SelectionStream stream(inst, sets, report.x_bar, true);
        return run_z1(inst, stream, opts);
    }
    const CostSplit split = split_cost(inst.c());
    // Same per-equation recurrence (including the tolerance-degenerate clamp
    // of the selection stream), so both entry points agree bit-for-bit.
    const auto z1_of = [&](const Selection& e) {
        Point acc(inst.variables(), 0.0);
        double z1 = 0.0;
        for (std::size_t i = 0; i < e.e.size(); ++i) {
            const double bi = inst.b()[i];
            const auto col = static_cast<std::size_t>(e.e[i]);
            double value =
                bi > 0.0 ? tnorm_residual(inst.A()(i, col), bi, inst.tnorm())
                         : 0.0;
            if (bi > 0.0 && value > report.x_bar[col]) {
                const double at_bound = tnorm_eval(
                    inst.A()(i, col), report.x_bar[col], inst.tnorm());
                if (std::fabs(at_bound - bi) <= inst.tol()) {
                    value = report.x_bar[col];
                }
            }
            if (value > acc[col]) {
                z1 += split.plus[col] * (value - acc[col]);
                acc[col] = value;
            }
        }
        return z1;
    };

    Z1Result out;
    out.examined = report.kept.size();
    bool have = false;
    for (const KeptCandidate& cand : report.kept) {
        const double z1 = z1_of(cand.e);
        if (!have || z1 < out.z1 ||
            (z1 == out.z1 && lex_less(cand.e, out.e_star))) {
            out.z1 = z1;
            out.e_star = cand.e;
            out.x_e_star = cand.x;
            have = true;
        }
    }
    if (!have) {
        throw InfeasibleError("resolution report contains no kept candidate");
    }
    if (opts.all_optima) {
        for (const KeptCandidate& cand : report.kept) {
            if (z1_of(cand.e) == out.z1) out.tied.push_back(cand.e);
        }
    }
    return out;
}

Point merge_optimum(const Instance& inst, const Point& x_bar,
                    const Point& x_e_star) {
    if (x_bar.size() != inst.variables() ||
        x_e_star.size() != inst.variables()) {
        throw DimensionError("merge over points of mismatched length");
    }
    Point out(inst.variables());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = inst.c()[j] < 0.0 ? x_bar[j] : x_e_star[j];
    }
    return out;
}

OptimizationReport solve(const Instance& inst, const SolveOptions& opts) {
    OptimizationReport report;
    const IndexSets sets = index_sets(inst);
    report.resolution.unreduced_count = selection_space_size(sets);

    const Feasibility feas = feasibility(inst);
    report.feasible = feas.feasible;
    report.resolution.feasible = feas.feasible;
    report.resolution.x_bar = feas.x_bar;
    report.resolution.empty_equation = feas.empty_equation;
    if (!feas.feasible) return report;

    const SelectionStream stream(inst, sets, feas.x_bar, true);
    if (opts.max_candidates != 0 && stream.size() > opts.max_candidates) {
        std::ostringstream msg;
        msg << "candidate enumeration of " << stream.size()
            << " selections exceeds the limit of " << opts.max_candidates;
        throw SizeError(msg.str());
    }

    const Z1Result z1 = run_z1(inst, stream, opts);
    report.e_star = z1.e_star;
    report.x_e_star = z1.x_e_star;
    report.z1 = z1.z1;
    report.candidates_examined = z1.examined;
    report.candidates_pruned = z1.pruned;
    report.tied_optima = z1.tied;
    report.resolution.examined = z1.examined;

    report.x_star = merge_optimum(inst, feas.x_bar, z1.x_e_star);
    report.z_star = dot(inst.c(), report.x_star);
    return report;
}

}  // namespace aafre
