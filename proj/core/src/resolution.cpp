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

#include "aafre/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "aafre/tnorm.hpp"

namespace aafre {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
    if (a == 0 || b == 0) return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b) {
        return std::numeric_limits<std::uint64_t>::max();
    }
    return a * b;
}

// Componentwise p <= q + slack.
bool below(const Point& p, const Point& q, double slack) noexcept {
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] > q[j] + slack) return false;
    }
    return true;
}

}  // namespace

IndexSets index_sets(const Instance& inst) {
    IndexSets out;
    out.sets.resize(inst.equations());
    for (std::size_t i = 0; i < inst.equations(); ++i) {
        for (std::size_t j = 0; j < inst.variables(); ++j) {
            if (inst.A()(i, j) >= inst.b()[i]) {
                out.sets[i].push_back(static_cast<int>(j));
            }
        }
    }
    return out;
}

std::uint64_t selection_space_size(const IndexSets& sets) noexcept {
    std::uint64_t prod = 1;
    for (const auto& ji : sets.sets) {
        prod = saturating_mul(prod, ji.size());
    }
    return prod;
}

Point local_max(const Instance& inst, std::size_t equation) {
    const double bi = inst.b()[equation];
    Point out(inst.variables(), 1.0);
    for (std::size_t k = 0; k < inst.variables(); ++k) {
        const double aik = inst.A()(equation, k);
        if (aik < bi) continue;  // unconstrained component stays 1
        if (bi > 0.0) {
            out[k] = tnorm_residual(aik, bi, inst.tnorm());
        } else if (aik > 0.0) {
            out[k] = 0.0;  // only 0 keeps a positive coefficient at 0
        }                  // aik == bi == 0: any value works, keep 1
    }
    return out;
}

Point global_max(const Instance& inst) {
    Point out = local_max(inst, 0);
    for (std::size_t i = 1; i < inst.equations(); ++i) {
        const Point xi = local_max(inst, i);
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] = std::min(out[j], xi[j]);
        }
    }
    return out;
}

bool membership(const Instance& inst, const Point& x) {
    if (x.size() != inst.variables()) {
        std::ostringstream msg;
        msg << "membership of a point with " << x.size()
            << " components, expected " << inst.variables();
        throw DimensionError(msg.str());
    }
    for (std::size_t i = 0; i < inst.equations(); ++i) {
        const double lhs = max_compose(inst.A().row(i), x, inst.tnorm());
        if (std::fabs(lhs - inst.b()[i]) > inst.tol()) return false;
    }
    return true;
}

Feasibility feasibility(const Instance& inst) {
    Feasibility out;
    const IndexSets sets = index_sets(inst);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty() && inst.b()[i] > 0.0) {
            out.x_bar = global_max(inst);
            out.empty_equation = i;
            return out;  // no column can reach b[i]
        }
    }
    out.x_bar = global_max(inst);
    out.feasible = membership(inst, out.x_bar);
    return out;
}

Point local_min_candidate(const Instance& inst, std::size_t equation,
                          int column) {
    const double bi = inst.b()[equation];
    const auto j = static_cast<std::size_t>(column);
    if (column < 0 || j >= inst.variables() || inst.A()(equation, j) < bi) {
        std::ostringstream msg;
        msg << "column " << column + 1 << " is not admissible for equation "
            << equation + 1;
        throw SelectionError(msg.str());
    }
    Point out(inst.variables(), 0.0);
    if (bi > 0.0) {
        out[j] = tnorm_residual(inst.A()(equation, j), bi, inst.tnorm());
    }
    return out;
}

Point candidate(const Instance& inst, const Selection& e) {
    if (e.e.size() != inst.equations()) {
        std::ostringstream msg;
        msg << "selection has " << e.e.size() << " entries, expected "
            << inst.equations();
        throw SelectionError(msg.str());
    }
    Point out(inst.variables(), 0.0);
    for (std::size_t i = 0; i < e.e.size(); ++i) {
        const Point part = local_min_candidate(inst, i, e.e[i]);
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[j] = std::max(out[j], part[j]);
        }
    }
    return out;
}

SelectionStream::SelectionStream(const Instance& inst, const IndexSets& sets,
                                 const Point& x_bar, bool reduce)
    : vars_(inst.variables()) {
    const std::size_t m = inst.equations();
    choices_.resize(m);
    unreduced_ = 1;
    for (std::size_t i = 0; i < m; ++i) {
        unreduced_ = saturating_mul(unreduced_, sets[i].size());
        const double bi = inst.b()[i];
        if (sets[i].empty()) {
            std::ostringstream msg;
            msg << "equation " << i + 1 << " has no admissible column";
            throw EmptySelectionError(msg.str());
        }
        if (bi == 0.0 && reduce) {
            // Zero right-hand side contributes the zero vector whatever the
            // column; one representative choice is enough.
            choices_[i].push_back({sets[i].front(), 0.0});
            continue;
        }
        for (int j : sets[i]) {
            const auto col = static_cast<std::size_t>(j);
            double value =
                bi > 0.0 ? tnorm_residual(inst.A()(i, col), bi, inst.tnorm())
                         : 0.0;
            if (bi > 0.0 && value > x_bar[col]) {
                // Tolerance-degenerate binding: when the greatest solution
                // already meets this equation within tol at column j, the
                // equation needs no more than that component, even though the
                // exact residual overshoots it.
                const double at_bound =
                    tnorm_eval(inst.A()(i, col), x_bar[col], inst.tnorm());
                if (std::fabs(at_bound - bi) <= inst.tol()) value = x_bar[col];
            }
            if (reduce && value > x_bar[col] + inst.tol()) {
                continue;  // can never stay below the greatest solution
            }
            choices_[i].push_back({j, value});
        }
        // Collapse identical (column, value) contributions.
        auto& ch = choices_[i];
        ch.erase(std::unique(ch.begin(), ch.end(),
                             [](const CandidateChoice& l, const CandidateChoice& r) {
                                 return l.col == r.col && l.value == r.value;
                             }),
                 ch.end());
        if (ch.empty()) {
            std::ostringstream msg;
            msg << "equation " << i + 1
                << " has no admissible column below the greatest solution";
            throw EmptySelectionError(msg.str());
        }
    }
    strides_.assign(m, 1);
    size_ = 1;
    for (std::size_t i = m; i-- > 0;) {
        strides_[i] = size_;
        size_ = saturating_mul(size_, choices_[i].size());
    }
}

Selection SelectionStream::at(std::uint64_t k) const {
    Selection s;
    s.e.resize(choices_.size());
    for (std::size_t i = 0; i < choices_.size(); ++i) {
        const auto idx = static_cast<std::size_t>(
            (k / strides_[i]) % choices_[i].size());
        s.e[i] = choices_[i][idx].col;
    }
    return s;
}

void SelectionStream::candidate_at(std::uint64_t k, Point& out) const {
    out.assign(vars_, 0.0);
    for (std::size_t i = 0; i < choices_.size(); ++i) {
        const auto idx = static_cast<std::size_t>(
            (k / strides_[i]) % choices_[i].size());
        const CandidateChoice& ch = choices_[i][idx];
        auto& slot = out[static_cast<std::size_t>(ch.col)];
        slot = std::max(slot, ch.value);
    }
}

Point SelectionStream::candidate_at(std::uint64_t k) const {
    Point out;
    candidate_at(k, out);
    return out;
}

SelectionStream enumerate_selections(const Instance& inst, bool reduce) {
    const IndexSets sets = index_sets(inst);
    return SelectionStream(inst, sets, global_max(inst), reduce);
}

namespace {

std::vector<KeptCandidate> scan_range(const SelectionStream& stream,
                                      const Point& x_bar, double tol,
                                      std::uint64_t lo, std::uint64_t hi) {
    std::vector<KeptCandidate> kept;
    Point x;
    for (std::uint64_t k = lo; k < hi; ++k) {
        stream.candidate_at(k, x);
        if (below(x, x_bar, tol)) {
            kept.push_back({x, stream.at(k)});
        }
    }
    return kept;
}

}  // namespace

ResolutionReport feasible_candidates(const Instance& inst,
                                     const ResolveOptions& opts) {
    ResolutionReport report;
    const IndexSets sets = index_sets(inst);
    report.unreduced_count = selection_space_size(sets);

    const Feasibility feas = feasibility(inst);
    report.feasible = feas.feasible;
    report.x_bar = feas.x_bar;
    report.empty_equation = feas.empty_equation;
    if (!feas.feasible) return report;

    const SelectionStream stream(inst, sets, feas.x_bar, opts.reduce);
    if (opts.max_candidates != 0 && stream.size() > opts.max_candidates) {
        std::ostringstream msg;
        msg << "candidate enumeration of " << stream.size()
            << " selections exceeds the limit of " << opts.max_candidates;
        throw SizeError(msg.str());
    }

    const std::uint64_t total = stream.size();
    unsigned workers = std::max(1u, opts.workers);
    workers = static_cast<unsigned>(
        std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
    if (workers <= 1 || total < 2048) {
        report.kept = scan_range(stream, feas.x_bar, inst.tol(), 0, total);
    } else {
        std::vector<std::vector<KeptCandidate>> parts(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
            const std::uint64_t hi =
                std::min<std::uint64_t>(lo + chunk, total);
            threads.emplace_back([&, w, lo, hi] {
                parts[w] = scan_range(stream, feas.x_bar, inst.tol(), lo, hi);
            });
        }
        for (auto& t : threads) t.join();
        for (auto& part : parts) {
            report.kept.insert(report.kept.end(),
                               std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
        }
    }
    report.examined = total;

    if (opts.minimality_filter) {
        report.kept = minimal_elements(std::move(report.kept));
    }
    return report;
}

std::vector<KeptCandidate> minimal_elements(std::vector<KeptCandidate> kept) {
    const std::size_t k = kept.size();
    std::vector<char> dead(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (dead[i]) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
            if (dead[j]) continue;
            const bool i_le_j = below(kept[i].x, kept[j].x, 0.0);
            const bool j_le_i = below(kept[j].x, kept[i].x, 0.0);
            if (i_le_j) {
                dead[j] = 1;  // equal points keep the earlier selection
            } else if (j_le_i) {
                dead[i] = 1;
                break;
            }
        }
    }
    std::vector<KeptCandidate> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (!dead[i]) out.push_back(std::move(kept[i]));
    }
    return out;
}

}  // namespace aafre
