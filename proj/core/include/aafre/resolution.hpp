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

#include <cstdint>
#include <optional>
#include <vector>

#include "aafre/instance.hpp"

namespace aafre {

/// Per-equation admissible column sets J[i] = { j : a[i][j] >= b[i] },
/// 0-based and ascending. Built with exact comparisons on the raw inputs.
struct IndexSets {
    std::vector<std::vector<int>> sets;

    std::size_t size() const noexcept { return sets.size(); }
    const std::vector<int>& operator[](std::size_t i) const { return sets[i]; }
};

IndexSets index_sets(const Instance& inst);

/// Product of the admissible-set sizes: the raw number of selections.
/// Saturates at the maximum uint64 value; 0 when some set is empty.
std::uint64_t selection_space_size(const IndexSets& sets) noexcept;

/// Componentwise-greatest solution of equation i alone. Components: the
/// residual of (a[i][k], b[i]) for admissible k when b[i] > 0; 0 for
/// admissible k with a[i][k] > b[i] = 0; 1 when a[i][k] = b[i] = 0; and 1 for
/// inadmissible k, which the equation leaves unconstrained.
Point local_max(const Instance& inst, std::size_t equation);

/// Componentwise minimum of all per-equation maxima: the unique candidate for
/// the greatest solution of the whole system.
Point global_max(const Instance& inst);

/// True iff |max_compose(row i, x) - b[i]| <= tol for every equation.
/// Throws DimensionError when x has the wrong length.
bool membership(const Instance& inst, const Point& x);

struct Feasibility {
    bool feasible = false;
    Point x_bar;
    /// Set when infeasibility was decided without evaluating membership:
    /// the 0-based equation with b[i] > 0 and an empty admissible set.
    std::optional<std::size_t> empty_equation;
};

/// Computes the greatest candidate and tests it. The system is solvable iff
/// the greatest candidate satisfies it; an equation with positive right-hand
/// side and no admissible column short-circuits to infeasible.
Feasibility feasibility(const Instance& inst);

/// Minimal-candidate contribution of choosing column `column` for equation
/// `equation`: component `column` carries the residual of (a, b) when
/// b[i] > 0, every other component is 0, and the whole vector is 0 when
/// b[i] = 0. Throws SelectionError when the column is not admissible.
Point local_min_candidate(const Instance& inst, std::size_t equation,
                          int column);

/// Componentwise maximum of the per-equation contributions of a selection.
Point candidate(const Instance& inst, const Selection& e);

/// One admissible choice inside an enumeration plan.
struct CandidateChoice {
    int col = 0;
    double value = 0.0;  // contribution at `col`; 0 for b[i] = 0 equations
};

/// Lazy lexicographic product of the per-equation choice lists.
///
/// With reduction enabled the per-equation lists shrink in three sound ways:
///  (a) an equation with b[i] = 0 keeps exactly one fixed choice, since its
///      contribution is the zero vector no matter the column;
///  (b) choices with identical (column, value) contributions collapse to one;
///  (c) a choice whose contribution value exceeds the greatest solution at its
///      column (beyond tol) is dropped: its candidates can never stay below
///      the greatest solution, so the kept candidate set is unchanged.
///
/// Selections come out in lexicographic (equation, column) order and are
/// random-accessible by rank, which makes partitioned parallel scans
/// deterministic. Construction throws EmptySelectionError when an equation
/// has no choice at all (callers are expected to confirm feasibility first).
class SelectionStream {
public:
    SelectionStream(const Instance& inst, const IndexSets& sets,
                    const Point& x_bar, bool reduce);

    /// Product of the raw admissible-set sizes (saturates at uint64 max).
    std::uint64_t unreduced_count() const noexcept { return unreduced_; }
    /// Number of selections this stream yields (saturates at uint64 max).
    std::uint64_t size() const noexcept { return size_; }

    std::size_t equations() const noexcept { return choices_.size(); }
    std::size_t variables() const noexcept { return vars_; }

    /// k-th selection in lexicographic order, 0 <= k < size().
    Selection at(std::uint64_t k) const;
    /// Candidate point of the k-th selection, merged from cached residuals.
    void candidate_at(std::uint64_t k, Point& out) const;
    Point candidate_at(std::uint64_t k) const;

    const std::vector<CandidateChoice>& choices(std::size_t i) const {
        return choices_[i];
    }

private:
    std::vector<std::vector<CandidateChoice>> choices_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t unreduced_ = 0;
    std::uint64_t size_ = 0;
    std::size_t vars_ = 0;
};

/// Builds the (by default reduced) selection stream for an instance.
SelectionStream enumerate_selections(const Instance& inst, bool reduce = true);

struct KeptCandidate {
    Point x;
    Selection e;
};

struct ResolutionReport {
    bool feasible = false;
    Point x_bar;
    std::optional<std::size_t> empty_equation;
    std::uint64_t unreduced_count = 0;  ///< product of |J_i|, saturated
    std::uint64_t examined = 0;         ///< selections evaluated
    std::vector<KeptCandidate> kept;    ///< candidates below the greatest solution
};

struct ResolveOptions {
    bool minimality_filter = true;  ///< keep only componentwise-minimal points
    bool reduce = true;             ///< use the reduced selection stream
    std::uint64_t max_candidates = 0;  ///< 0 = unlimited; else SizeError beyond
    unsigned workers = 1;              ///< parallel scan; result order is stable
};

/// Full resolution of the feasible region: feasibility, greatest solution,
/// candidate enumeration and filtering. Kept candidates satisfy every
/// equation; with the minimality filter they are the minimal solutions.
ResolutionReport feasible_candidates(const Instance& inst,
                                     const ResolveOptions& opts = {});

/// Componentwise-minimal elements of a candidate list. Duplicate points
/// collapse onto their first (lexicographically earliest) selection; survivor
/// order follows the input order.
std::vector<KeptCandidate> minimal_elements(std::vector<KeptCandidate> kept);

}  // namespace aafre
