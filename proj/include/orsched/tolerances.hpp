/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

namespace orsched::tol {

// All numeric tolerances live here; solver and validation code must not
// hard-code their own.

/// Reduced-cost threshold below which a column is not considered improving.
inline constexpr double reduced_cost = 1e-9;

/// Smallest pivot element accepted by the ratio test.
inline constexpr double pivot = 1e-9;

/// Constraint/bound violation allowed in a solution declared feasible.
inline constexpr double feasibility = 1e-7;

/// Phase-1 objective above this value means the LP is infeasible.
inline constexpr double phase1_infeasible = 1e-7;

/// Distance from the nearest integer at which a value counts as integral.
inline constexpr double integrality = 1e-6;

/// Slack used when pruning branch-and-bound nodes against the incumbent.
inline constexpr double prune = 1e-9;

/// Consecutive degenerate pivots tolerated before switching to Bland's rule.
inline constexpr int degenerate_pivot_limit = 50;

}  // namespace orsched::tol
