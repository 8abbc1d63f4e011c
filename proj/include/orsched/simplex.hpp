/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "orsched/formulation.hpp"

namespace orsched {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> values;  // structural variables only
  long iterations = 0;
};

struct SimplexOptions {
  long max_iterations = 0;      // 0 = 100 * (rows + columns)
  std::ostream* trace = nullptr;  // per-pivot diagnostics when set
};

/// Two-phase primal simplex on a dense tableau with bounded variables.
/// Integrality flags are ignored. Deterministic: identical problems produce
/// identical solutions and iteration counts. Throws ResourceLimitError when
/// the iteration cap is hit.
LpSolution solve_lp(const LpProblem& problem, const SimplexOptions& options = {});

/// Same, with the problem's variable bounds replaced for this solve only.
/// An empty bound interval yields status Infeasible.
LpSolution solve_lp(const LpProblem& problem, std::span<const double> lower_bounds,
                    std::span<const double> upper_bounds, const SimplexOptions& options = {});

}  // namespace orsched
