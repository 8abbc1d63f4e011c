/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "orsched/formulation.hpp"

namespace orsched::testing {

inline constexpr double inf = std::numeric_limits<double>::infinity();

inline LinearRow row(std::string id, std::vector<RowTerm> terms, Relation rel, double rhs) {
  LinearRow r;
  r.id = std::move(id);
  r.terms = std::move(terms);
  r.rel = rel;
  r.rhs = rhs;
  return r;
}

// Anonymous problem with variables named v0, v1, ... for tests that exercise
// the solvers directly rather than through build_model.
inline LpProblem make_lp(std::vector<double> objective, std::vector<LinearRow> rows,
                         std::vector<double> lower, std::vector<double> upper,
                         std::vector<std::uint8_t> integral = {}) {
  LpProblem p;
  const size_t n = objective.size();
  p.objective = std::move(objective);
  p.rows = std::move(rows);
  p.lower_bounds = std::move(lower);
  p.upper_bounds = std::move(upper);
  p.integral = integral.empty() ? std::vector<std::uint8_t>(n, 0) : std::move(integral);
  for (size_t j = 0; j < n; ++j) {
    VarInfo info;
    info.name = "v" + std::to_string(j);
    p.variables.push_back(std::move(info));
  }
  p.check_consistent();
  return p;
}

}  // namespace orsched::testing
