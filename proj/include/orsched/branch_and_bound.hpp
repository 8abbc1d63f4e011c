/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "orsched/formulation.hpp"
#include "orsched/simplex.hpp"

namespace orsched {

class Instance;

enum class MilpStatus { Optimal, Infeasible, Unbounded };

enum class NodeOutcome { Infeasible, PrunedByBound, NewIncumbent, Branched, Unbounded };

// Emitted once per explored node, after its relaxation has been solved and
// classified. `bound` is meaningful only when lp_status is Optimal; `parent`
// is 0 for the root.
struct NodeEvent {
  long id = 0;
  long parent = 0;
  int depth = 0;
  LpStatus lp_status = LpStatus::Infeasible;
  double bound = 0.0;
  NodeOutcome outcome = NodeOutcome::Infeasible;
  bool has_incumbent = false;
  double incumbent = 0.0;
  int branch_var = -1;
};

struct BnbOptions {
  long node_limit = 1'000'000;
  std::ostream* trace = nullptr;
  std::function<void(const NodeEvent&)> observer;
  SimplexOptions lp;
  // Optional tie-break objective, one coefficient per variable. When set, a
  // fractional node is re-solved with the original objective pinned to the
  // node bound and this objective minimized, and the branch variable is
  // chosen from that point instead. Node bounds are unaffected. Useful when
  // the relaxation has many alternate optima that differ only by symmetry.
  std::vector<double> secondary_objective;
  // Optional feasible point installed as the starting incumbent. Must
  // satisfy bounds, rows, and integrality; anything else is rejected with
  // ValidationError. The search then only keeps solutions that beat it.
  std::optional<std::vector<double>> warm_start;
};

struct MilpResult {
  MilpStatus status = MilpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> values;  // structural variables of the incumbent
  long nodes = 0;              // relaxations solved
  long lp_iterations = 0;      // summed over all relaxations
};

// Depth-first branch and bound over the variables flagged integral in the
// problem. Each node's relaxation is solved from scratch; the ceiling child
// of a branch is explored first. Exceeding node_limit raises
// ResourceLimitError carrying the incumbent, if any.
MilpResult solve_milp(const LpProblem& problem, const BnbOptions& options = {});

// Two-stage solve on the equality-form model with integral room counts:
// stage 1 minimizes the weighted shortfall, stage 2 minimizes total
// over-allocation among schedules that keep the stage-1 value (up to a 1e-9
// slack on the pinning row). Both stages run with the instance's anchor
// tie-break; any secondary_objective in the passed options is ignored.
struct LexicographicResult {
  MilpResult stage1;
  MilpResult stage2;
};

LexicographicResult solve_lexicographic(const Instance& instance, const BnbOptions& options = {});

}  // namespace orsched
