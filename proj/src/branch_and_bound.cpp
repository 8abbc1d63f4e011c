/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/branch_and_bound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "orsched/errors.hpp"
#include "orsched/heuristics.hpp"
#include "orsched/instance.hpp"
#include "orsched/tolerances.hpp"

namespace orsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Most fractional integral variable, lowest index on ties. Returns -1 when
// every integral variable is within tol::integrality of an integer.
int pick_branch_variable(const LpProblem& problem, const std::vector<double>& values) {
  int best = -1;
  double best_dist = tol::integrality;
  for (int j = 0; j < problem.num_variables(); ++j) {
    if (!problem.integral[j]) continue;
    const double frac = values[j] - std::floor(values[j]);
    const double dist = std::min(frac, 1.0 - frac);
    if (dist > best_dist) {
      best_dist = dist;
      best = j;
    }
  }
  return best;
}

// An explored node whose relaxation came back fractional and unpruned,
// waiting to be split on branch_var at branch_value.
struct OpenNode {
  std::vector<double> lo, up;
  double bound = 0.0;
  double branch_value = 0.0;
  long id = 0;
  int depth = 0;
  int branch_var = -1;
};

// Exploration order: lowest bound first; on equal bounds the deeper node,
// then the newer node. Depth and recency keep the search diving like
// depth-first while the bound key stops it from grinding a worse subtree
// to exhaustion when an equally promising one is open.
bool explored_later(const OpenNode& a, const OpenNode& b) {
  if (a.bound != b.bound) return a.bound > b.bound;
  if (a.depth != b.depth) return a.depth < b.depth;
  return a.id < b.id;
}

class BnbSearch {
 public:
  BnbSearch(const LpProblem& problem, const BnbOptions& options)
      : problem_(problem), options_(options) {
    if (options_.secondary_objective.empty()) return;
    if (options_.secondary_objective.size() != problem_.objective.size()) {
      throw ValidationError("secondary objective has " +
                            std::to_string(options_.secondary_objective.size()) +
                            " coefficients for " + std::to_string(problem_.num_variables()) +
                            " variables");
    }
    // Template for the tie-break solve: original rows plus a row pinning the
    // original objective to the node bound, which is filled in per node.
    anchored_ = problem_;
    anchored_->objective = options_.secondary_objective;
    LinearRow pin;
    pin.id = "anchor-pin";
    pin.rel = Relation::LessEqual;
    for (int j = 0; j < problem_.num_variables(); ++j) {
      if (problem_.objective[j] != 0.0) pin.terms.push_back(RowTerm{j, problem_.objective[j]});
    }
    anchored_->rows.push_back(std::move(pin));
  }

  void install_warm_start() {
    if (!options_.warm_start) return;
    const std::vector<double>& w = *options_.warm_start;
    const int n = problem_.num_variables();
    if (w.size() != static_cast<size_t>(n)) {
      throw ValidationError("warm start has " + std::to_string(w.size()) + " values for " +
                            std::to_string(n) + " variables");
    }
    for (int j = 0; j < n; ++j) {
      if (w[j] < problem_.lower_bounds[j] - tol::feasibility ||
          w[j] > problem_.upper_bounds[j] + tol::feasibility) {
        throw ValidationError("warm start leaves the bounds of '" +
                              problem_.variables[j].name + "'");
      }
      if (problem_.integral[j] &&
          std::fabs(w[j] - std::round(w[j])) > tol::integrality) {
        throw ValidationError("warm start is fractional in '" + problem_.variables[j].name +
                              "'");
      }
    }
    for (const LinearRow& row : problem_.rows) {
      double lhs = 0.0;
      for (const RowTerm& term : row.terms) lhs += term.coeff * w[term.var];
      const bool ok = row.rel == Relation::LessEqual      ? lhs <= row.rhs + tol::feasibility
                      : row.rel == Relation::GreaterEqual ? lhs >= row.rhs - tol::feasibility
                                                          : std::fabs(lhs - row.rhs) <= tol::feasibility;
      if (!ok) throw ValidationError("warm start violates row '" + row.id + "'");
    }
    has_incumbent_ = true;
    incumbent_objective_ = 0.0;
    for (int j = 0; j < n; ++j) incumbent_objective_ += problem_.objective[j] * w[j];
    incumbent_values_ = w;
  }

  MilpResult run() {
    install_warm_start();
    push(explore(problem_.lower_bounds, problem_.upper_bounds, 0, 0));
    while (!open_.empty() && !unbounded_) {
      std::pop_heap(open_.begin(), open_.end(), explored_later);
      OpenNode node = std::move(open_.back());
      open_.pop_back();
      // The incumbent may have improved since this node was opened.
      if (has_incumbent_ && node.bound >= incumbent_objective_ - tol::prune) continue;

      // Floor child first so the ceiling child is newer, hence explored
      // first when their bounds tie.
      std::vector<double> floor_up = node.up;
      floor_up[node.branch_var] = std::floor(node.branch_value);
      push(explore(node.lo, std::move(floor_up), node.id, node.depth + 1));
      if (unbounded_) break;
      node.lo[node.branch_var] = std::ceil(node.branch_value);
      push(explore(std::move(node.lo), std::move(node.up), node.id, node.depth + 1));
    }

    if (unbounded_) {
      result_.status = MilpStatus::Unbounded;
    } else if (has_incumbent_) {
      result_.status = MilpStatus::Optimal;
      result_.objective = incumbent_objective_;
      result_.values = std::move(incumbent_values_);
    } else {
      result_.status = MilpStatus::Infeasible;
    }
    return result_;
  }

 private:
  void push(std::optional<OpenNode> node) {
    if (!node) return;
    open_.push_back(std::move(*node));
    std::push_heap(open_.begin(), open_.end(), explored_later);
  }

  // Solves one node's relaxation and classifies it. Returns the node only
  // when it needs branching later; terminal outcomes are consumed here.
  std::optional<OpenNode> explore(std::vector<double> lo, std::vector<double> up, long parent,
                                  int depth) {
    if (result_.nodes >= options_.node_limit) throw limit_error();
    const long id = ++result_.nodes;
    LpSolution lp = solve_lp(problem_, lo, up, options_.lp);
    result_.lp_iterations += lp.iterations;

    NodeEvent event;
    event.id = id;
    event.parent = parent;
    event.depth = depth;
    event.lp_status = lp.status;
    event.has_incumbent = has_incumbent_;
    event.incumbent = incumbent_objective_;

    if (lp.status == LpStatus::Unbounded) {
      // Only reachable at the root: every child box is inside a box whose
      // relaxation already had a finite optimum.
      event.outcome = NodeOutcome::Unbounded;
      emit(event);
      unbounded_ = true;
      return std::nullopt;
    }
    if (lp.status == LpStatus::Infeasible) {
      event.outcome = NodeOutcome::Infeasible;
      emit(event);
      return std::nullopt;
    }

    event.bound = lp.objective;
    if (has_incumbent_ && lp.objective >= incumbent_objective_ - tol::prune) {
      event.outcome = NodeOutcome::PrunedByBound;
      emit(event);
      return std::nullopt;
    }

    std::vector<double> values = std::move(lp.values);
    double objective = lp.objective;
    int branch = pick_branch_variable(problem_, values);
    if (branch >= 0 && anchored_) {
      // Re-solve over the optimal face with the tie-break objective; branch
      // on that point instead. The bound stays the primary LP value.
      anchored_->rows.back().rhs = lp.objective;
      try {
        LpSolution anchored = solve_lp(*anchored_, lo, up, options_.lp);
        result_.lp_iterations += anchored.iterations;
        if (anchored.status == LpStatus::Optimal) {
          values = std::move(anchored.values);
          objective = 0.0;
          for (int j = 0; j < problem_.num_variables(); ++j) {
            objective += problem_.objective[j] * values[j];
          }
          branch = pick_branch_variable(problem_, values);
        }
      } catch (const ResourceLimitError&) {
        // Tie-break solve stalling is not fatal; branch on the primary point.
      }
    }
    if (branch < 0) {
      // Integral variables are reported snapped to their integer values.
      for (int j = 0; j < problem_.num_variables(); ++j) {
        if (problem_.integral[j]) values[j] = std::round(values[j]);
      }
      objective = 0.0;
      for (int j = 0; j < problem_.num_variables(); ++j) {
        objective += problem_.objective[j] * values[j];
      }
      has_incumbent_ = true;
      incumbent_objective_ = objective;
      incumbent_values_ = std::move(values);
      event.outcome = NodeOutcome::NewIncumbent;
      event.has_incumbent = true;
      event.incumbent = incumbent_objective_;
      emit(event);
      return std::nullopt;
    }

    event.outcome = NodeOutcome::Branched;
    event.branch_var = branch;
    emit(event);
    OpenNode node;
    node.lo = std::move(lo);
    node.up = std::move(up);
    node.bound = lp.objective;
    node.branch_value = values[branch];
    node.id = id;
    node.depth = depth;
    node.branch_var = branch;
    return node;
  }

  void emit(const NodeEvent& event) {
    if (options_.trace) {
      std::ostream& os = *options_.trace;
      os << "node " << event.id << " depth " << event.depth;
      switch (event.outcome) {
        case NodeOutcome::Infeasible:
          os << " infeasible";
          break;
        case NodeOutcome::Unbounded:
          os << " unbounded";
          break;
        case NodeOutcome::PrunedByBound:
          os << " pruned bound " << event.bound << " vs incumbent " << event.incumbent;
          break;
        case NodeOutcome::NewIncumbent:
          os << " incumbent " << event.bound;
          break;
        case NodeOutcome::Branched:
          os << " bound " << event.bound << " branch "
             << problem_.variables[event.branch_var].name;
          break;
      }
      os << "\n";
    }
    if (options_.observer) options_.observer(event);
  }

  ResourceLimitError limit_error() const {
    double gap = 0.0;
    if (has_incumbent_ && !open_.empty()) {
      double best_open = kInf;
      for (const OpenNode& open : open_) best_open = std::min(best_open, open.bound);
      gap = incumbent_objective_ - best_open;
    }
    return ResourceLimitError(
        "node limit (" + std::to_string(options_.node_limit) + ") exceeded", result_.nodes,
        has_incumbent_, has_incumbent_ ? incumbent_objective_ : 0.0, gap,
        incumbent_values_);
  }

  const LpProblem& problem_;
  const BnbOptions& options_;
  std::optional<LpProblem> anchored_;  // set when a secondary objective is in use
  std::vector<OpenNode> open_;         // heap under explored_later
  MilpResult result_;
  bool has_incumbent_ = false;
  bool unbounded_ = false;
  double incumbent_objective_ = kInf;
  std::vector<double> incumbent_values_;
};

}  // namespace

MilpResult solve_milp(const LpProblem& problem, const BnbOptions& options) {
  problem.check_consistent();
  BnbSearch search(problem, options);
  return search.run();
}

LexicographicResult solve_lexicographic(const Instance& instance, const BnbOptions& options) {
  FormulationOptions stage_options;
  stage_options.integer_rooms = true;
  stage_options.tight_mode = true;
  LpProblem model = build_model(instance, stage_options);

  BnbOptions staged = options;
  staged.secondary_objective = anchor_objective(instance, model);
  if (const auto cover = cover_schedule(instance)) {
    staged.warm_start = complete_solution(instance, model, *cover);
  }

  LexicographicResult result;
  result.stage1 = solve_milp(model, staged);
  if (result.stage1.status != MilpStatus::Optimal) return result;

  // Stage 2: swap the objective to total over-allocation and pin the
  // stage-1 value with a small slack so round-off cannot cut off the
  // stage-1 optimum.
  LinearRow pin;
  pin.id = "stage1";
  pin.rel = Relation::LessEqual;
  pin.rhs = result.stage1.objective + 1e-9;
  const int J = instance.department_count();
  for (int j = 0; j < J; ++j) {
    const int s = under_var_index(instance, j);
    pin.terms.push_back(RowTerm{s, model.objective[s]});
    model.objective[s] = 0.0;
    model.objective[over_var_index(instance, j)] = 1.0;
  }
  model.rows.push_back(std::move(pin));

  // Seed stage 2 with the stage-1 schedule, slacks re-derived from its
  // rounded room counts so the point is exactly consistent. Installed only
  // if it still meets the pinned stage-1 value; stage 2 starts cold
  // otherwise.
  staged.warm_start.reset();
  const Allocation stage1_schedule = extract_allocation(instance, result.stage1.values);
  if (auto seed = complete_solution(instance, model, stage1_schedule)) {
    const LinearRow& pinned = model.rows.back();
    double stage1_value = 0.0;
    for (const RowTerm& term : pinned.terms) stage1_value += term.coeff * (*seed)[term.var];
    if (stage1_value <= pinned.rhs) staged.warm_start = std::move(*seed);
  }
  result.stage2 = solve_milp(model, staged);
  return result;
}

}  // namespace orsched
