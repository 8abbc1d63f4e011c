/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "orsched/errors.hpp"
#include "orsched/tolerances.hpp"

namespace orsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarState : char { Basic, AtLower, AtUpper };

// Dense bounded-variable tableau. Columns are the structural variables,
// then one slack per inequality row, then the phase-1 artificials. Rows are
// kept as an equality system reduced so that every basis column is a unit
// column; basic values are recomputed from the reduced rhs each iteration
// instead of being updated incrementally, which keeps them exact with
// respect to the current tableau.
class Tableau {
 public:
  Tableau(const LpProblem& problem, std::span<const double> lower, std::span<const double> upper,
          const SimplexOptions& options)
      : problem_(problem), options_(options) {
    n_ = problem.num_variables();
    m_ = problem.num_rows();
    max_iterations_ = options.max_iterations > 0 ? options.max_iterations
                                                 : 100L * (m_ + n_);
    lo_.assign(lower.begin(), lower.end());
    up_.assign(upper.begin(), upper.end());
  }

  LpSolution run() {
    LpSolution result;
    if (!prepare(result)) return result;  // empty bound interval

    build_columns();
    if (!phase1()) {
      result.status = LpStatus::Infeasible;
      result.iterations = iterations_;
      return result;
    }
    const bool bounded = phase2();
    result.iterations = iterations_;
    if (!bounded) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.values = structural_values();
    result.objective = 0.0;
    for (int j = 0; j < n_; ++j) result.objective += problem_.objective[j] * result.values[j];
    return result;
  }

 private:
  // Bound sanity; collapses near-empty intervals onto the lower bound.
  bool prepare(LpSolution& result) {
    for (int j = 0; j < n_; ++j) {
      if (!std::isfinite(lo_[j])) {
        throw ValidationError("variable '" + problem_.variables[j].name +
                              "' needs a finite lower bound");
      }
      if (lo_[j] > up_[j] + tol::feasibility) {
        result.status = LpStatus::Infeasible;
        return false;
      }
      if (lo_[j] > up_[j]) up_[j] = lo_[j];
    }
    return true;
  }

  void build_columns() {
    // Normalize every row to a <= or = row with non-negated sense, then to an
    // equality with a slack for inequalities. Artificials are added where the
    // slack basis would start infeasible.
    slack_of_row_.assign(m_, -1);
    int width = n_;
    for (int r = 0; r < m_; ++r) {
      if (problem_.rows[r].rel != Relation::Equal) slack_of_row_[r] = width++;
    }
    first_artificial_ = width;

    // Structural part of each row, with >= rows negated to <=.
    std::vector<std::vector<double>> dense(m_, std::vector<double>(width, 0.0));
    rhs_.assign(m_, 0.0);
    for (int r = 0; r < m_; ++r) {
      const LinearRow& row = problem_.rows[r];
      const double sign = row.rel == Relation::GreaterEqual ? -1.0 : 1.0;
      for (const RowTerm& term : row.terms) dense[r][term.var] += sign * term.coeff;
      rhs_[r] = sign * row.rhs;
      if (slack_of_row_[r] >= 0) dense[r][slack_of_row_[r]] = 1.0;
    }

    state_.assign(width, VarState::AtLower);
    xval_ = lo_;
    xval_.resize(width, 0.0);
    lo_.resize(width, 0.0);
    up_.resize(width, kInf);

    // Residuals at the all-nonbasic point decide which rows need an
    // artificial; rows with a negative residual are negated so the basic
    // artificial starts at a non-negative value.
    basis_.assign(m_, -1);
    std::vector<int> artificial_rows;
    for (int r = 0; r < m_; ++r) {
      double residual = rhs_[r];
      for (int j = 0; j < n_; ++j) {
        if (dense[r][j] != 0.0) residual -= dense[r][j] * xval_[j];
      }
      const bool needs_artificial = slack_of_row_[r] < 0 || residual < 0.0;
      if (!needs_artificial) {
        basis_[r] = slack_of_row_[r];
        state_[slack_of_row_[r]] = VarState::Basic;
      } else {
        if (residual < 0.0) {
          for (double& v : dense[r]) v = -v;
          rhs_[r] = -rhs_[r];
        }
        artificial_rows.push_back(r);
      }
    }

    const int total = width + static_cast<int>(artificial_rows.size());
    cols_ = total;
    tab_.assign(static_cast<size_t>(m_) * total, 0.0);
    for (int r = 0; r < m_; ++r) {
      std::copy(dense[r].begin(), dense[r].end(), tab_.begin() + static_cast<size_t>(r) * total);
    }
    state_.resize(total, VarState::AtLower);
    xval_.resize(total, 0.0);
    lo_.resize(total, 0.0);
    up_.resize(total, kInf);
    for (size_t a = 0; a < artificial_rows.size(); ++a) {
      const int r = artificial_rows[a];
      const int col = width + static_cast<int>(a);
      row(r)[col] = 1.0;
      basis_[r] = col;
      state_[col] = VarState::Basic;
    }

    // Reduced-cost rows for both phases, priced out for the initial basis.
    d1_.assign(total, 0.0);
    for (int col = first_artificial_; col < total; ++col) d1_[col] = 1.0;
    for (int r : artificial_rows) {
      const double* tr = row(r);
      for (int j = 0; j < total; ++j) d1_[j] -= tr[j];
    }
    d2_.assign(total, 0.0);
    for (int j = 0; j < n_; ++j) d2_[j] = problem_.objective[j];

    beta_.assign(m_, 0.0);
    refresh_beta();
  }

  double* row(int r) { return tab_.data() + static_cast<size_t>(r) * cols_; }
  const double* row(int r) const { return tab_.data() + static_cast<size_t>(r) * cols_; }

  void refresh_beta() {
    beta_ = rhs_;
    for (int j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::Basic || xval_[j] == 0.0) continue;
      const double v = xval_[j];
      for (int r = 0; r < m_; ++r) {
        const double a = row(r)[j];
        if (a != 0.0) beta_[r] -= a * v;
      }
    }
  }

  double phase1_objective() const {
    double z = 0.0;
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] >= first_artificial_) z += beta_[r];
    }
    return z;
  }

  // Most negative reduced cost under Dantzig, lowest eligible index under
  // Bland. Returns -1 when no column improves.
  int price(const std::vector<double>& d) const {
    int best = -1;
    double best_score = tol::reduced_cost;
    for (int j = 0; j < cols_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      if (lo_[j] >= up_[j]) continue;  // fixed
      double score = 0.0;
      if (state_[j] == VarState::AtLower && d[j] < -tol::reduced_cost) {
        score = -d[j];
      } else if (state_[j] == VarState::AtUpper && d[j] > tol::reduced_cost) {
        score = d[j];
      } else {
        continue;
      }
      if (bland_) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  struct Step {
    double length = kInf;
    int leave_row = -1;  // -1 means the entering variable flips bound
    bool leave_at_upper = false;
  };

  Step ratio_test(int enter, double dir) const {
    Step step;
    if (up_[enter] < kInf) step.length = up_[enter] - lo_[enter];
    double best_pivot = 0.0;
    for (int r = 0; r < m_; ++r) {
      const double alpha = row(r)[enter];
      const double e = dir * alpha;
      if (std::abs(e) <= tol::pivot) continue;
      const int b = basis_[r];
      double t;
      bool hits_upper;
      if (e > 0.0) {  // basic variable decreases toward its lower bound
        t = (beta_[r] - lo_[b]) / e;
        hits_upper = false;
      } else {  // increases toward its upper bound
        if (up_[b] >= kInf) continue;
        t = (up_[b] - beta_[r]) / (-e);
        hits_upper = true;
      }
      if (t < 0.0) t = 0.0;
      const double abs_alpha = std::abs(alpha);
      bool better = false;
      if (t < step.length - 1e-12) {
        better = true;
      } else if (t < step.length + 1e-12 && step.leave_row >= 0) {
        // Tie: Bland needs the lowest basic index for termination; otherwise
        // prefer the numerically larger pivot.
        if (bland_) {
          better = b < basis_[step.leave_row];
        } else if (abs_alpha > best_pivot) {
          better = true;
        } else if (abs_alpha == best_pivot) {
          better = b < basis_[step.leave_row];
        }
      } else if (t < step.length + 1e-12 && step.leave_row < 0 && t < step.length) {
        better = true;
      }
      if (better) {
        step.length = t;
        step.leave_row = r;
        step.leave_at_upper = hits_upper;
        best_pivot = abs_alpha;
      }
    }
    return step;
  }

  void pivot(int enter, double dir, const Step& step, bool update_phase1_costs) {
    const int r = step.leave_row;
    const int leave = basis_[r];
    double* pr = row(r);
    const double piv = pr[enter];
    const double inv = 1.0 / piv;
    for (int j = 0; j < cols_; ++j) pr[j] *= inv;
    pr[enter] = 1.0;  // cut round-off on the unit column
    rhs_[r] *= inv;
    for (int r2 = 0; r2 < m_; ++r2) {
      if (r2 == r) continue;
      double* p2 = row(r2);
      const double f = p2[enter];
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) p2[j] -= f * pr[j];
      p2[enter] = 0.0;
      rhs_[r2] -= f * rhs_[r];
    }
    if (update_phase1_costs) {
      const double f1 = d1_[enter];
      if (f1 != 0.0) {
        for (int j = 0; j < cols_; ++j) d1_[j] -= f1 * pr[j];
        d1_[enter] = 0.0;
      }
    }
    const double f2 = d2_[enter];
    if (f2 != 0.0) {
      for (int j = 0; j < cols_; ++j) d2_[j] -= f2 * pr[j];
      d2_[enter] = 0.0;
    }

    state_[leave] = step.leave_at_upper ? VarState::AtUpper : VarState::AtLower;
    xval_[leave] = step.leave_at_upper ? up_[leave] : lo_[leave];
    // A phase-1 artificial that leaves the basis is fixed at zero for good.
    if (leave >= first_artificial_) up_[leave] = 0.0;
    basis_[r] = enter;
    state_[enter] = VarState::Basic;
    xval_[enter] = xval_[enter] + dir * step.length;  // informational; beta is authoritative
    (void)dir;
  }

  void note_step(double length) {
    if (length <= tol::pivot) {
      if (++degenerate_steps_ >= tol::degenerate_pivot_limit) bland_ = true;
    } else {
      degenerate_steps_ = 0;
    }
  }

  void trace_iteration(int phase, int enter, const Step& step) {
    if (!options_.trace) return;
    std::ostream& os = *options_.trace;
    os << "simplex phase " << phase << " it " << iterations_ << ": enter "
       << (enter < n_ ? problem_.variables[enter].name : "col" + std::to_string(enter));
    if (step.leave_row < 0) {
      os << " flip";
    } else {
      const int leave = basis_[step.leave_row];
      os << " leave "
         << (leave < n_ ? problem_.variables[leave].name : "col" + std::to_string(leave));
    }
    os << " step " << step.length;
    if (phase == 1) os << " infeas " << phase1_objective();
    os << "\n";
  }

  // Runs pricing/ratio/pivot until the phase's reduced costs are clean.
  // Returns false if the phase detected an unbounded direction.
  bool iterate(int phase) {
    std::vector<double>& d = phase == 1 ? d1_ : d2_;
    while (true) {
      const int enter = price(d);
      if (enter < 0) return true;
      const double dir = state_[enter] == VarState::AtLower ? 1.0 : -1.0;
      const Step step = ratio_test(enter, dir);
      if (step.length >= kInf) return false;
      if (++iterations_ > max_iterations_) {
        throw ResourceLimitError("simplex iteration limit (" +
                                     std::to_string(max_iterations_) + ") exceeded",
                                 iterations_, false, 0.0, 0.0);
      }
      trace_iteration(phase, enter, step);
      note_step(step.length);
      if (step.leave_row < 0) {
        state_[enter] = state_[enter] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        xval_[enter] = state_[enter] == VarState::AtUpper ? up_[enter] : lo_[enter];
      } else {
        pivot(enter, dir, step, phase == 1);
      }
      refresh_beta();
    }
  }

  bool phase1() {
    if (first_artificial_ == cols_) return true;  // slack basis feasible
    if (!iterate(1)) {
      // The phase-1 objective is bounded below by zero, so every improving
      // direction hits a bound.
      throw std::logic_error("phase 1 reported an unbounded direction");
    }
    if (phase1_objective() > tol::phase1_infeasible) return false;
    // Pin every artificial at zero; basic ones stay at (numerical) zero and
    // leave on the first pivot that touches their row.
    for (int col = first_artificial_; col < cols_; ++col) {
      up_[col] = 0.0;
      if (state_[col] != VarState::Basic) xval_[col] = 0.0;
    }
    return true;
  }

  bool phase2() { return iterate(2); }

  std::vector<double> structural_values() const {
    std::vector<double> values(n_, 0.0);
    for (int j = 0; j < n_; ++j) {
      values[j] = state_[j] == VarState::Basic ? 0.0 : xval_[j];
    }
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) values[basis_[r]] = beta_[r];
    }
    for (int j = 0; j < n_; ++j) {
      values[j] = std::clamp(values[j], lo_[j], up_[j]);
    }
    return values;
  }

  const LpProblem& problem_;
  const SimplexOptions& options_;
  int n_ = 0;     // structural variables
  int m_ = 0;     // rows
  int cols_ = 0;  // structural + slack + artificial columns
  int first_artificial_ = 0;
  long max_iterations_ = 0;
  long iterations_ = 0;
  int degenerate_steps_ = 0;
  bool bland_ = false;

  std::vector<double> tab_;   // m_ x cols_
  std::vector<double> rhs_;   // reduced right-hand side
  std::vector<double> beta_;  // basic variable values
  std::vector<double> d1_, d2_;
  std::vector<double> lo_, up_, xval_;
  std::vector<int> basis_;
  std::vector<int> slack_of_row_;
  std::vector<VarState> state_;
};

void check_problem_shape(const LpProblem& problem) {
  const size_t n = problem.objective.size();
  if (problem.lower_bounds.size() != n || problem.upper_bounds.size() != n ||
      problem.integral.size() != n || problem.variables.size() != n) {
    throw ValidationError("problem vectors disagree on variable count");
  }
  for (const auto& row : problem.rows) {
    for (const auto& term : row.terms) {
      if (term.var < 0 || static_cast<size_t>(term.var) >= n) {
        throw ValidationError("row '" + row.id + "' references an unknown variable index");
      }
    }
  }
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem, const SimplexOptions& options) {
  return solve_lp(problem, problem.lower_bounds, problem.upper_bounds, options);
}

LpSolution solve_lp(const LpProblem& problem, std::span<const double> lower_bounds,
                    std::span<const double> upper_bounds, const SimplexOptions& options) {
  check_problem_shape(problem);
  if (lower_bounds.size() != problem.objective.size() ||
      upper_bounds.size() != problem.objective.size()) {
    throw ValidationError("bound overrides disagree with the problem's variable count");
  }
  Tableau tableau(problem, lower_bounds, upper_bounds, options);
  return tableau.run();
}

}  // namespace orsched
