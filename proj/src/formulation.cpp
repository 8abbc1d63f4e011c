/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "orsched/detail/numbers.hpp"
#include "orsched/errors.hpp"

namespace orsched {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::format_number;

}  // namespace

void LpProblem::check_consistent() const {
  const size_t n = objective.size();
  if (lower_bounds.size() != n || upper_bounds.size() != n || integral.size() != n ||
      variables.size() != n) {
    throw ValidationError("problem vectors disagree on variable count");
  }
  for (const auto& row : rows) {
    for (const auto& term : row.terms) {
      if (term.var < 0 || static_cast<size_t>(term.var) >= n) {
        throw ValidationError("row '" + row.id + "' references variable " +
                              std::to_string(term.var) + " outside 0.." +
                              std::to_string(n ? n - 1 : 0));
      }
    }
  }
  for (size_t j = 0; j < n; ++j) {
    if (!(lower_bounds[j] <= upper_bounds[j])) {
      throw ValidationError("variable '" + variables[j].name + "' has empty bound interval");
    }
    if (!std::isfinite(lower_bounds[j])) {
      throw ValidationError("variable '" + variables[j].name + "' needs a finite lower bound");
    }
  }
}

int room_var_index(const Instance& instance, int room_type, int department, int day) {
  return (room_type * instance.department_count() + department) * instance.day_count() + day;
}

int under_var_index(const Instance& instance, int department) {
  return instance.room_type_count() * instance.department_count() * instance.day_count() +
         department;
}

int over_var_index(const Instance& instance, int department) {
  return instance.room_type_count() * instance.department_count() * instance.day_count() +
         instance.department_count() + department;
}

LpProblem build_model(const Instance& instance, const FormulationOptions& options) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();

  for (const auto& dept : instance.departments()) {
    if (!(dept.target_hours > 0.0)) {
      throw ValidationError("department '" + dept.id + "': target_hours must be > 0");
    }
  }

  LpProblem p;
  const int room_vars = I * J * K;
  const int total_vars = room_vars + J + (options.tight_mode ? J : 0);
  p.objective.assign(total_vars, 0.0);
  p.lower_bounds.assign(total_vars, 0.0);
  p.upper_bounds.assign(total_vars, kInf);
  p.integral.assign(total_vars, 0);
  p.variables.resize(total_vars);

  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      for (int k = 0; k < K; ++k) {
        const int v = room_var_index(instance, i, j, k);
        p.variables[v] = {VarKind::Room, i, j, k,
                          "x[" + instance.room_types()[i].id + "," +
                              instance.departments()[j].id + "," + instance.days()[k] + "]"};
        p.integral[v] = options.integer_rooms ? 1 : 0;
      }
    }
  }
  for (int j = 0; j < J; ++j) {
    const auto& dept = instance.departments()[j];
    const int s = under_var_index(instance, j);
    p.variables[s] = {VarKind::Under, -1, j, -1, "s[" + dept.id + "]"};
    p.objective[s] = 1.0 / dept.target_hours;
    p.upper_bounds[s] = dept.under_limit;  // shortfall cap as a bound, not a row
  }
  if (options.tight_mode) {
    for (int j = 0; j < J; ++j) {
      const int sp = over_var_index(instance, j);
      p.variables[sp] = {VarKind::Over, -1, j, -1,
                         "splus[" + instance.departments()[j].id + "]"};
    }
  }

  // Per (room type, day): the departments cannot use more rooms than exist.
  for (int i = 0; i < I; ++i) {
    const auto& rt = instance.room_types()[i];
    for (int k = 0; k < K; ++k) {
      LinearRow row;
      row.id = "capacity[" + rt.id + "," + instance.days()[k] + "]";
      row.rel = Relation::LessEqual;
      row.rhs = rt.availability_by_day[k];
      row.terms.reserve(J);
      for (int j = 0; j < J; ++j) {
        row.terms.push_back({room_var_index(instance, i, j, k), 1.0});
      }
      p.rows.push_back(std::move(row));
    }
  }

  // Per department: allocated hours plus the shortfall cover the target.
  // Tight mode pins the balance exactly with an explicit surplus variable.
  for (int j = 0; j < J; ++j) {
    const auto& dept = instance.departments()[j];
    LinearRow row;
    row.id = "goal[" + dept.id + "]";
    row.rhs = dept.target_hours;
    row.terms.reserve(static_cast<size_t>(I) * K + 2);
    for (int i = 0; i < I; ++i) {
      const auto& rt = instance.room_types()[i];
      for (int k = 0; k < K; ++k) {
        row.terms.push_back({room_var_index(instance, i, j, k), rt.duration_by_day[k]});
      }
    }
    row.terms.push_back({under_var_index(instance, j), 1.0});
    if (options.tight_mode) {
      row.rel = Relation::Equal;
      row.terms.push_back({over_var_index(instance, j), -1.0});
    } else {
      row.rel = Relation::GreaterEqual;
    }
    p.rows.push_back(std::move(row));
  }

  p.check_consistent();
  return p;
}

Allocation extract_allocation(const Instance& instance, std::span<const double> values) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  const size_t room_vars = static_cast<size_t>(I) * J * K;
  const size_t plain = room_vars + J;
  const size_t tight = room_vars + 2 * static_cast<size_t>(J);
  if (values.size() != plain && values.size() != tight) {
    throw ValidationError("solution has " + std::to_string(values.size()) +
                          " variables; a model for this instance has " + std::to_string(plain) +
                          " or " + std::to_string(tight));
  }
  std::vector<double> rooms(values.begin(), values.begin() + room_vars);
  return Allocation(instance, std::move(rooms));
}

std::optional<std::vector<double>> complete_solution(const Instance& instance,
                                                     const LpProblem& model,
                                                     const Allocation& allocation) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  const bool tight = model.num_variables() == I * J * K + 2 * J;
  std::vector<double> values(model.num_variables(), 0.0);
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      for (int k = 0; k < K; ++k) {
        values[room_var_index(instance, i, j, k)] = allocation.at(i, j, k);
      }
    }
  }
  for (int j = 0; j < J; ++j) {
    const auto& dept = instance.departments()[j];
    // Summed in goal-row term order so the residual cancels exactly.
    double allocated = 0.0;
    for (int i = 0; i < I; ++i) {
      const auto& rt = instance.room_types()[i];
      for (int k = 0; k < K; ++k) {
        allocated += rt.duration_by_day[k] * allocation.at(i, j, k);
      }
    }
    const double under = std::max(0.0, dept.target_hours - allocated);
    if (under > dept.under_limit) return std::nullopt;
    values[under_var_index(instance, j)] = under;
    if (tight) {
      values[over_var_index(instance, j)] = std::max(0.0, allocated - dept.target_hours);
    }
  }
  return values;
}

std::vector<double> anchor_objective(const Instance& instance, const LpProblem& model) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  std::vector<double> weights(model.num_variables(), 0.0);
  for (int i = 0; i < I; ++i) {
    const auto& rt = instance.room_types()[i];
    for (int j = 0; j < J; ++j) {
      for (int k = 0; k < K; ++k) {
        // Early days dominate; the skews only separate otherwise identical
        // columns. Negative weight: the solver minimizes.
        const double skew = (1.0 + (j + 1) / (8.0 * J)) * (1.0 + (i + 1) / (16.0 * I));
        weights[room_var_index(instance, i, j, k)] =
            -rt.duration_by_day[k] * (K - k) * skew;
      }
    }
  }
  return weights;
}

std::string dump_problem(const LpProblem& problem) {
  std::ostringstream out;
  out << "min:";
  bool first = true;
  for (int j = 0; j < problem.num_variables(); ++j) {
    if (problem.objective[j] == 0.0) continue;
    out << (first ? " " : " + ") << format_number(problem.objective[j]) << " "
        << problem.variables[j].name;
    first = false;
  }
  if (first) out << " 0";
  out << "\n";
  for (const auto& row : problem.rows) {
    out << "row " << row.id << ":";
    for (size_t t = 0; t < row.terms.size(); ++t) {
      const double c = row.terms[t].coeff;
      if (t == 0) {
        out << " " << format_number(c);
      } else {
        out << (c < 0 ? " - " : " + ") << format_number(std::abs(c));
      }
      out << " " << problem.variables[row.terms[t].var].name;
    }
    switch (row.rel) {
      case Relation::LessEqual: out << " <= "; break;
      case Relation::GreaterEqual: out << " >= "; break;
      case Relation::Equal: out << " = "; break;
    }
    out << format_number(row.rhs) << "\n";
  }
  for (int j = 0; j < problem.num_variables(); ++j) {
    out << format_number(problem.lower_bounds[j]) << " <= " << problem.variables[j].name
        << " <= " << format_number(problem.upper_bounds[j]);
    if (problem.integral[j]) out << " (integer)";
    out << "\n";
  }
  return out.str();
}

}  // namespace orsched
