/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orsched/instance.hpp"

namespace orsched {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct RowTerm {
  int var = -1;
  double coeff = 0.0;
};

struct LinearRow {
  std::string id;  // e.g. "capacity[main-short,Mon]"
  std::vector<RowTerm> terms;
  Relation rel = Relation::LessEqual;
  double rhs = 0.0;
};

enum class VarKind { Room, Under, Over };

struct VarInfo {
  VarKind kind = VarKind::Room;
  int room_type = -1;   // set for Room
  int department = -1;  // set for all kinds
  int day = -1;         // set for Room
  std::string name;     // "x[main-short,surgery,Mon]", "s[surgery]", "splus[surgery]"
};

/// Solver-neutral linear program in minimization sense. Variable order is
/// deterministic: all room variables in lexicographic (room type, department,
/// day) order, then one under-allocation slack per department, then (only in
/// tight mode) one over-allocation surplus per department.
struct LpProblem {
  std::vector<double> objective;
  std::vector<LinearRow> rows;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;  // +infinity where unbounded
  std::vector<std::uint8_t> integral;
  std::vector<VarInfo> variables;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  /// Throws ValidationError on any internal inconsistency (length mismatch,
  /// out-of-range variable reference).
  void check_consistent() const;
};

struct FormulationOptions {
  /// Room-count variables are integral (the integer approach) or continuous
  /// (the relaxed approach).
  bool integer_rooms = false;
  /// Off: the literal under-allocation model. On: equality goal rows with an
  /// explicit over-allocation surplus per department, used by the
  /// lexicographic second stage.
  bool tight_mode = false;
};

/// Builds the weekly under-allocation goal program for an instance:
/// minimize the sum of under-allocated hours weighted by 1/target, subject to
/// per-day room capacity and per-department goal rows, with each department's
/// shortfall capped by its allowable limit (encoded as a variable bound).
LpProblem build_model(const Instance& instance, const FormulationOptions& options = {});

/// Variable index helpers mirroring the deterministic ordering above.
int room_var_index(const Instance& instance, int room_type, int department, int day);
int under_var_index(const Instance& instance, int department);
int over_var_index(const Instance& instance, int department);

/// Reads the room variables of a solution's value vector back into an
/// Allocation. The values must come from a model built from this instance.
Allocation extract_allocation(const Instance& instance, std::span<const double> values);

/// Completes a schedule to a full variable vector for a model built from
/// this instance: room counts from the allocation, each department's
/// shortfall slack, and, for equality-form models, its surplus. Returns
/// nullopt when a shortfall exceeds its department's limit, since no
/// feasible completion exists then.
std::optional<std::vector<double>> complete_solution(const Instance& instance,
                                                     const LpProblem& model,
                                                     const Allocation& allocation);

/// Tie-break objective for branch and bound on models of this instance:
/// among alternate optima of a node relaxation, prefer schedules packed
/// toward early days, with slight department and room-type skews. Days,
/// departments, and room types are often interchangeable in a relaxation
/// optimum; without an anchor the search wanders among equivalent fractional
/// vertices instead of converging. Length matches the model's variable count
/// (slack variables get weight zero).
std::vector<double> anchor_objective(const Instance& instance, const LpProblem& model);

/// Debug text dump: objective, one constraint per line, then bounds.
/// Used by golden tests; not an exchange format.
std::string dump_problem(const LpProblem& problem);

}  // namespace orsched
