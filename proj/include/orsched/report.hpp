/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <string>
#include <vector>

#include "orsched/instance.hpp"

namespace orsched {

struct DepartmentLine {
  std::string id;
  std::string label;
  double target = 0.0;
  double allocated = 0.0;  // hours received across all room types and days
  double under = 0.0;      // max(0, target - allocated)
  double over = 0.0;       // max(0, allocated - target)
  long percent = 0;        // 100 * allocated / target, rounded half away from zero

  bool operator==(const DepartmentLine&) const = default;
};

struct Violation {
  std::string constraint;  // row or variable this violates, e.g. "capacity[main-short,Mon]"
  double magnitude = 0.0;  // how far past the limit

  bool operator==(const Violation&) const = default;
};

struct ScheduleReport {
  std::vector<DepartmentLine> departments;
  double objective = 0.0;  // sum of under / target over departments
  double total_target = 0.0;
  double total_allocated = 0.0;
  double total_under = 0.0;
  double total_over = 0.0;
  bool feasible = true;
  std::vector<Violation> violations;

  bool operator==(const ScheduleReport&) const = default;
};

struct ValidationOptions {
  bool require_integral = false;
  // Slack applied to capacity, shortfall-limit and nonnegativity checks.
  // Integrality, when required, is always judged at 1e-6.
  double tolerance = 1e-6;
};

// Itemized constraint violations, empty when the allocation is feasible.
// Deterministic order: capacity rows, then shortfall limits, then negative
// entries, then fractional entries.
std::vector<Violation> validate_schedule(const Instance& instance, const Allocation& allocation,
                                         const ValidationOptions& options = {});

ScheduleReport evaluate_schedule(const Instance& instance, const Allocation& allocation,
                                 const ValidationOptions& options = {});

enum class ReportFormat { Text, Json, Csv };

std::string render_report(const ScheduleReport& report, ReportFormat format);

// Inverse of render_report for the json format.
ScheduleReport report_from_json(const std::string& text);

}  // namespace orsched
