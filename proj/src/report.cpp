/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "orsched/detail/numbers.hpp"
#include "orsched/errors.hpp"
#include "orsched/tolerances.hpp"

namespace orsched {

namespace {

using detail::format_number;

std::string room_var_name(const Instance& instance, int i, int j, int k) {
  return "x[" + instance.room_types()[i].id + "," + instance.departments()[j].id + "," +
         instance.days()[k] + "]";
}

nlohmann::json to_json(const ScheduleReport& report) {
  nlohmann::json doc;
  doc["objective"] = report.objective;
  doc["total_target_hours"] = report.total_target;
  doc["total_allocated_hours"] = report.total_allocated;
  doc["total_under_hours"] = report.total_under;
  doc["total_over_hours"] = report.total_over;
  doc["feasible"] = report.feasible;
  doc["violations"] = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    doc["violations"].push_back({{"constraint", v.constraint}, {"magnitude", v.magnitude}});
  }
  doc["departments"] = nlohmann::json::array();
  for (const DepartmentLine& line : report.departments) {
    doc["departments"].push_back({{"id", line.id},
                                  {"label", line.label},
                                  {"target", line.target},
                                  {"allocated", line.allocated},
                                  {"under", line.under},
                                  {"over", line.over},
                                  {"percent", line.percent}});
  }
  return doc;
}

std::string render_text(const ScheduleReport& report) {
  size_t name_width = 10;
  for (const DepartmentLine& line : report.departments) {
    name_width = std::max(name_width, line.label.size());
  }
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << std::left << std::setw(static_cast<int>(name_width)) << "department" << std::right
      << std::setw(10) << "target" << std::setw(11) << "allocated" << std::setw(9) << "under"
      << std::setw(9) << "over" << std::setw(9) << "percent" << "\n";
  for (const DepartmentLine& line : report.departments) {
    out << std::left << std::setw(static_cast<int>(name_width)) << line.label << std::right
        << std::setw(10) << line.target << std::setw(11) << line.allocated << std::setw(9)
        << line.under << std::setw(9) << line.over << std::setw(9) << line.percent << "\n";
  }
  out << std::left << std::setw(static_cast<int>(name_width)) << "total" << std::right
      << std::setw(10) << report.total_target << std::setw(11) << report.total_allocated
      << std::setw(9) << report.total_under << std::setw(9) << report.total_over << "\n";
  out << "objective " << std::setprecision(6) << report.objective << "\n";
  out << "feasible: " << (report.feasible ? "yes" : "no") << "\n";
  if (!report.violations.empty()) {
    out << "violations:\n" << std::setprecision(6);
    for (const Violation& v : report.violations) {
      out << "  " << v.constraint << " exceeded by " << v.magnitude << "\n";
    }
  }
  return out.str();
}

std::string render_csv(const ScheduleReport& report) {
  std::string out = "id,allocated,under,over,percent\n";
  for (const DepartmentLine& line : report.departments) {
    out += line.id;
    out += ',';
    out += format_number(line.allocated);
    out += ',';
    out += format_number(line.under);
    out += ',';
    out += format_number(line.over);
    out += ',';
    out += std::to_string(line.percent);
    out += '\n';
  }
  return out;
}

}  // namespace

std::vector<Violation> validate_schedule(const Instance& instance, const Allocation& allocation,
                                         const ValidationOptions& options) {
  if (!allocation.same_shape(instance)) {
    throw ValidationError("allocation dimensions do not match the instance");
  }
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  std::vector<Violation> violations;

  for (int i = 0; i < I; ++i) {
    const RoomType& rt = instance.room_types()[i];
    for (int k = 0; k < K; ++k) {
      double used = 0.0;
      for (int j = 0; j < J; ++j) used += allocation.at(i, j, k);
      const double limit = rt.availability_by_day[k];
      if (used > limit + options.tolerance) {
        violations.push_back(
            Violation{"capacity[" + rt.id + "," + instance.days()[k] + "]", used - limit});
      }
    }
  }

  for (int j = 0; j < J; ++j) {
    const Department& dept = instance.departments()[j];
    double allocated = 0.0;
    for (int i = 0; i < I; ++i) {
      const RoomType& rt = instance.room_types()[i];
      for (int k = 0; k < K; ++k) allocated += rt.duration_by_day[k] * allocation.at(i, j, k);
    }
    const double under = std::max(0.0, dept.target_hours - allocated);
    if (under > dept.under_limit + options.tolerance) {
      violations.push_back(Violation{"goal[" + dept.id + "]", under - dept.under_limit});
    }
  }

  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      for (int k = 0; k < K; ++k) {
        const double v = allocation.at(i, j, k);
        if (v < -options.tolerance) {
          violations.push_back(Violation{"nonnegative[" + room_var_name(instance, i, j, k) + "]", -v});
        }
      }
    }
  }

  if (options.require_integral) {
    for (int i = 0; i < I; ++i) {
      for (int j = 0; j < J; ++j) {
        for (int k = 0; k < K; ++k) {
          const double v = allocation.at(i, j, k);
          const double dist = std::abs(v - std::llround(v));
          if (dist > tol::integrality) {
            violations.push_back(
                Violation{"integral[" + room_var_name(instance, i, j, k) + "]", dist});
          }
        }
      }
    }
  }
  return violations;
}

ScheduleReport evaluate_schedule(const Instance& instance, const Allocation& allocation,
                                 const ValidationOptions& options) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  ScheduleReport report;
  report.violations = validate_schedule(instance, allocation, options);
  report.feasible = report.violations.empty();

  for (int j = 0; j < J; ++j) {
    const Department& dept = instance.departments()[j];
    DepartmentLine line;
    line.id = dept.id;
    line.label = dept.label;
    line.target = dept.target_hours;
    for (int i = 0; i < I; ++i) {
      const RoomType& rt = instance.room_types()[i];
      for (int k = 0; k < K; ++k) {
        line.allocated += rt.duration_by_day[k] * allocation.at(i, j, k);
      }
    }
    line.under = std::max(0.0, line.target - line.allocated);
    line.over = std::max(0.0, line.allocated - line.target);
    line.percent = std::llround(100.0 * line.allocated / line.target);
    report.objective += line.under / line.target;
    report.total_target += line.target;
    report.total_allocated += line.allocated;
    report.total_under += line.under;
    report.total_over += line.over;
    report.departments.push_back(std::move(line));
  }
  return report;
}

std::string render_report(const ScheduleReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text:
      return render_text(report);
    case ReportFormat::Json:
      return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv:
      return render_csv(report);
  }
  return {};
}

ScheduleReport report_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report is not valid json: ") + e.what());
  }
  try {
    ScheduleReport report;
    report.objective = doc.at("objective").get<double>();
    report.total_target = doc.at("total_target_hours").get<double>();
    report.total_allocated = doc.at("total_allocated_hours").get<double>();
    report.total_under = doc.at("total_under_hours").get<double>();
    report.total_over = doc.at("total_over_hours").get<double>();
    report.feasible = doc.at("feasible").get<bool>();
    for (const auto& item : doc.at("violations")) {
      report.violations.push_back(Violation{item.at("constraint").get<std::string>(),
                                            item.at("magnitude").get<double>()});
    }
    for (const auto& item : doc.at("departments")) {
      DepartmentLine line;
      line.id = item.at("id").get<std::string>();
      line.label = item.at("label").get<std::string>();
      line.target = item.at("target").get<double>();
      line.allocated = item.at("allocated").get<double>();
      line.under = item.at("under").get<double>();
      line.over = item.at("over").get<double>();
      line.percent = item.at("percent").get<long>();
      report.departments.push_back(std::move(line));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report json is missing fields: ") + e.what());
  }
}

}  // namespace orsched
