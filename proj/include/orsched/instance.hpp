/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orsched {

/// One category of operating room. Duration and availability are per day so
/// a room type may run different hours on different days; the file format
/// accepts a scalar and broadcasts it over the week.
struct RoomType {
  std::string id;
  std::string label;
  std::vector<double> duration_by_day;   // hours the room runs on day k
  std::vector<int> availability_by_day;  // rooms of this type open on day k
};

/// A department demanding weekly operating-room hours.
struct Department {
  std::string id;
  std::string label;
  double target_hours = 0.0;  // requested hours per week, must be > 0
  double under_limit = 0.0;   // most the department may fall short, >= 0
};

/// Immutable problem input: the week, the rooms, and the demands.
/// Declaration order is the canonical index order; every module downstream
/// numbers variables from it.
class Instance {
 public:
  Instance(std::vector<std::string> days, std::vector<RoomType> room_types,
           std::vector<Department> departments);

  const std::vector<std::string>& days() const { return days_; }
  const std::vector<RoomType>& room_types() const { return room_types_; }
  const std::vector<Department>& departments() const { return departments_; }

  int day_count() const { return static_cast<int>(days_.size()); }
  int room_type_count() const { return static_cast<int>(room_types_.size()); }
  int department_count() const { return static_cast<int>(departments_.size()); }

  std::optional<int> find_room_type(std::string_view id) const;
  std::optional<int> find_department(std::string_view id) const;
  std::optional<int> find_day(std::string_view label) const;

 private:
  std::vector<std::string> days_;
  std::vector<RoomType> room_types_;
  std::vector<Department> departments_;
};

/// Room counts per (room type, department, day). Entries are non-negative;
/// integrality is a property of how the schedule was produced, not of the
/// container.
class Allocation {
 public:
  /// All-zero allocation shaped like the instance.
  explicit Allocation(const Instance& instance);

  /// Takes ownership of a dense value vector laid out as (i, j, k) row-major.
  /// Entries in [-1e-9, 0) are clamped to zero; anything more negative is
  /// rejected.
  Allocation(const Instance& instance, std::vector<double> values);

  double at(int room_type, int department, int day) const {
    return values_[index(room_type, department, day)];
  }
  const std::vector<double>& values() const { return values_; }

  int room_type_count() const { return room_types_; }
  int department_count() const { return departments_; }
  int day_count() const { return days_; }

  bool same_shape(const Instance& instance) const;

 private:
  int index(int i, int j, int k) const {
    return (i * departments_ + j) * days_ + k;
  }

  int room_types_ = 0;
  int departments_ = 0;
  int days_ = 0;
  std::vector<double> values_;
};

Instance parse_instance(std::istream& in, const std::string& origin);
Instance load_instance(const std::string& path);
void write_instance(const Instance& instance, std::ostream& out);
void save_instance(const Instance& instance, const std::string& path);

/// The built-in six-department demo instance (same data as `--demo`).
Instance demo_instance();

/// Sum over rooms and days of availability times duration.
double total_capacity_hours(const Instance& instance);

/// Sum of the departments' weekly targets.
double total_demand_hours(const Instance& instance);

}  // namespace orsched
