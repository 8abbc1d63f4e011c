/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "orsched/detail/numbers.hpp"
#include "orsched/errors.hpp"

namespace orsched {

namespace {

using detail::format_number;

bool valid_token_id(std::string_view s) {
  if (s.empty()) return false;
  return s.find_first_of(" \t\r\n\",") == std::string_view::npos;
}

void check_id(const std::string& id, const char* what) {
  if (!valid_token_id(id)) {
    throw ValidationError(std::string(what) + " id '" + id +
                          "' must be non-empty and free of whitespace, quotes and commas");
  }
}

double parse_number(std::string_view text, const std::string& where) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(where + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

long parse_integer(std::string_view text, const std::string& where) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(where + ": '" + std::string(text) + "' is not an integer");
  }
  return value;
}

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Splits a line into whitespace-separated tokens; double quotes group a token
// that may contain spaces. '#' starts a comment outside quotes.
std::vector<std::string> tokenize(const std::string& line, const std::string& where) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      size_t end = line.find('"', i + 1);
      if (end == std::string::npos) {
        throw ParseError(where + ": unterminated quote");
      }
      tokens.push_back(line.substr(i + 1, end - i - 1));
      i = end + 1;
    } else {
      size_t end = i;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
             line[end] != '\r' && line[end] != '#') {
        ++end;
      }
      tokens.push_back(line.substr(i, end - i));
      i = end;
    }
  }
  return tokens;
}

struct PendingRoomType {
  std::string id;
  int line = 0;
  std::optional<std::string> label;
  std::optional<std::vector<double>> duration;
  std::optional<std::vector<int>> availability;
};

struct PendingDepartment {
  std::string id;
  int line = 0;
  std::optional<std::string> label;
  std::optional<double> target_hours;
  std::optional<double> under_limit;
};

}  // namespace

Instance::Instance(std::vector<std::string> days, std::vector<RoomType> room_types,
                   std::vector<Department> departments)
    : days_(std::move(days)),
      room_types_(std::move(room_types)),
      departments_(std::move(departments)) {
  if (days_.empty()) throw ValidationError("instance needs at least one day");
  if (room_types_.empty()) throw ValidationError("instance needs at least one room type");
  if (departments_.empty()) throw ValidationError("instance needs at least one department");

  std::set<std::string_view> seen;
  for (const auto& day : days_) {
    check_id(day, "day");
    if (!seen.insert(day).second) {
      throw ValidationError("duplicate day label '" + day + "'");
    }
  }

  const size_t day_count = days_.size();
  seen.clear();
  for (const auto& rt : room_types_) {
    check_id(rt.id, "room type");
    if (!seen.insert(rt.id).second) {
      throw ValidationError("duplicate room type id '" + rt.id + "'");
    }
    if (rt.duration_by_day.size() != day_count) {
      throw ValidationError("room type '" + rt.id + "': duration list has " +
                            std::to_string(rt.duration_by_day.size()) + " entries for a " +
                            std::to_string(day_count) + "-day instance");
    }
    if (rt.availability_by_day.size() != day_count) {
      throw ValidationError("room type '" + rt.id + "': availability list has " +
                            std::to_string(rt.availability_by_day.size()) + " entries for a " +
                            std::to_string(day_count) + "-day instance");
    }
    for (double d : rt.duration_by_day) {
      if (!(d >= 0.0) || !std::isfinite(d)) {
        throw ValidationError("room type '" + rt.id + "': duration must be >= 0");
      }
    }
    for (int a : rt.availability_by_day) {
      if (a < 0) {
        throw ValidationError("room type '" + rt.id + "': availability must be >= 0");
      }
    }
  }

  seen.clear();
  for (const auto& dept : departments_) {
    check_id(dept.id, "department");
    if (!seen.insert(dept.id).second) {
      throw ValidationError("duplicate department id '" + dept.id + "'");
    }
    if (!(dept.target_hours > 0.0) || !std::isfinite(dept.target_hours)) {
      throw ValidationError("department '" + dept.id + "': target_hours must be > 0");
    }
    if (!(dept.under_limit >= 0.0) || !std::isfinite(dept.under_limit)) {
      throw ValidationError("department '" + dept.id + "': under_limit must be >= 0");
    }
  }
}

std::optional<int> Instance::find_room_type(std::string_view id) const {
  for (size_t i = 0; i < room_types_.size(); ++i) {
    if (room_types_[i].id == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Instance::find_department(std::string_view id) const {
  for (size_t i = 0; i < departments_.size(); ++i) {
    if (departments_[i].id == id) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<int> Instance::find_day(std::string_view label) const {
  for (size_t i = 0; i < days_.size(); ++i) {
    if (days_[i] == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

Allocation::Allocation(const Instance& instance)
    : room_types_(instance.room_type_count()),
      departments_(instance.department_count()),
      days_(instance.day_count()),
      values_(static_cast<size_t>(room_types_) * departments_ * days_, 0.0) {}

Allocation::Allocation(const Instance& instance, std::vector<double> values)
    : room_types_(instance.room_type_count()),
      departments_(instance.department_count()),
      days_(instance.day_count()),
      values_(std::move(values)) {
  const size_t expected = static_cast<size_t>(room_types_) * departments_ * days_;
  if (values_.size() != expected) {
    throw ValidationError("allocation has " + std::to_string(values_.size()) +
                          " entries, instance shape needs " + std::to_string(expected));
  }
  for (double& v : values_) {
    if (v < 0.0) {
      if (v < -1e-9) {
        throw ValidationError("allocation entry " + format_number(v) + " is negative");
      }
      v = 0.0;
    }
  }
}

bool Allocation::same_shape(const Instance& instance) const {
  return room_types_ == instance.room_type_count() &&
         departments_ == instance.department_count() && days_ == instance.day_count();
}

Instance parse_instance(std::istream& in, const std::string& origin) {
  std::optional<std::vector<std::string>> days;
  std::vector<PendingRoomType> room_types;
  std::vector<PendingDepartment> departments;

  enum class Block { None, RoomType, Department };
  Block block = Block::None;

  auto where = [&origin](int line) { return origin + ":" + std::to_string(line); };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string loc = where(line_no);
    std::vector<std::string> tokens = tokenize(raw, loc);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0];
    auto args = [&](size_t min_count, const char* usage) {
      if (tokens.size() - 1 < min_count) {
        throw ParseError(loc + ": '" + key + "' expects " + usage);
      }
    };

    if (key == "days") {
      if (days) throw ParseError(loc + ": 'days' declared twice");
      args(1, "at least one day label");
      days.emplace(tokens.begin() + 1, tokens.end());
    } else if (key == "room_type") {
      args(1, "an id");
      if (tokens.size() != 2) throw ParseError(loc + ": 'room_type' expects exactly one id");
      room_types.push_back({tokens[1], line_no, {}, {}, {}});
      block = Block::RoomType;
    } else if (key == "department") {
      args(1, "an id");
      if (tokens.size() != 2) throw ParseError(loc + ": 'department' expects exactly one id");
      departments.push_back({tokens[1], line_no, {}, {}, {}});
      block = Block::Department;
    } else if (key == "label") {
      args(1, "a value");
      if (tokens.size() != 2) throw ParseError(loc + ": 'label' expects exactly one value");
      if (block == Block::RoomType) {
        if (room_types.back().label) throw ParseError(loc + ": duplicate 'label'");
        room_types.back().label = tokens[1];
      } else if (block == Block::Department) {
        if (departments.back().label) throw ParseError(loc + ": duplicate 'label'");
        departments.back().label = tokens[1];
      } else {
        throw ParseError(loc + ": 'label' outside a room_type or department block");
      }
    } else if (key == "duration") {
      if (block != Block::RoomType) {
        throw ParseError(loc + ": 'duration' belongs inside a room_type block");
      }
      if (room_types.back().duration) throw ParseError(loc + ": duplicate 'duration'");
      args(1, "one value or one value per day");
      std::vector<double> values;
      for (size_t t = 1; t < tokens.size(); ++t) {
        values.push_back(parse_number(tokens[t], loc + ": duration"));
      }
      room_types.back().duration = std::move(values);
    } else if (key == "availability") {
      if (block != Block::RoomType) {
        throw ParseError(loc + ": 'availability' belongs inside a room_type block");
      }
      if (room_types.back().availability) throw ParseError(loc + ": duplicate 'availability'");
      args(1, "one value or one value per day");
      std::vector<int> values;
      for (size_t t = 1; t < tokens.size(); ++t) {
        values.push_back(static_cast<int>(parse_integer(tokens[t], loc + ": availability")));
      }
      room_types.back().availability = std::move(values);
    } else if (key == "target_hours") {
      if (block != Block::Department) {
        throw ParseError(loc + ": 'target_hours' belongs inside a department block");
      }
      if (departments.back().target_hours) throw ParseError(loc + ": duplicate 'target_hours'");
      args(1, "a value");
      departments.back().target_hours = parse_number(tokens[1], loc + ": target_hours");
    } else if (key == "under_limit") {
      if (block != Block::Department) {
        throw ParseError(loc + ": 'under_limit' belongs inside a department block");
      }
      if (departments.back().under_limit) throw ParseError(loc + ": duplicate 'under_limit'");
      args(1, "a value");
      departments.back().under_limit = parse_number(tokens[1], loc + ": under_limit");
    } else {
      throw ParseError(loc + ": unknown key '" + key + "'");
    }
  }

  if (!days) throw ParseError(origin + ": missing 'days' declaration");
  const int day_count = static_cast<int>(days->size());

  auto broadcast = [day_count](auto list) {
    if (list.size() == 1) list.assign(day_count, list[0]);
    return list;
  };

  std::vector<RoomType> final_rooms;
  for (auto& rt : room_types) {
    const std::string loc = where(rt.line) + ": room_type '" + rt.id + "'";
    if (!rt.label) throw ParseError(loc + ": missing 'label'");
    if (!rt.duration) throw ParseError(loc + ": missing 'duration'");
    if (!rt.availability) throw ParseError(loc + ": missing 'availability'");
    final_rooms.push_back({rt.id, *rt.label, broadcast(std::move(*rt.duration)),
                           broadcast(std::move(*rt.availability))});
  }

  std::vector<Department> final_departments;
  for (auto& dept : departments) {
    const std::string loc = where(dept.line) + ": department '" + dept.id + "'";
    if (!dept.label) throw ParseError(loc + ": missing 'label'");
    if (!dept.target_hours) throw ParseError(loc + ": missing 'target_hours'");
    if (!dept.under_limit) throw ParseError(loc + ": missing 'under_limit'");
    final_departments.push_back({dept.id, *dept.label, *dept.target_hours, *dept.under_limit});
  }

  return Instance(std::move(*days), std::move(final_rooms), std::move(final_departments));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_instance(in, path);
}

void write_instance(const Instance& instance, std::ostream& out) {
  out << "days";
  for (const auto& day : instance.days()) out << ' ' << day;
  out << "\n";

  auto constant = [](const auto& list) {
    return std::all_of(list.begin(), list.end(), [&](auto v) { return v == list.front(); });
  };

  for (const auto& rt : instance.room_types()) {
    out << "\nroom_type " << rt.id << "\n";
    out << "  label        \"" << rt.label << "\"\n";
    out << "  duration    ";
    if (constant(rt.duration_by_day)) {
      out << ' ' << format_number(rt.duration_by_day.front());
    } else {
      for (double d : rt.duration_by_day) out << ' ' << format_number(d);
    }
    out << "\n  availability";
    if (constant(rt.availability_by_day)) {
      out << ' ' << rt.availability_by_day.front();
    } else {
      for (int a : rt.availability_by_day) out << ' ' << a;
    }
    out << "\n";
  }

  for (const auto& dept : instance.departments()) {
    out << "\ndepartment " << dept.id << "\n";
    out << "  label        \"" << dept.label << "\"\n";
    out << "  target_hours " << format_number(dept.target_hours) << "\n";
    out << "  under_limit  " << format_number(dept.under_limit) << "\n";
  }
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  write_instance(instance, out);
  if (!out.flush()) throw ParseError(path + ": write failed");
}

Instance demo_instance() {
  std::vector<std::string> days = {"Mon", "Tue", "Wed", "Thu", "Fri"};
  auto week_d = [](double v) { return std::vector<double>(5, v); };
  auto week_a = [](int v) { return std::vector<int>(5, v); };
  std::vector<RoomType> rooms = {
      {"main-short", "Main short", week_d(7.5), week_a(4)},
      {"main-long", "Main long", week_d(9.0), week_a(4)},
      {"eops-short", "EOPS short", week_d(7.5), week_a(1)},
      {"eops-long", "EOPS long", week_d(8.0), week_a(1)},
  };
  std::vector<Department> departments = {
      {"surgery", "Surgery", 187.0, 10.0},
      {"gynaecology", "Gynaecology", 117.4, 10.0},
      {"ophthalmology", "Ophthalmology", 39.4, 10.0},
      {"oral-surgery", "Oral surgery", 19.9, 10.0},
      {"otolaryngology", "Otolaryngology", 26.3, 10.0},
      {"emergency", "Emergency", 5.4, 3.0},
  };
  return Instance(std::move(days), std::move(rooms), std::move(departments));
}

double total_capacity_hours(const Instance& instance) {
  double total = 0.0;
  for (const auto& rt : instance.room_types()) {
    for (int k = 0; k < instance.day_count(); ++k) {
      total += rt.availability_by_day[k] * rt.duration_by_day[k];
    }
  }
  return total;
}

double total_demand_hours(const Instance& instance) {
  double total = 0.0;
  for (const auto& dept : instance.departments()) total += dept.target_hours;
  return total;
}

}  // namespace orsched
