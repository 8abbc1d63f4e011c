/* SPDX-License-Identifier: Apache-2.0 */
#include "orsched/schedule_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orsched/detail/numbers.hpp"
#include "orsched/errors.hpp"

namespace orsched {

namespace {

using detail::format_number;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(trim(current));
  return fields;
}

double parse_count(const std::string& text, const std::string& where) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(where + ": '" + text + "' is not a number");
  }
  return value;
}

Allocation finish(const Instance& instance, std::vector<double> values,
                  const std::string& origin) {
  try {
    return Allocation(instance, std::move(values));
  } catch (const ValidationError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

Allocation allocation_from_json(const nlohmann::json& doc, const Instance& instance,
                                const std::string& origin) {
  const int J = instance.department_count();
  const int K = instance.day_count();
  std::vector<double> values(
      static_cast<size_t>(instance.room_type_count()) * J * K, 0.0);
  std::set<std::pair<int, int>> seen;
  const auto& rows = doc.at("allocation");
  if (!rows.is_array()) throw ParseError(origin + ": 'allocation' must be an array");
  for (const auto& row : rows) {
    const std::string rt_id = row.at("room_type").get<std::string>();
    const std::string dept_id = row.at("department").get<std::string>();
    const auto rt = instance.find_room_type(rt_id);
    if (!rt) throw ParseError(origin + ": unknown room type '" + rt_id + "'");
    const auto dept = instance.find_department(dept_id);
    if (!dept) throw ParseError(origin + ": unknown department '" + dept_id + "'");
    if (!seen.insert({*rt, *dept}).second) {
      throw ParseError(origin + ": duplicate allocation row for (" + rt_id + ", " + dept_id + ")");
    }
    const auto& counts = row.at("counts");
    if (!counts.is_array() || static_cast<int>(counts.size()) != K) {
      throw ParseError(origin + ": 'counts' for (" + rt_id + ", " + dept_id + ") must list " +
                       std::to_string(K) + " days");
    }
    for (int k = 0; k < K; ++k) {
      values[(static_cast<size_t>(*rt) * J + *dept) * K + k] = counts[k].get<double>();
    }
  }
  return finish(instance, std::move(values), origin);
}

}  // namespace

Allocation parse_schedule_csv(std::istream& in, const Instance& instance,
                              const std::string& origin) {
  const int J = instance.department_count();
  const int K = instance.day_count();
  std::vector<double> values(
      static_cast<size_t>(instance.room_type_count()) * J * K, 0.0);
  std::set<std::pair<int, int>> seen;

  std::string line;
  int line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string where = origin + ":" + std::to_string(line_number);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields = split_csv(line);
    if (!header_seen) {
      if (fields.size() != static_cast<size_t>(K) + 2 || fields[0] != "room_type" ||
          fields[1] != "department") {
        throw ParseError(where + ": header must be 'room_type,department' followed by the " +
                         std::to_string(K) + " day labels");
      }
      for (int k = 0; k < K; ++k) {
        if (fields[static_cast<size_t>(k) + 2] != instance.days()[k]) {
          throw ParseError(where + ": day column '" + fields[static_cast<size_t>(k) + 2] +
                           "' does not match instance day '" + instance.days()[k] + "'");
        }
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != static_cast<size_t>(K) + 2) {
      throw ParseError(where + ": expected " + std::to_string(K + 2) + " fields, found " +
                       std::to_string(fields.size()));
    }
    const auto rt = instance.find_room_type(fields[0]);
    if (!rt) throw ParseError(where + ": unknown room type '" + fields[0] + "'");
    const auto dept = instance.find_department(fields[1]);
    if (!dept) throw ParseError(where + ": unknown department '" + fields[1] + "'");
    if (!seen.insert({*rt, *dept}).second) {
      throw ParseError(where + ": duplicate row for (" + fields[0] + ", " + fields[1] + ")");
    }
    for (int k = 0; k < K; ++k) {
      values[(static_cast<size_t>(*rt) * J + *dept) * K + k] =
          parse_count(fields[static_cast<size_t>(k) + 2], where);
    }
  }
  if (!header_seen) throw ParseError(origin + ": schedule file is empty");
  return finish(instance, std::move(values), origin);
}

std::string schedule_to_csv(const Instance& instance, const Allocation& allocation) {
  std::string out = "room_type,department";
  for (const std::string& day : instance.days()) {
    out += ',';
    out += day;
  }
  out += '\n';
  for (int i = 0; i < instance.room_type_count(); ++i) {
    for (int j = 0; j < instance.department_count(); ++j) {
      out += instance.room_types()[i].id;
      out += ',';
      out += instance.departments()[j].id;
      for (int k = 0; k < instance.day_count(); ++k) {
        out += ',';
        out += format_number(allocation.at(i, j, k));
      }
      out += '\n';
    }
  }
  return out;
}

Allocation parse_schedule(std::istream& in, const Instance& instance, const std::string& origin) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(origin + ": not valid json: " + e.what());
    }
    try {
      return allocation_from_json(doc, instance, origin);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(origin + ": json schedule is missing fields: " + e.what());
    }
  }
  std::istringstream csv(text);
  return parse_schedule_csv(csv, instance, origin);
}

Allocation load_schedule(const std::string& path, const Instance& instance) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  return parse_schedule(in, instance, path);
}

void save_schedule_csv(const Instance& instance, const Allocation& allocation,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open file '" + path + "' for writing");
  out << schedule_to_csv(instance, allocation);
}

nlohmann::json allocation_json(const Instance& instance, const Allocation& allocation) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < instance.room_type_count(); ++i) {
    for (int j = 0; j < instance.department_count(); ++j) {
      nlohmann::json counts = nlohmann::json::array();
      for (int k = 0; k < instance.day_count(); ++k) counts.push_back(allocation.at(i, j, k));
      rows.push_back({{"room_type", instance.room_types()[i].id},
                      {"department", instance.departments()[j].id},
                      {"counts", std::move(counts)}});
    }
  }
  return rows;
}

}  // namespace orsched
