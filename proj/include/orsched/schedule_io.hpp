/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "orsched/instance.hpp"

namespace orsched {

// Schedule interchange grid: header `room_type,department,<day>,...` with the
// instance's day labels in order, then one row of per-day room counts for
// each (room type, department) pair. Pairs left out read as zero; a pair
// listed twice is an error.
Allocation parse_schedule_csv(std::istream& in, const Instance& instance,
                              const std::string& origin);
std::string schedule_to_csv(const Instance& instance, const Allocation& allocation);

// Reads either the CSV grid or a json document with an "allocation" array as
// written by the solve and report commands; the two are told apart by the
// first non-space byte.
Allocation parse_schedule(std::istream& in, const Instance& instance, const std::string& origin);
Allocation load_schedule(const std::string& path, const Instance& instance);

void save_schedule_csv(const Instance& instance, const Allocation& allocation,
                       const std::string& path);

// The "allocation" array embedded in json documents: one object per
// (room type, department) pair with the per-day counts.
nlohmann::json allocation_json(const Instance& instance, const Allocation& allocation);

}  // namespace orsched
