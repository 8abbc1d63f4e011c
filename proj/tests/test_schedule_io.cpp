/* SPDX-License-Identifier: Apache-2.0 */
#include <doctest.h>

#include <sstream>
#include <string>

#include <json.hpp>

#include "orsched/errors.hpp"
#include "orsched/instance.hpp"
#include "orsched/schedule_io.hpp"

using namespace orsched;

namespace {

Instance grid_instance() {
  return Instance({"Mon", "Tue"},
                  {{"r1", "Room one", {7.5, 7.5}, {2, 2}},
                   {"r2", "Room two", {9.0, 9.0}, {1, 1}}},
                  {{"p1", "Dept one", 15.0, 3.0}, {"p2", "Dept two", 9.0, 3.0}});
}

Allocation sample_allocation(const Instance& inst) {
  // r1 rows: p1 {1,2}, p2 {0,0}; r2 rows: p1 {0,0}, p2 {1,0}.
  return Allocation(inst, {1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
}

Allocation parse_text(const std::string& text, const Instance& inst) {
  std::istringstream in(text);
  return parse_schedule(in, inst, "mem");
}

}  // namespace

TEST_CASE("csv grid survives a write and read cycle") {
  const Instance inst = grid_instance();
  const Allocation original = sample_allocation(inst);
  const std::string csv = schedule_to_csv(inst, original);
  CHECK(csv.rfind("room_type,department,Mon,Tue\n", 0) == 0);

  std::istringstream in(csv);
  const Allocation back = parse_schedule_csv(in, inst, "mem");
  CHECK(back.values() == original.values());
}

TEST_CASE("pairs left out of the grid read as zero") {
  const Instance inst = grid_instance();
  const Allocation got = parse_text(
      "room_type,department,Mon,Tue\n"
      "r1,p1,1,2\n",
      inst);
  CHECK(got.at(0, 0, 0) == 1.0);
  CHECK(got.at(0, 0, 1) == 2.0);
  CHECK(got.at(0, 1, 0) == 0.0);
  CHECK(got.at(1, 0, 0) == 0.0);
  CHECK(got.at(1, 1, 1) == 0.0);
}

TEST_CASE("a pair listed twice is rejected") {
  const Instance inst = grid_instance();
  CHECK_THROWS_WITH_AS(parse_text("room_type,department,Mon,Tue\n"
                                  "r1,p1,1,0\n"
                                  "r1,p1,0,1\n",
                                  inst),
                       "mem:3: duplicate row for (r1, p1)", ParseError);
}

TEST_CASE("unknown identifiers are rejected with their location") {
  const Instance inst = grid_instance();
  CHECK_THROWS_WITH_AS(parse_text("room_type,department,Mon,Tue\n"
                                  "r9,p1,1,0\n",
                                  inst),
                       "mem:2: unknown room type 'r9'", ParseError);
  CHECK_THROWS_WITH_AS(parse_text("room_type,department,Mon,Tue\n"
                                  "r1,p9,1,0\n",
                                  inst),
                       "mem:2: unknown department 'p9'", ParseError);
  CHECK_THROWS_AS(parse_text("room_type,department,Mon,Tue\n"
                             "r1,p1,1,oops\n",
                             inst),
                  ParseError);
}

TEST_CASE("day columns must match the instance order") {
  const Instance inst = grid_instance();
  CHECK_THROWS_WITH_AS(parse_text("room_type,department,Tue,Mon\n"
                                  "r1,p1,1,0\n",
                                  inst),
                       "mem:1: day column 'Tue' does not match instance day 'Mon'", ParseError);
  CHECK_THROWS_AS(parse_text("room_type,department,Mon\n", inst), ParseError);
  CHECK_THROWS_AS(parse_text("", inst), ParseError);
}

TEST_CASE("rows need a count for every day") {
  const Instance inst = grid_instance();
  CHECK_THROWS_WITH_AS(parse_text("room_type,department,Mon,Tue\n"
                                  "r1,p1,1\n",
                                  inst),
                       "mem:2: expected 4 fields, found 3", ParseError);
}

TEST_CASE("negative counts are rejected") {
  const Instance inst = grid_instance();
  CHECK_THROWS_AS(parse_text("room_type,department,Mon,Tue\n"
                             "r1,p1,-1,0\n",
                             inst),
                  ParseError);
}

TEST_CASE("json schedules round-trip through the allocation array") {
  const Instance inst = grid_instance();
  const Allocation original = sample_allocation(inst);
  nlohmann::json doc;
  doc["allocation"] = allocation_json(inst, original);
  const Allocation back = parse_text(doc.dump(), inst);
  CHECK(back.values() == original.values());
}

TEST_CASE("json schedules validate identifiers and day counts") {
  const Instance inst = grid_instance();
  CHECK_THROWS_AS(parse_text(R"({"allocation": [{"room_type": "r9", "department": "p1", "counts": [1, 0]}]})",
                             inst),
                  ParseError);
  CHECK_THROWS_AS(parse_text(R"({"allocation": [{"room_type": "r1", "department": "p1", "counts": [1]}]})",
                             inst),
                  ParseError);
  CHECK_THROWS_AS(parse_text(R"({"allocation": [{"room_type": "r1", "department": "p1", "counts": [1, 0]},
                                                {"room_type": "r1", "department": "p1", "counts": [0, 1]}]})",
                             inst),
                  ParseError);
  // Documents without the allocation array and broken json both fail cleanly.
  CHECK_THROWS_AS(parse_text(R"({"objective": 0})", inst), ParseError);
  CHECK_THROWS_AS(parse_text("{not json", inst), ParseError);
}

TEST_CASE("loading a missing schedule file reports the path") {
  const Instance inst = grid_instance();
  CHECK_THROWS_WITH_AS(load_schedule("/nonexistent/schedule.csv", inst),
                       "cannot open file '/nonexistent/schedule.csv'", ParseError);
}
