/* SPDX-License-Identifier: Apache-2.0 */
#include <doctest.h>

#include <sstream>
#include <vector>

#include "orsched/errors.hpp"
#include "orsched/instance.hpp"

using namespace orsched;

namespace {

Instance parse(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in, "test");
}

const char* kTinyFile = R"(days Mon Tue
room_type r1
  label "Room one"
  duration 7.5
  availability 2 1
department p1
  label "Dept one"
  target_hours 12
  under_limit 3
)";

}  // namespace

TEST_CASE("built-in instance has the published shape and totals") {
  const Instance demo = demo_instance();
  CHECK(demo.day_count() == 5);
  CHECK(demo.room_type_count() == 4);
  CHECK(demo.department_count() == 6);
  CHECK(total_capacity_hours(demo) == doctest::Approx(407.5).epsilon(1e-12));
  CHECK(total_demand_hours(demo) == doctest::Approx(395.4).epsilon(1e-12));
  CHECK(demo.departments()[0].target_hours == doctest::Approx(187.0));
  CHECK(demo.departments()[0].under_limit == doctest::Approx(10.0));
  CHECK(demo.departments()[5].under_limit == doctest::Approx(3.0));
}

TEST_CASE("scalar duration broadcasts over the week, lists stay per day") {
  const Instance inst = parse(kTinyFile);
  REQUIRE(inst.room_type_count() == 1);
  const RoomType& rt = inst.room_types()[0];
  CHECK(rt.duration_by_day == std::vector<double>{7.5, 7.5});
  CHECK(rt.availability_by_day == std::vector<int>{2, 1});
  CHECK(inst.departments()[0].label == "Dept one");
}

TEST_CASE("write then parse is an identity") {
  const Instance demo = demo_instance();
  std::ostringstream out;
  write_instance(demo, out);
  const Instance back = parse(out.str());
  REQUIRE(back.day_count() == demo.day_count());
  REQUIRE(back.room_type_count() == demo.room_type_count());
  REQUIRE(back.department_count() == demo.department_count());
  for (int i = 0; i < demo.room_type_count(); ++i) {
    CHECK(back.room_types()[i].id == demo.room_types()[i].id);
    CHECK(back.room_types()[i].label == demo.room_types()[i].label);
    CHECK(back.room_types()[i].duration_by_day == demo.room_types()[i].duration_by_day);
    CHECK(back.room_types()[i].availability_by_day == demo.room_types()[i].availability_by_day);
  }
  for (int j = 0; j < demo.department_count(); ++j) {
    CHECK(back.departments()[j].id == demo.departments()[j].id);
    CHECK(back.departments()[j].label == demo.departments()[j].label);
    CHECK(back.departments()[j].target_hours == demo.departments()[j].target_hours);
    CHECK(back.departments()[j].under_limit == demo.departments()[j].under_limit);
  }
}

TEST_CASE("lookup helpers resolve ids and reject strangers") {
  const Instance demo = demo_instance();
  CHECK(demo.find_room_type("eops-long").value() == 3);
  CHECK(demo.find_department("emergency").value() == 5);
  CHECK(demo.find_day("Wed").value() == 2);
  CHECK_FALSE(demo.find_room_type("cardiology").has_value());
  CHECK_FALSE(demo.find_day("Sun").has_value());
}

TEST_CASE("parse failures name the file, line, and offending key") {
  CHECK_THROWS_WITH_AS(parse("bogus_key 1\n"), "test:1: unknown key 'bogus_key'", ParseError);
  CHECK_THROWS_AS(parse("days Mon\ndays Tue\n"), ParseError);
  CHECK_THROWS_AS(parse("duration 5\n"), ParseError);       // outside any block
  CHECK_THROWS_AS(parse("days Mon\nroom_type r\n  label \"r\"\n  duration 1\n"),
                  ParseError);                              // missing availability
  CHECK_THROWS_AS(parse("room_type r\n  duration one\n"), ParseError);  // not a number
  CHECK_THROWS_AS(parse(std::string(kTinyFile) + "department p2\n"), ParseError);  // bare block
}

TEST_CASE("domain rules reject nonsense quantities") {
  // Wrong duration arity: 3 values against 2 days.
  CHECK_THROWS_AS(
      parse("days Mon Tue\nroom_type r\n  label \"r\"\n  duration 1 2 3\n  availability 1\n"),
      ValidationError);
  // Zero target.
  CHECK_THROWS_AS(parse("days Mon\ndepartment p\n  label \"p\"\n  target_hours 0\n"
                        "  under_limit 0\n"),
                  ValidationError);
  // Negative limit.
  CHECK_THROWS_AS(parse("days Mon\ndepartment p\n  label \"p\"\n  target_hours 5\n"
                        "  under_limit -1\n"),
                  ValidationError);
  // Negative availability.
  CHECK_THROWS_AS(
      parse("days Mon\nroom_type r\n  label \"r\"\n  duration 1\n  availability -2\n"),
      ValidationError);
  // Duplicate department id.
  CHECK_THROWS_AS(parse(std::string(kTinyFile) +
                        "department p1\n  label \"again\"\n  target_hours 1\n  under_limit 0\n"),
                  ValidationError);
}

TEST_CASE("allocation clamps float dust and rejects real negatives") {
  const Instance inst = parse(kTinyFile);
  std::vector<double> values{1.0, -1e-12};
  const Allocation ok(inst, std::move(values));
  CHECK(ok.at(0, 0, 1) == 0.0);
  CHECK(ok.at(0, 0, 0) == 1.0);
  CHECK(ok.same_shape(inst));
  CHECK_THROWS_AS(Allocation(inst, std::vector<double>{1.0, -0.5}), ValidationError);
  CHECK_THROWS_AS(Allocation(inst, std::vector<double>{1.0}), ValidationError);
}

TEST_CASE("load reports unreadable paths as parse errors") {
  CHECK_THROWS_AS(load_instance("/nonexistent/nowhere.dat"), ParseError);
}
