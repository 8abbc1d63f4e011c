/* SPDX-License-Identifier: Apache-2.0 */
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "orsched/errors.hpp"
#include "orsched/formulation.hpp"
#include "orsched/instance.hpp"

using namespace orsched;

namespace {

Instance two_day_instance() {
  return Instance({"Mon", "Tue"},
                  {{"r1", "Room one", {7.5, 7.5}, {1, 1}}},
                  {{"p1", "Dept one", 15.0, 3.0}});
}

}  // namespace

TEST_CASE("demo model has the documented size in both modes") {
  const Instance demo = demo_instance();
  const LpProblem plain = build_model(demo);
  CHECK(plain.num_variables() == 126);  // 120 room counts + 6 shortfall slacks
  CHECK(plain.num_rows() == 26);        // 20 capacity + 6 goal rows

  FormulationOptions tight;
  tight.tight_mode = true;
  const LpProblem eq = build_model(demo, tight);
  CHECK(eq.num_variables() == 132);
  CHECK(eq.num_rows() == 26);
}

TEST_CASE("objective weighs each shortfall by its reciprocal target") {
  const Instance demo = demo_instance();
  const LpProblem p = build_model(demo);
  const int surgery = demo.find_department("surgery").value();
  const int s = under_var_index(demo, surgery);
  CHECK(p.objective[s] == doctest::Approx(1.0 / 187.0).epsilon(1e-15));
  for (int v = 0; v < 120; ++v) CHECK(p.objective[v] == 0.0);
  CHECK(p.variables[s].name == "s[surgery]");
  CHECK(p.upper_bounds[s] == doctest::Approx(10.0));  // shortfall cap is a bound
}

TEST_CASE("integrality flags cover exactly the room variables when requested") {
  const Instance demo = demo_instance();
  FormulationOptions options;
  options.integer_rooms = true;
  const LpProblem p = build_model(demo, options);
  for (int v = 0; v < p.num_variables(); ++v) {
    CHECK(static_cast<bool>(p.integral[v]) == (p.variables[v].kind == VarKind::Room));
  }
  const LpProblem relaxed = build_model(demo);
  for (int v = 0; v < relaxed.num_variables(); ++v) CHECK(relaxed.integral[v] == 0);
}

TEST_CASE("capacity rows carry availability and goal rows carry durations") {
  const Instance demo = demo_instance();
  const LpProblem p = build_model(demo);
  CHECK(p.rows[0].id == "capacity[main-short,Mon]");
  CHECK(p.rows[0].rhs == doctest::Approx(4.0));
  CHECK(p.rows[0].rel == Relation::LessEqual);
  CHECK(p.rows[0].terms.size() == 6);

  const LinearRow& goal = p.rows[20];
  CHECK(goal.id == "goal[surgery]");
  CHECK(goal.rel == Relation::GreaterEqual);
  CHECK(goal.rhs == doctest::Approx(187.0));
  // 20 room terms plus the shortfall slack.
  CHECK(goal.terms.size() == 21);
  CHECK(goal.terms[0].coeff == doctest::Approx(7.5));   // main-short
  CHECK(goal.terms[5].coeff == doctest::Approx(9.0));   // main-long, Mon
  CHECK(goal.terms.back().var == under_var_index(demo, 0));
  CHECK(goal.terms.back().coeff == doctest::Approx(1.0));
}

TEST_CASE("tight mode turns goal rows into balances with a surplus variable") {
  const Instance demo = demo_instance();
  FormulationOptions options;
  options.tight_mode = true;
  const LpProblem p = build_model(demo, options);
  const LinearRow& goal = p.rows[20];
  CHECK(goal.rel == Relation::Equal);
  CHECK(goal.terms.size() == 22);
  CHECK(goal.terms.back().var == over_var_index(demo, 0));
  CHECK(goal.terms.back().coeff == doctest::Approx(-1.0));
  CHECK(p.variables[over_var_index(demo, 0)].name == "splus[surgery]");
  CHECK(p.objective[over_var_index(demo, 0)] == 0.0);
}

TEST_CASE("variable order is rooms by (type, department, day), then slacks") {
  const Instance demo = demo_instance();
  const LpProblem p = build_model(demo);
  CHECK(p.variables[0].name == "x[main-short,surgery,Mon]");
  CHECK(p.variables[1].name == "x[main-short,surgery,Tue]");
  CHECK(p.variables[5].name == "x[main-short,gynaecology,Mon]");
  CHECK(room_var_index(demo, 1, 0, 0) == 30);
  CHECK(p.variables[30].name == "x[main-long,surgery,Mon]");
  CHECK(under_var_index(demo, 0) == 120);
  CHECK(over_var_index(demo, 0) == 126);
}

TEST_CASE("allocation round-trips through a solution vector") {
  const Instance inst = two_day_instance();
  Allocation alloc(inst);
  std::vector<double> values{1.0, 2.0, 0.0};  // x[r1,p1,Mon], x[r1,p1,Tue], s[p1]
  const Allocation out = extract_allocation(inst, values);
  CHECK(out.at(0, 0, 0) == 1.0);
  CHECK(out.at(0, 0, 1) == 2.0);
  CHECK_THROWS_AS(extract_allocation(inst, std::vector<double>{1.0}), ValidationError);
}

TEST_CASE("complete_solution fills slacks from the schedule") {
  const Instance inst = two_day_instance();
  const LpProblem p = build_model(inst);
  Allocation alloc(inst, {1.0, 0.0});  // 7.5 of 15 hours, shortfall 7.5 > limit 3
  CHECK_FALSE(complete_solution(inst, p, alloc).has_value());

  Allocation enough(inst, {1.0, 1.0});
  const auto full = complete_solution(inst, p, enough);
  REQUIRE(full.has_value());
  CHECK((*full)[2] == doctest::Approx(0.0));  // no shortfall

  FormulationOptions tight_options;
  tight_options.tight_mode = true;
  const LpProblem tight = build_model(inst, tight_options);
  Allocation over(inst, {1.0, 1.0});
  const auto balanced = complete_solution(inst, tight, over);
  REQUIRE(balanced.has_value());
  CHECK((*balanced)[2] == doctest::Approx(0.0));  // s
  CHECK((*balanced)[3] == doctest::Approx(0.0));  // splus; 15 hits the target exactly
}

TEST_CASE("anchor objective weighs only room variables, favoring early days") {
  const Instance demo = demo_instance();
  const LpProblem p = build_model(demo);
  const std::vector<double> anchor = anchor_objective(demo, p);
  REQUIRE(static_cast<int>(anchor.size()) == p.num_variables());
  for (int v = 0; v < p.num_variables(); ++v) {
    if (p.variables[v].kind == VarKind::Room) {
      CHECK(anchor[v] < 0.0);
    } else {
      CHECK(anchor[v] == 0.0);
    }
  }
  // Minimization pushes toward early days: Monday outweighs Friday.
  CHECK(anchor[room_var_index(demo, 0, 0, 0)] < anchor[room_var_index(demo, 0, 0, 4)]);
  CHECK(anchor == anchor_objective(demo, p));
}

TEST_CASE("problem dump is stable for golden comparison") {
  const Instance inst = two_day_instance();
  FormulationOptions options;
  options.integer_rooms = true;
  const std::string dump = dump_problem(build_model(inst, options));
  CHECK(dump ==
        "min: 0.06666666666666667 s[p1]\n"
        "row capacity[r1,Mon]: 1 x[r1,p1,Mon] <= 1\n"
        "row capacity[r1,Tue]: 1 x[r1,p1,Tue] <= 1\n"
        "row goal[p1]: 7.5 x[r1,p1,Mon] + 7.5 x[r1,p1,Tue] + 1 s[p1] >= 15\n"
        "0 <= x[r1,p1,Mon] <= inf (integer)\n"
        "0 <= x[r1,p1,Tue] <= inf (integer)\n"
        "0 <= s[p1] <= 3\n");
}

TEST_CASE("inconsistent problems are rejected") {
  LpProblem p;
  p.objective = {1.0};
  p.lower_bounds = {0.0};
  p.upper_bounds = {1.0};
  p.integral = {0};
  p.variables.resize(1);
  LinearRow bad;
  bad.id = "bad";
  bad.terms.push_back({7, 1.0});
  p.rows.push_back(bad);
  CHECK_THROWS_AS(p.check_consistent(), ValidationError);
}
