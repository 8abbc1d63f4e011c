/* SPDX-License-Identifier: Apache-2.0 */
#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orsched/branch_and_bound.hpp"
#include "orsched/detail/numbers.hpp"
#include "orsched/errors.hpp"
#include "orsched/formulation.hpp"
#include "orsched/heuristics.hpp"
#include "orsched/instance.hpp"
#include "orsched/oracle.hpp"
#include "orsched/report.hpp"
#include "orsched/schedule_io.hpp"
#include "orsched/simplex.hpp"

namespace {

using namespace orsched;
using detail::format_number;

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInput = 3;
constexpr int kExitLimit = 4;

struct SolveArgs {
  std::string instance_path;
  bool demo = false;
  bool integer = false;
  bool relaxed = false;
  bool tight = false;
  bool verbose = false;
  std::string format = "text";
  std::string out_path;
};

struct ValidateArgs {
  std::string instance_path;
  std::string schedule_path;
  bool integral = false;
  double tolerance = 1e-6;
};

struct ReportArgs {
  std::string instance_path;
  std::string schedule_path;
  std::string format = "text";
};

struct OracleArgs {
  std::string instance_path;
  bool demo = false;
};

ReportFormat parse_format(const std::string& name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return ReportFormat::Text;
}

Instance load_or_demo(bool demo, const std::string& path) {
  if (demo) return demo_instance();
  if (path.empty()) throw ParseError("an instance file or --demo is required");
  return load_instance(path);
}

// Names a department whose target minus limit exceeds the whole week's
// hours, when one exists; interactions between departments get the generic
// message.
std::string infeasibility_detail(const Instance& instance) {
  const double capacity = total_capacity_hours(instance);
  for (const Department& dept : instance.departments()) {
    const double needed = dept.target_hours - dept.under_limit;
    if (capacity < needed - 1e-9) {
      std::ostringstream os;
      os << "department '" << dept.id << "' must receive at least " << needed
         << " hours (target " << dept.target_hours << " minus limit " << dept.under_limit
         << ") but the week offers only " << capacity;
      return os.str();
    }
  }
  return "no schedule satisfies every department's shortfall limit";
}

void print_grid(std::ostream& os, const Instance& instance, const Allocation& alloc) {
  const int I = instance.room_type_count();
  const int J = instance.department_count();
  const int K = instance.day_count();
  size_t rt_width = 9;    // "room_type"
  size_t dept_width = 10;  // "department"
  for (const RoomType& rt : instance.room_types()) rt_width = std::max(rt_width, rt.id.size());
  for (const Department& d : instance.departments()) dept_width = std::max(dept_width, d.id.size());
  std::vector<size_t> day_width(K);
  for (int k = 0; k < K; ++k) {
    day_width[k] = instance.days()[k].size();
    for (int i = 0; i < I; ++i) {
      for (int j = 0; j < J; ++j) {
        day_width[k] = std::max(day_width[k], format_number(alloc.at(i, j, k)).size());
      }
    }
  }
  os << std::left << std::setw(static_cast<int>(rt_width)) << "room_type" << "  "
     << std::setw(static_cast<int>(dept_width)) << "department";
  for (int k = 0; k < K; ++k) {
    os << "  " << std::right << std::setw(static_cast<int>(day_width[k])) << instance.days()[k]
       << std::left;
  }
  os << "\n";
  for (int i = 0; i < I; ++i) {
    for (int j = 0; j < J; ++j) {
      os << std::left << std::setw(static_cast<int>(rt_width)) << instance.room_types()[i].id
         << "  " << std::setw(static_cast<int>(dept_width)) << instance.departments()[j].id;
      for (int k = 0; k < K; ++k) {
        os << "  " << std::right << std::setw(static_cast<int>(day_width[k]))
           << format_number(alloc.at(i, j, k)) << std::left;
      }
      os << "\n";
    }
  }
}

int run_solve(const SolveArgs& args) {
  const Instance instance = load_or_demo(args.demo, args.instance_path);
  const ReportFormat format = parse_format(args.format);

  nlohmann::json solver_info;
  Allocation alloc(instance);
  std::string status_line = "optimal";
  int exit_code = kExitOk;
  if (args.tight) {
    try {
      const LexicographicResult lex = solve_lexicographic(instance);
      if (lex.stage1.status != MilpStatus::Optimal) {
        std::cerr << "infeasible: " << infeasibility_detail(instance) << "\n";
        return kExitInfeasible;
      }
      alloc = extract_allocation(instance, lex.stage2.values);
      solver_info = {{"mode", "lexicographic"},
                     {"status", "optimal"},
                     {"objective", lex.stage1.objective},
                     {"stage1_objective", lex.stage1.objective},
                     {"stage2_objective", lex.stage2.objective},
                     {"nodes", lex.stage1.nodes + lex.stage2.nodes},
                     {"lp_iterations", lex.stage1.lp_iterations + lex.stage2.lp_iterations}};
      if (args.verbose) {
        std::cerr << "stage 1: objective " << lex.stage1.objective << ", " << lex.stage1.nodes
                  << " nodes, " << lex.stage1.lp_iterations << " lp iterations\n"
                  << "stage 2: objective " << lex.stage2.objective << ", " << lex.stage2.nodes
                  << " nodes, " << lex.stage2.lp_iterations << " lp iterations\n";
      }
    } catch (const ResourceLimitError& e) {
      // The search ran out of nodes but holds a feasible schedule; report it
      // with the remaining gap instead of discarding the work.
      if (!e.has_incumbent) throw;
      alloc = extract_allocation(instance, e.best_values);
      solver_info = {{"mode", "lexicographic"},
                     {"status", "node-limit"},
                     {"best_objective", e.best_objective},
                     {"bound_gap", e.bound_gap},
                     {"nodes", e.count}};
      status_line = "node-limit (best schedule found; bound gap " +
                    format_number(e.bound_gap) + ")";
      exit_code = kExitLimit;
      if (args.verbose) {
        std::cerr << "node limit: best objective " << e.best_objective << ", bound gap "
                  << e.bound_gap << "\n";
      }
    }
  } else if (args.relaxed) {
    const LpProblem model = build_model(instance, FormulationOptions{});
    const LpSolution sol = solve_lp(model);
    if (sol.status == LpStatus::Infeasible) {
      std::cerr << "infeasible: " << infeasibility_detail(instance) << "\n";
      return kExitInfeasible;
    }
    if (sol.status == LpStatus::Unbounded) {
      std::cerr << "the objective is unbounded below\n";
      return kExitInfeasible;
    }
    alloc = extract_allocation(instance, sol.values);
    solver_info = {{"mode", "relaxed"},
                   {"status", "optimal"},
                   {"objective", sol.objective},
                   {"lp_iterations", sol.iterations}};
    if (args.verbose) {
      std::cerr << "relaxation: objective " << sol.objective << ", " << sol.iterations
                << " lp iterations\n";
    }
  } else {
    FormulationOptions options;
    options.integer_rooms = true;
    const LpProblem model = build_model(instance, options);
    BnbOptions search;
    search.secondary_objective = anchor_objective(instance, model);
    if (const auto cover = cover_schedule(instance)) {
      search.warm_start = complete_solution(instance, model, *cover);
    }
    try {
      const MilpResult res = solve_milp(model, search);
      if (res.status != MilpStatus::Optimal) {
        std::cerr << "infeasible: " << infeasibility_detail(instance) << "\n";
        return kExitInfeasible;
      }
      alloc = extract_allocation(instance, res.values);
      solver_info = {{"mode", "integer"},
                     {"status", "optimal"},
                     {"objective", res.objective},
                     {"nodes", res.nodes},
                     {"lp_iterations", res.lp_iterations}};
      if (args.verbose) {
        std::cerr << "search: objective " << res.objective << ", " << res.nodes << " nodes, "
                  << res.lp_iterations << " lp iterations\n";
      }
    } catch (const ResourceLimitError& e) {
      if (!e.has_incumbent) throw;
      alloc = extract_allocation(instance, e.best_values);
      solver_info = {{"mode", "integer"},
                     {"status", "node-limit"},
                     {"best_objective", e.best_objective},
                     {"bound_gap", e.bound_gap},
                     {"nodes", e.count}};
      status_line = "node-limit (best schedule found; bound gap " +
                    format_number(e.bound_gap) + ")";
      exit_code = kExitLimit;
      if (args.verbose) {
        std::cerr << "node limit: best objective " << e.best_objective << ", bound gap "
                  << e.bound_gap << "\n";
      }
    }
  }

  const ScheduleReport report = evaluate_schedule(instance, alloc);
  if (!args.out_path.empty()) save_schedule_csv(instance, alloc, args.out_path);

  switch (format) {
    case ReportFormat::Text:
      std::cout << "status: " << status_line << "\n\n";
      print_grid(std::cout, instance, alloc);
      std::cout << "\n" << render_report(report, ReportFormat::Text);
      break;
    case ReportFormat::Json: {
      nlohmann::json doc = nlohmann::json::parse(render_report(report, ReportFormat::Json));
      doc["allocation"] = allocation_json(instance, alloc);
      doc["solver"] = solver_info;
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case ReportFormat::Csv:
      std::cout << render_report(report, ReportFormat::Csv);
      break;
  }
  return exit_code;
}

int run_validate(const ValidateArgs& args) {
  const Instance instance = load_or_demo(false, args.instance_path);
  const Allocation alloc = load_schedule(args.schedule_path, instance);
  ValidationOptions options;
  options.require_integral = args.integral;
  options.tolerance = args.tolerance;
  const std::vector<Violation> violations = validate_schedule(instance, alloc, options);
  if (violations.empty()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cerr << "invalid: " << violations.size()
            << (violations.size() == 1 ? " violation\n" : " violations\n");
  for (const Violation& v : violations) {
    std::cerr << "  " << v.constraint << " exceeded by " << format_number(v.magnitude) << "\n";
  }
  return kExitInvalid;
}

int run_report(const ReportArgs& args) {
  const Instance instance = load_or_demo(false, args.instance_path);
  const Allocation alloc = load_schedule(args.schedule_path, instance);
  const ScheduleReport report = evaluate_schedule(instance, alloc);
  const ReportFormat format = parse_format(args.format);
  if (format == ReportFormat::Json) {
    nlohmann::json doc = nlohmann::json::parse(render_report(report, ReportFormat::Json));
    doc["allocation"] = allocation_json(instance, alloc);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << render_report(report, format);
  }
  return kExitOk;
}

int run_oracle(const OracleArgs& args) {
  const Instance instance = load_or_demo(args.demo, args.instance_path);
  const OracleResult result = brute_force(instance);
  if (!result.feasible) {
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }
  std::cout << "primary " << format_number(result.primary) << "\n"
            << "secondary " << format_number(result.secondary) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weekly operating room scheduler"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance and print the schedule");
  solve->add_option("instance", solve_args.instance_path, "instance file");
  solve->add_flag("--demo", solve_args.demo, "use the built-in six-department instance");
  auto* integer_flag =
      solve->add_flag("--integer", solve_args.integer, "whole rooms per day (default)");
  auto* relaxed_flag =
      solve->add_flag("--relaxed", solve_args.relaxed, "allow fractional room counts");
  relaxed_flag->excludes(integer_flag);
  solve->add_flag("--tight", solve_args.tight, "two-stage solve: also minimize over-allocation")
      ->excludes(relaxed_flag);
  solve->add_option("--format", solve_args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("ORSCHED_FORMAT");
  solve->add_option("--out", solve_args.out_path, "write the schedule grid to this csv file");
  solve->add_flag("--verbose", solve_args.verbose, "solver statistics on stderr");

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "check a schedule against an instance");
  validate->add_option("instance", validate_args.instance_path, "instance file")->required();
  validate->add_option("schedule", validate_args.schedule_path, "schedule file (csv grid or json)")
      ->required();
  validate->add_flag("--integral", validate_args.integral, "require whole room counts");
  validate->add_option("--tolerance", validate_args.tolerance,
                       "slack allowed on every constraint check");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand("report", "evaluate a schedule and print the accounting");
  report->add_option("instance", report_args.instance_path, "instance file")->required();
  report->add_option("schedule", report_args.schedule_path, "schedule file (csv grid or json)")
      ->required();
  report->add_option("--format", report_args.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("ORSCHED_FORMAT");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force ground truth for tiny instances");
  oracle->group("");  // debugging aid, hidden from help
  oracle->add_option("instance", oracle_args.instance_path, "instance file");
  oracle->add_flag("--demo", oracle_args.demo, "use the built-in instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (validate->parsed()) return run_validate(validate_args);
    if (report->parsed()) return run_report(report_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    if (e.has_incumbent) {
      std::cerr << "best schedule found so far has objective " << e.best_objective
                << " (bound gap " << e.bound_gap << ")\n";
    }
    return kExitLimit;
  } catch (const SearchSpaceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInput;
  }
}
