// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/cli/commands.h"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pwlmip/cli/bench.h"
#include "pwlmip/errors.h"
#include "pwlmip/formulations/formulations.h"
#include "pwlmip/ideality/ideality.h"
#include "pwlmip/mip/branch_and_bound.h"
#include "pwlmip/model/lp_writer.h"
#include "pwlmip/pwl/pwl_json.h"

namespace pwlmip::cli {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

Method method_or_throw(const std::string& name) {
  const std::optional<Method> m = parse_method(name);
  if (!m) throw InputError("unknown method '" + name + "'");
  return *m;
}

std::optional<IndicatorVariant> indicator_or_throw(const std::string& name) {
  if (name.empty()) return std::nullopt;
  const std::optional<IndicatorVariant> v = parse_indicator(name);
  if (!v) throw InputError("unknown indicator variant '" + name + "'");
  return v;
}

std::string counts_summary(const VarCounts& c) {
  return "(" + std::to_string(c.continuous) + " continuous, " +
         std::to_string(c.binary) + " binary)";
}

struct BuildArgs {
  std::string input;
  std::string method;
  std::string indicator;
  std::string out;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const PwlFunction f = load_pwl(a.input);
  const Method method = method_or_throw(a.method);
  const auto indicator = indicator_or_throw(a.indicator);
  Model model;
  Fragment frag = build_fragment(model, f, method);
  if (indicator) frag = with_binary_indicator(model, std::move(frag), *indicator);
  model.set_objective(frag.objective, Sense::kMaximize);

  const std::string summary = std::string(method_name(method)) + ": " +
                              counts_summary(count_vars(frag)) + ", " +
                              std::to_string(model.num_constraints()) +
                              " rows";
  if (a.out.empty()) {
    write_lp(model, out);
    err << summary << '\n';
    return kExitOk;
  }
  std::ofstream file(a.out);
  if (!file) throw InputError("cannot write '" + a.out + "'");
  write_lp(model, file);
  file.close();
  if (!file) throw InputError("failed writing '" + a.out + "'");
  out << summary << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string input;
  std::string method;
  std::string sense = "max";
  std::int64_t n = 1;
  std::optional<double> fix_x;
  std::string indicator;
  bool json = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const PwlFunction f = load_pwl(a.input);
  const Method method = method_or_throw(a.method);
  const auto indicator = indicator_or_throw(a.indicator);
  if (a.sense != "max" && a.sense != "min") {
    throw InputError("sense must be 'max' or 'min'");
  }
  if (a.n < 1) throw InputError("--n must be positive");
  const Sense sense = a.sense == "max" ? Sense::kMaximize : Sense::kMinimize;

  const std::vector<PwlFunction> copies(static_cast<std::size_t>(a.n), f);
  SeparableModel built = separable_sum(copies, method, sense, indicator);
  if (a.fix_x) {
    for (const Fragment& frag : built.fragments) {
      built.model.add_constraint({{{frag.x, 1.0}}, Relation::kEqual, *a.fix_x,
                                  frag.prefix + "fix_x"});
    }
  }
  const MilpSolution sol = solve_milp(built.model);

  const char* status = "optimal";
  int code = kExitOk;
  switch (sol.status) {
    case MilpStatus::kOptimal: break;
    case MilpStatus::kInfeasible: status = "infeasible"; code = kExitInfeasible; break;
    case MilpStatus::kUnbounded: status = "unbounded"; code = kExitFailure; break;
    case MilpStatus::kFeasible: status = "feasible"; break;
    case MilpStatus::kNoSolution: status = "no-solution"; code = kExitFailure; break;
  }
  const bool has_point = code == kExitOk;

  if (a.json) {
    nlohmann::json j;
    j["status"] = status;
    if (has_point) {
      j["objective"] = sol.objective;
      std::vector<double> xs;
      for (const Fragment& frag : built.fragments) {
        xs.push_back(sol.values[frag.x.index()]);
      }
      j["x"] = xs;
    }
    j["nodes"] = sol.stats.nodes;
    j["lp_iterations"] = sol.stats.lp_iterations;
    j["components"] = sol.stats.components;
    j["seconds"] = sol.stats.wall_seconds;
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << status << '\n';
    if (has_point) {
      out << "objective: " << num(sol.objective) << '\n';
      for (std::size_t n = 0; n < built.fragments.size(); ++n) {
        out << "x[" << n << "] = "
            << num(sol.values[built.fragments[n].x.index()]) << '\n';
      }
    }
    out << "nodes: " << sol.stats.nodes << '\n'
        << "lp_iterations: " << sol.stats.lp_iterations << '\n'
        << "seconds: " << num(sol.stats.wall_seconds) << '\n';
  }
  if (code == kExitInfeasible) err << "model is infeasible\n";
  return code;
}

struct IdealityArgs {
  std::string input;
  std::string method;
  std::string indicator;
  std::optional<double> a0;
};

int cmd_check_ideality(const IdealityArgs& a, std::ostream& out) {
  PwlFunction f = load_pwl(a.input);
  if (a.a0) f = shift_domain(f, *a.a0);
  const auto indicator = indicator_or_throw(a.indicator);
  const Method method = a.method.empty()
                            ? (f.continuity() == Continuity::kLeftContinuous
                                   ? Method::kIncrementalLeft
                                   : f.continuity() == Continuity::kRightContinuous
                                         ? Method::kIncrementalRight
                                         : Method::kIncrementalContinuous)
                            : method_or_throw(a.method);

  Model model;
  Fragment frag = build_fragment(model, f, method);
  if (indicator) frag = with_binary_indicator(model, std::move(frag), *indicator);
  const Model relaxed = relax(model);
  IdealityReport report =
      check_local_ideality(relaxed, binary_coordinates(frag));
  if (indicator) report.flagged = check_flagged_points(*indicator, f);

  nlohmann::json j = report_to_json(report);
  j["method"] = method_name(method);
  if (indicator) j["indicator"] = indicator_name(*indicator);
  out << j.dump(2) << '\n';
  return report.integral ? kExitOk : kExitFractional;
}

struct BenchArgs {
  std::string fixture;
  std::vector<std::int64_t> sizes{1000, 5000, 10000, 20000};
  bool pretty = false;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  const std::optional<BenchFixture> fixture = parse_fixture(a.fixture);
  if (!fixture) throw InputError("fixture must be 'table1' or 'table2'");
  for (std::int64_t n : a.sizes) {
    if (n < 1) throw InputError("sizes must be positive");
  }
  const std::vector<BenchResult> results =
      run_bench(*fixture, a.sizes, row_cap_from_env());
  if (a.pretty) {
    print_bench_pretty(results, out);
  } else {
    print_bench_tsv(results, out);
  }
  for (const BenchResult& r : results) {
    if (!r.skipped && !r.objective_ok) return kExitFailure;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Piecewise linear MILP formulations"};
  app.name("pwlmip");
  app.require_subcommand(1);

  BuildArgs build;
  CLI::App* sub_build = app.add_subcommand("build", "Write the LP text of one fragment");
  sub_build->add_option("input", build.input, "function JSON")->required();
  sub_build->add_option("--method", build.method, "incr|incr-right|incr-left|cc|cc-disc")
      ->required();
  sub_build->add_option("--indicator", build.indicator, "fim|pim|pim-prime");
  sub_build->add_option("--out", build.out, "LP output path (stdout if absent)");

  SolveArgs solve;
  CLI::App* sub_solve = app.add_subcommand("solve", "Solve a separable sum of copies");
  sub_solve->add_option("input", solve.input, "function JSON")->required();
  sub_solve->add_option("--method", solve.method)->required();
  sub_solve->add_option("--sense", solve.sense, "max|min");
  sub_solve->add_option("--n", solve.n, "number of copies");
  sub_solve->add_option("--fix-x", solve.fix_x, "fix every x to this value");
  sub_solve->add_option("--indicator", solve.indicator);
  sub_solve->add_flag("--json", solve.json);

  IdealityArgs ideal;
  CLI::App* sub_ideal = app.add_subcommand(
      "check-ideality", "Enumerate the relaxation's vertices exactly");
  sub_ideal->add_option("input", ideal.input, "function JSON")->required();
  sub_ideal->add_option("--method", ideal.method);
  sub_ideal->add_option("--indicator", ideal.indicator);
  sub_ideal->add_option("--a0", ideal.a0, "shift the domain to start here");

  BenchArgs bench;
  CLI::App* sub_bench = app.add_subcommand("bench", "Benchmark the table fixtures");
  sub_bench->add_option("fixture", bench.fixture, "table1|table2")->required();
  sub_bench->add_option("--sizes", bench.sizes)->delimiter(',');
  sub_bench->add_flag("--pretty", bench.pretty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sub_build) return cmd_build(build, out, err);
    if (*sub_solve) return cmd_solve(solve, out, err);
    if (*sub_ideal) return cmd_check_ideality(ideal, out);
    if (*sub_bench) return cmd_bench(bench, out);
  } catch (const DimensionGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const WrongMethodError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnsupportedFunctionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InexactCoefficientError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace pwlmip::cli
