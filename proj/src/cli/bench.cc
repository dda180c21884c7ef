// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/cli/bench.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "pwlmip/mip/branch_and_bound.h"

namespace pwlmip::cli {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string format_double(double v, const char* fmt = "%.10g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

std::optional<BenchFixture> parse_fixture(std::string_view name) {
  if (name == "table1") return BenchFixture::kTable1;
  if (name == "table2") return BenchFixture::kTable2;
  return std::nullopt;
}

PwlFunction fixture_function(BenchFixture fixture) {
  return PwlFunction({0.0, 1.0, 2.0, 3.0}, {-5.0, -5.0, -2.5},
                     {7.5, 15.0, 12.5},
                     fixture == BenchFixture::kTable1
                         ? Continuity::kRightContinuous
                         : Continuity::kLeftContinuous);
}

double fixture_optimum(BenchFixture fixture) {
  return fixture == BenchFixture::kTable1 ? 10.0 : 2.5;
}

Sense fixture_sense(BenchFixture fixture) {
  return fixture == BenchFixture::kTable1 ? Sense::kMaximize
                                          : Sense::kMinimize;
}

std::vector<Method> fixture_methods(BenchFixture fixture) {
  return {fixture == BenchFixture::kTable1 ? Method::kIncrementalRight
                                           : Method::kIncrementalLeft,
          Method::kConvexCombinationDisc};
}

std::size_t row_cap_from_env() {
  if (const char* env = std::getenv("PWLMIP_ROW_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultRowCap;
}

BenchResult run_bench_row(BenchFixture fixture, Method method,
                          std::int64_t n_var, std::size_t row_cap) {
  const PwlFunction f = fixture_function(fixture);
  BenchResult r;
  r.method = method;
  r.n_var = n_var;
  r.expected = fixture_optimum(fixture) * static_cast<double>(n_var);

  Model probe;
  const VarCounts per = count_vars(build_fragment(probe, f, method));
  r.continuous_vars = per.continuous * n_var;
  r.binary_vars = per.binary * n_var;
  r.rows = static_cast<std::int64_t>(probe.num_constraints()) * n_var;
  if (static_cast<std::size_t>(r.rows) > row_cap) {
    r.skipped = true;
    return r;
  }

  const auto t0 = Clock::now();
  const std::vector<PwlFunction> copies(static_cast<std::size_t>(n_var), f);
  const SeparableModel built =
      separable_sum(copies, method, fixture_sense(fixture));
  r.build_seconds = seconds_since(t0);

  const auto t1 = Clock::now();
  const MilpSolution sol = solve_milp(built.model);
  r.solve_seconds = seconds_since(t1);
  r.nodes = sol.stats.nodes;
  r.objective = sol.objective;
  r.objective_ok =
      sol.status == MilpStatus::kOptimal &&
      std::abs(sol.objective - r.expected) <=
          kBenchRelTol * std::max(1.0, std::abs(r.expected));
  return r;
}

std::vector<BenchResult> run_bench(BenchFixture fixture,
                                   std::span<const std::int64_t> sizes,
                                   std::size_t row_cap) {
  std::vector<BenchResult> out;
  for (std::int64_t n : sizes) {
    for (Method m : fixture_methods(fixture)) {
      out.push_back(run_bench_row(fixture, m, n, row_cap));
    }
  }
  return out;
}

void print_bench_tsv(std::span<const BenchResult> results, std::ostream& out) {
  out << "method\tn_var\tobjective\texpected\tok\ttime_sec\tbuild_sec\t"
         "continuous\tbinary\trows\tnodes\n";
  for (const BenchResult& r : results) {
    out << method_name(r.method) << '\t' << r.n_var << '\t';
    if (r.skipped) {
      out << "OOM-guard\t" << format_double(r.expected) << "\t-\t-\t-\t";
    } else {
      out << format_double(r.objective) << '\t' << format_double(r.expected)
          << '\t' << (r.objective_ok ? "yes" : "NO") << '\t'
          << format_double(r.solve_seconds, "%.3f") << '\t'
          << format_double(r.build_seconds, "%.3f") << '\t';
    }
    out << r.continuous_vars << '\t' << r.binary_vars << '\t' << r.rows
        << '\t' << (r.skipped ? std::string("-") : std::to_string(r.nodes))
        << '\n';
  }
}

void print_bench_pretty(std::span<const BenchResult> results,
                        std::ostream& out) {
  std::map<std::int64_t, std::pair<const BenchResult*, const BenchResult*>>
      rows;
  for (const BenchResult& r : results) {
    auto& slot = rows[r.n_var];
    if (is_incremental(r.method)) {
      slot.first = &r;
    } else {
      slot.second = &r;
    }
  }
  const auto cell = [](const BenchResult* r) {
    if (r == nullptr) return std::string("          -           -");
    if (r->skipped) return std::string("    OOM-guard            ");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%12.4g %11.3f", r->objective / 1e3,
                  r->solve_seconds);
    return std::string(buf);
  };
  out << "                   Incremental method     Convex combination\n";
  out << "N_var (x10^3)  Obj (x10^3)   Time (s)  Obj (x10^3)   Time (s)\n";
  for (const auto& [n, pair] : rows) {
    char lead[32];
    std::snprintf(lead, sizeof(lead), "%13.4g", static_cast<double>(n) / 1e3);
    out << lead << ' ' << cell(pair.first) << ' ' << cell(pair.second) << '\n';
  }
}

}  // namespace pwlmip::cli
