// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_CLI_BENCH_H_
#define PWLMIP_CLI_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "pwlmip/formulations/formulations.h"
#include "pwlmip/pwl/pwl_function.h"

namespace pwlmip::cli {

// table1: maximize a sum of right-continuous sawtooth copies (optimum 10
// each at x = 1). table2: minimize the left-continuous twin (optimum 2.5
// each at x = 1).
enum class BenchFixture { kTable1, kTable2 };

std::optional<BenchFixture> parse_fixture(std::string_view name);
PwlFunction fixture_function(BenchFixture fixture);
double fixture_optimum(BenchFixture fixture);
Sense fixture_sense(BenchFixture fixture);
// Incremental method matching the fixture's continuity, then cc-disc.
std::vector<Method> fixture_methods(BenchFixture fixture);

inline constexpr std::size_t kDefaultRowCap = 5'000'000;

// PWLMIP_ROW_CAP when set to a positive integer, kDefaultRowCap otherwise.
std::size_t row_cap_from_env();

struct BenchResult {
  Method method = Method::kIncrementalRight;
  std::int64_t n_var = 0;
  // Set when the model exceeded the row cap and was not built.
  bool skipped = false;
  double objective = 0.0;
  double expected = 0.0;
  bool objective_ok = false;
  double build_seconds = 0.0;
  double solve_seconds = 0.0;
  std::int64_t continuous_vars = 0;  // count_vars total, x excluded
  std::int64_t binary_vars = 0;
  std::int64_t rows = 0;
  std::int64_t nodes = 0;
};

// Objective tolerance, relative to the expected value.
inline constexpr double kBenchRelTol = 1e-6;

BenchResult run_bench_row(BenchFixture fixture, Method method,
                          std::int64_t n_var, std::size_t row_cap);
std::vector<BenchResult> run_bench(BenchFixture fixture,
                                   std::span<const std::int64_t> sizes,
                                   std::size_t row_cap);

// One TSV line per result, with a header line.
void print_bench_tsv(std::span<const BenchResult> results, std::ostream& out);
// Side-by-side layout: one line per size, incremental then convex
// combination.
void print_bench_pretty(std::span<const BenchResult> results,
                        std::ostream& out);

}  // namespace pwlmip::cli

#endif  // PWLMIP_CLI_BENCH_H_
