// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_LP_SIMPLEX_H_
#define PWLMIP_LP_SIMPLEX_H_

#include <cstdint>
#include <vector>

#include "pwlmip/model/model.h"

namespace pwlmip {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// kFree marks a nonbasic variable without finite bounds, held at zero.
enum class BasisStatus { kBasic, kAtLower, kAtUpper, kFree };

struct LpOptions {
  double feasibility_tol = 1e-9;
  double optimality_tol = 1e-9;
  double pivot_tol = 1e-9;
  // Switch from Dantzig pricing to Bland's rule after this many degenerate
  // pivots.
  int bland_after_degenerate = 1000;
  // Solve independent row/column blocks separately.
  bool decompose = true;
};

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  // Includes the objective constant. Meaningful only when optimal.
  double objective = 0.0;
  // Canonical variable order.
  std::vector<double> values;
  std::vector<BasisStatus> basis;
  // Status of each row's activity variable; basic rows are slack.
  std::vector<BasisStatus> row_basis;
  std::int64_t iterations = 0;
};

// Bounded-variable primal simplex on a dense tableau, two phases with
// artificial variables. Every variable must be continuous; relax() first.
// Deterministic for identical input. Throws InputError for binaries and
// SolverFailure when the iteration limit is hit.
LpSolution solve_lp(const Model& model, const LpOptions& options = {});

}  // namespace pwlmip

#endif  // PWLMIP_LP_SIMPLEX_H_
