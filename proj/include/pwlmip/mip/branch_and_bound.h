// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_MIP_BRANCH_AND_BOUND_H_
#define PWLMIP_MIP_BRANCH_AND_BOUND_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "pwlmip/lp/simplex.h"
#include "pwlmip/model/model.h"

namespace pwlmip {

enum class MilpStatus {
  kOptimal,
  kInfeasible,
  kUnbounded,
  // A node or time limit stopped the search; the incumbent is returned.
  kFeasible,
  // A limit stopped the search before any incumbent was found.
  kNoSolution,
};

struct MilpOptions {
  // Absolute optimality gap for the whole model.
  double gap_tol = 1e-6;
  std::int64_t node_limit = std::numeric_limits<std::int64_t>::max();
  double time_limit_seconds = std::numeric_limits<double>::infinity();
  double integrality_tol = 1e-6;
  // Run an independent search per block of the constraint graph.
  bool decompose = true;
  LpOptions lp;
};

struct IncumbentUpdate {
  int component = 0;
  std::int64_t node = 0;
  // Component objective in the model's sense, constant excluded.
  double objective = 0.0;
};

struct MilpStats {
  std::int64_t nodes = 0;
  std::int64_t lp_solves = 0;
  std::int64_t lp_iterations = 0;
  int components = 0;
  double wall_seconds = 0.0;
  std::vector<IncumbentUpdate> incumbent_updates;
};

struct MilpSolution {
  MilpStatus status = MilpStatus::kInfeasible;
  bool limit_reached = false;
  double objective = 0.0;  // constant included
  std::vector<double> values;
  MilpStats stats;
};

// LP-based branch and bound over the binary variables.
//
// Branches on the most fractional binary (lowest index on ties) by fixing
// its bounds; nodes are picked best bound first, deeper first on ties. No
// cuts, heuristics or presolve. With `decompose`, independent blocks are
// searched separately and their node counts summed.
MilpSolution solve_milp(const Model& model, const MilpOptions& options = {});

}  // namespace pwlmip

#endif  // PWLMIP_MIP_BRANCH_AND_BOUND_H_
