// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/lp/simplex.h"

#include "pwlmip/errors.h"
#include "pwlmip/lp/dense_simplex.h"

namespace pwlmip {

LpSolution solve_lp(const Model& model, const LpOptions& options) {
  if (model.num_binaries() > 0) {
    throw InputError("solve_lp needs a continuous model; relax() it first");
  }
  LpSolution out;
  const int n = model.num_variables();
  out.values.assign(n, 0.0);
  out.basis.assign(n, BasisStatus::kAtLower);
  out.row_basis.assign(model.num_constraints(), BasisStatus::kBasic);
  if (!lp::empty_rows_feasible(model, options.feasibility_tol)) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  const std::vector<lp::Block> blocks =
      options.decompose ? lp::decompose(model)
                        : std::vector<lp::Block>{lp::whole_model(model)};
  bool unbounded = false;
  lp::BlockExtractor extractor(model);
  for (const lp::Block& block : blocks) {
    const lp::DenseResult r =
        lp::solve_dense(extractor.extract(block), options);
    out.iterations += r.iterations;
    if (r.status == LpStatus::kInfeasible) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    if (r.status == LpStatus::kUnbounded) {
      unbounded = true;
      continue;
    }
    for (std::size_t k = 0; k < block.vars.size(); ++k) {
      out.values[block.vars[k]] = r.x[k];
      out.basis[block.vars[k]] = r.col_status[k];
    }
    for (std::size_t k = 0; k < block.rows.size(); ++k) {
      out.row_basis[block.rows[k]] = r.row_status[k];
    }
  }
  if (unbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.objective = model.objective_value(out.values);
  return out;
}

}  // namespace pwlmip
