// SPDX-License-Identifier: Apache-2.0

// Building blocks under solve_lp, shared with the branch-and-bound driver.

#ifndef PWLMIP_LP_DENSE_SIMPLEX_H_
#define PWLMIP_LP_DENSE_SIMPLEX_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "pwlmip/lp/simplex.h"
#include "pwlmip/model/model.h"

namespace pwlmip::lp {

struct SparseRow {
  std::vector<std::pair<int, double>> terms;  // (local column, coefficient)
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

// Minimization problem over local columns 0..num_vars-1.
struct DenseProblem {
  int num_vars = 0;
  std::vector<double> cost;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<SparseRow> rows;
};

struct DenseResult {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;  // of DenseProblem::cost, no constant
  std::vector<double> x;
  std::vector<BasisStatus> col_status;
  std::vector<BasisStatus> row_status;
  std::int64_t iterations = 0;
};

DenseResult solve_dense(const DenseProblem& problem, const LpOptions& options);

// Variables connected through constraints. Blocks are ordered by their
// smallest variable index and list variables and rows in canonical order.
// Rows without terms belong to no block.
struct Block {
  std::vector<int> vars;
  std::vector<int> rows;
};

std::vector<Block> decompose(const Model& model);
// One block holding the whole model.
Block whole_model(const Model& model);

// Restriction of the model to a block; costs are negated for maximization so
// the result always minimizes.
DenseProblem extract_block(const Model& model, const Block& block);

// Repeated extraction in time linear in each block's size.
class BlockExtractor {
 public:
  explicit BlockExtractor(const Model& model);
  DenseProblem extract(const Block& block);

 private:
  const Model& model_;
  std::vector<double> cost_;  // minimization costs by model index
  std::vector<int> local_;    // scratch, all -1 between calls
};

// True when every term-free row is satisfied by 0.
bool empty_rows_feasible(const Model& model, double tol);

}  // namespace pwlmip::lp

#endif  // PWLMIP_LP_DENSE_SIMPLEX_H_
