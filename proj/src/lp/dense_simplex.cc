// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/lp/dense_simplex.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pwlmip/errors.h"

namespace pwlmip::lp {
namespace {

constexpr int kRefreshInterval = 64;

// Dense tableau T = B^-1 [A | -I | S] for the homogeneous system
//   A x - r + S art = 0,
// where r holds the row activities (bounded by the row's relation) and S the
// signed artificial columns of phase 1. Column layout: structurals, row
// activities, artificials.
class Tableau {
 public:
  Tableau(const DenseProblem& problem, const LpOptions& options)
      : options_(options), n_(problem.num_vars),
        m_(static_cast<int>(problem.rows.size())) {
    std::vector<double> activity(m_, 0.0);
    std::vector<double> row_lo(m_), row_hi(m_);
    std::vector<double> x0(n_);
    for (int j = 0; j < n_; ++j) {
      const double lo = problem.lower[j], hi = problem.upper[j];
      x0[j] = std::isfinite(lo) ? lo : (std::isfinite(hi) ? hi : 0.0);
    }
    int num_art = 0;
    std::vector<int> art_of_row(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const SparseRow& row = problem.rows[i];
      for (const auto& [j, a] : row.terms) activity[i] += a * x0[j];
      row_lo[i] = row.relation == Relation::kLessEqual ? -kInfinity : row.rhs;
      row_hi[i] = row.relation == Relation::kGreaterEqual ? kInfinity : row.rhs;
      const double tol = options_.feasibility_tol * (1.0 + std::abs(row.rhs));
      if (activity[i] < row_lo[i] - tol || activity[i] > row_hi[i] + tol) {
        art_of_row[i] = n_ + m_ + num_art++;
      }
    }
    num_art_ = num_art;
    ncols_ = n_ + m_ + num_art;
    t_.assign(static_cast<std::size_t>(m_) * ncols_, 0.0);
    lower_.assign(ncols_, 0.0);
    upper_.assign(ncols_, kInfinity);
    value_.assign(ncols_, 0.0);
    head_.assign(m_, -1);
    pos_.assign(ncols_, -1);
    for (int j = 0; j < n_; ++j) {
      lower_[j] = problem.lower[j];
      upper_[j] = problem.upper[j];
      value_[j] = x0[j];
    }
    for (int i = 0; i < m_; ++i) {
      const int r = n_ + i;
      lower_[r] = row_lo[i];
      upper_[r] = row_hi[i];
      double sign = -1.0;  // coefficient of the basic column in row i
      int basic = r;
      if (art_of_row[i] >= 0) {
        const double target = activity[i] < row_lo[i] ? row_lo[i] : row_hi[i];
        value_[r] = target;
        basic = art_of_row[i];
        sign = target - activity[i] > 0 ? 1.0 : -1.0;
      }
      for (const auto& [j, a] : problem.rows[i].terms) at(i, j) += a / sign;
      at(i, r) = -1.0 / sign;
      if (basic != r) at(i, basic) = 1.0;
      head_[i] = basic;
      pos_[basic] = i;
    }
    refresh_basics();
    iteration_limit_ = 10000 + 50LL * (m_ + ncols_);
  }

  DenseResult run(const std::vector<double>& cost) {
    DenseResult result;
    if (num_art_ > 0) {
      std::vector<double> phase1(ncols_, 0.0);
      for (int j = n_ + m_; j < ncols_; ++j) phase1[j] = 1.0;
      optimize(phase1);
      double infeasibility = 0.0;
      double scale = 1.0;
      for (int j = n_ + m_; j < ncols_; ++j) infeasibility += value_[j];
      for (int j = n_; j < n_ + m_; ++j) {
        if (std::isfinite(lower_[j])) scale = std::max(scale, std::abs(lower_[j]));
        if (std::isfinite(upper_[j])) scale = std::max(scale, std::abs(upper_[j]));
      }
      if (infeasibility > options_.feasibility_tol * scale * (1 + num_art_)) {
        result.status = LpStatus::kInfeasible;
        result.iterations = iterations_;
        return result;
      }
      for (int j = n_ + m_; j < ncols_; ++j) {
        lower_[j] = upper_[j] = 0.0;
        if (pos_[j] < 0) value_[j] = 0.0;
      }
      drive_out_artificials();
      refresh_basics();
    }

    std::vector<double> phase2(ncols_, 0.0);
    std::copy(cost.begin(), cost.end(), phase2.begin());
    if (!optimize(phase2)) {
      result.status = LpStatus::kUnbounded;
      result.iterations = iterations_;
      return result;
    }
    refresh_basics();
    check_feasible();

    result.status = LpStatus::kOptimal;
    result.iterations = iterations_;
    result.x.assign(value_.begin(), value_.begin() + n_);
    result.objective = 0.0;
    for (int j = 0; j < n_; ++j) result.objective += cost[j] * value_[j];
    result.col_status.resize(n_);
    for (int j = 0; j < n_; ++j) result.col_status[j] = status_of(j);
    result.row_status.resize(m_);
    for (int i = 0; i < m_; ++i) {
      // A row whose artificial stayed basic (redundant equality) counts as
      // basic in its activity.
      const int h = head_[i];
      result.row_status[i] =
          h >= n_ + m_ ? BasisStatus::kBasic : status_of(n_ + i);
    }
    return result;
  }

 private:
  double& at(int i, int j) {
    return t_[static_cast<std::size_t>(i) * ncols_ + j];
  }
  double at(int i, int j) const {
    return t_[static_cast<std::size_t>(i) * ncols_ + j];
  }

  BasisStatus status_of(int j) const {
    if (pos_[j] >= 0) return BasisStatus::kBasic;
    if (!std::isfinite(lower_[j]) && !std::isfinite(upper_[j])) {
      return BasisStatus::kFree;
    }
    if (value_[j] == upper_[j] && value_[j] != lower_[j]) {
      return BasisStatus::kAtUpper;
    }
    return BasisStatus::kAtLower;
  }

  void refresh_basics() {
    for (int i = 0; i < m_; ++i) {
      double v = 0.0;
      const double* row = &t_[static_cast<std::size_t>(i) * ncols_];
      for (int j = 0; j < ncols_; ++j) {
        if (pos_[j] < 0 && row[j] != 0.0 && value_[j] != 0.0) {
          v -= row[j] * value_[j];
        }
      }
      value_[head_[i]] = v;
    }
  }

  void compute_reduced_costs(const std::vector<double>& c) {
    d_ = c;
    for (int i = 0; i < m_; ++i) {
      const double cb = c[head_[i]];
      if (cb == 0.0) continue;
      const double* row = &t_[static_cast<std::size_t>(i) * ncols_];
      for (int j = 0; j < ncols_; ++j) d_[j] -= cb * row[j];
    }
    for (int i = 0; i < m_; ++i) d_[head_[i]] = 0.0;
  }

  void pivot(int r, int q) {
    double* prow = &t_[static_cast<std::size_t>(r) * ncols_];
    const double inv = 1.0 / prow[q];
    for (int j = 0; j < ncols_; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &t_[static_cast<std::size_t>(i) * ncols_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (int j = 0; j < ncols_; ++j) row[j] -= f * prow[j];
      row[q] = 0.0;
    }
    const double fd = d_[q];
    if (fd != 0.0) {
      for (int j = 0; j < ncols_; ++j) d_[j] -= fd * prow[j];
      d_[q] = 0.0;
    }
    pos_[head_[r]] = -1;
    head_[r] = q;
    pos_[q] = r;
  }

  // Returns false on an unbounded ray.
  bool optimize(const std::vector<double>& c) {
    compute_reduced_costs(c);
    for (;;) {
      if (++iterations_ > iteration_limit_) {
        throw SolverFailure("simplex iteration limit reached after " +
                            std::to_string(iterations_) + " iterations");
      }
      if (iterations_ % kRefreshInterval == 0) refresh_basics();

      int q = -1;
      int dir = 0;
      double best = 0.0;
      for (int j = 0; j < ncols_; ++j) {
        if (pos_[j] >= 0 || lower_[j] == upper_[j]) continue;
        const double dj = d_[j];
        int jdir = 0;
        if (dj < -options_.optimality_tol && value_[j] < upper_[j]) {
          jdir = 1;
        } else if (dj > options_.optimality_tol && value_[j] > lower_[j]) {
          jdir = -1;
        }
        if (jdir == 0) continue;
        if (bland_) {
          q = j;
          dir = jdir;
          break;
        }
        if (std::abs(dj) > best) {
          best = std::abs(dj);
          q = j;
          dir = jdir;
        }
      }
      if (q < 0) return true;

      double step = upper_[q] - lower_[q];  // bound flip
      int leave_row = -1;
      double leave_alpha = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = at(i, q) * dir;
        const int b = head_[i];
        double limit;
        if (alpha > options_.pivot_tol) {
          if (!std::isfinite(lower_[b])) continue;
          limit = (value_[b] - lower_[b]) / alpha;
        } else if (alpha < -options_.pivot_tol) {
          if (!std::isfinite(upper_[b])) continue;
          limit = (upper_[b] - value_[b]) / -alpha;
        } else {
          continue;
        }
        limit = std::max(limit, 0.0);
        const double tie = 1e-12 * std::max(1.0, limit);
        bool take = false;
        if (limit < step - tie) {
          take = true;
        } else if (leave_row >= 0 && std::abs(limit - step) <= tie) {
          take = bland_ ? b < head_[leave_row]
                        : std::abs(alpha) > std::abs(leave_alpha);
        }
        if (take) {
          step = limit;
          leave_row = i;
          leave_alpha = alpha;
        }
      }
      if (!std::isfinite(step)) return false;

      if (step <= options_.feasibility_tol) {
        if (++degenerate_ >= options_.bland_after_degenerate) bland_ = true;
      }
      if (step != 0.0) {
        value_[q] += dir * step;
        for (int i = 0; i < m_; ++i) {
          const double a = at(i, q);
          if (a != 0.0) value_[head_[i]] -= a * dir * step;
        }
      }
      if (leave_row < 0) {
        value_[q] = dir > 0 ? upper_[q] : lower_[q];
        continue;
      }
      const int b = head_[leave_row];
      value_[b] = leave_alpha > 0 ? lower_[b] : upper_[b];
      pivot(leave_row, q);
    }
  }

  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (head_[i] < n_ + m_) continue;
      int best = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < n_ + m_; ++j) {
        if (pos_[j] >= 0) continue;
        const double a = std::abs(at(i, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best >= 0) {
        // Degenerate pivot: the artificial is at zero, the entering column
        // keeps its nonbasic value.
        const int art = head_[i];
        pivot(i, best);
        value_[art] = 0.0;
      }
    }
  }

  void check_feasible() const {
    for (int i = 0; i < m_; ++i) {
      const int b = head_[i];
      const double v = value_[b];
      const double tol = 1e-7 * std::max(1.0, std::abs(v));
      if (v < lower_[b] - tol || v > upper_[b] + tol) {
        throw SolverFailure("simplex lost primal feasibility (column " +
                            std::to_string(b) + ")");
      }
    }
  }

  const LpOptions& options_;
  int n_;
  int m_;
  int num_art_ = 0;
  int ncols_ = 0;
  std::vector<double> t_;
  std::vector<double> lower_, upper_, value_;
  std::vector<int> head_;
  std::vector<int> pos_;
  std::vector<double> d_;
  bool bland_ = false;
  std::int64_t degenerate_ = 0;
  std::int64_t iterations_ = 0;
  std::int64_t iteration_limit_ = 0;
};

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

}  // namespace

DenseResult solve_dense(const DenseProblem& problem,
                        const LpOptions& options) {
  for (int j = 0; j < problem.num_vars; ++j) {
    if (problem.lower[j] > problem.upper[j]) {
      DenseResult r;
      r.status = LpStatus::kInfeasible;
      return r;
    }
  }
  Tableau tableau(problem, options);
  return tableau.run(problem.cost);
}

std::vector<Block> decompose(const Model& model) {
  const int n = model.num_variables();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto rows = model.constraints();
  for (const auto& row : rows) {
    if (row.terms.empty()) continue;
    const int first = find_root(parent, row.terms.front().var.index());
    for (const Term& t : row.terms) {
      const int other = find_root(parent, t.var.index());
      if (other != first) parent[other] = first;
    }
  }
  std::vector<int> root(n);
  for (int j = 0; j < n; ++j) root[j] = find_root(parent, j);
  // Scanning in index order numbers blocks by their smallest variable.
  std::vector<int> block_of(n, -1);
  std::vector<Block> blocks;
  for (int j = 0; j < n; ++j) {
    int& id = block_of[root[j]];
    if (id < 0) {
      id = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[id].vars.push_back(j);
  }
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    if (rows[i].terms.empty()) continue;
    blocks[block_of[root[rows[i].terms.front().var.index()]]].rows.push_back(i);
  }
  return blocks;
}

Block whole_model(const Model& model) {
  Block b;
  b.vars.resize(model.num_variables());
  std::iota(b.vars.begin(), b.vars.end(), 0);
  for (int i = 0; i < model.num_constraints(); ++i) {
    if (!model.constraints()[i].terms.empty()) b.rows.push_back(i);
  }
  return b;
}

BlockExtractor::BlockExtractor(const Model& model)
    : model_(model),
      cost_(model.num_variables(), 0.0),
      local_(model.num_variables(), -1) {
  const double sign = model.sense() == Sense::kMaximize ? -1.0 : 1.0;
  for (const Term& t : model.objective().terms) {
    cost_[t.var.index()] += sign * t.coeff;
  }
}

DenseProblem BlockExtractor::extract(const Block& block) {
  DenseProblem p;
  p.num_vars = static_cast<int>(block.vars.size());
  const auto vars = model_.variables();
  p.cost.resize(p.num_vars);
  p.lower.resize(p.num_vars);
  p.upper.resize(p.num_vars);
  for (int k = 0; k < p.num_vars; ++k) {
    const int j = block.vars[k];
    local_[j] = k;
    p.cost[k] = cost_[j];
    p.lower[k] = vars[j].lower;
    p.upper[k] = vars[j].upper;
  }
  const auto rows = model_.constraints();
  p.rows.reserve(block.rows.size());
  for (int i : block.rows) {
    SparseRow row;
    row.relation = rows[i].relation;
    row.rhs = rows[i].rhs;
    for (const Term& t : rows[i].terms) {
      row.terms.emplace_back(local_[t.var.index()], t.coeff);
    }
    p.rows.push_back(std::move(row));
  }
  for (int j : block.vars) local_[j] = -1;
  return p;
}

DenseProblem extract_block(const Model& model, const Block& block) {
  return BlockExtractor(model).extract(block);
}

bool empty_rows_feasible(const Model& model, double tol) {
  for (const auto& row : model.constraints()) {
    if (!row.terms.empty()) continue;
    const double slack = tol * (1.0 + std::abs(row.rhs));
    switch (row.relation) {
      case Relation::kLessEqual:
        if (0.0 > row.rhs + slack) return false;
        break;
      case Relation::kGreaterEqual:
        if (0.0 < row.rhs - slack) return false;
        break;
      case Relation::kEqual:
        if (std::abs(row.rhs) > slack) return false;
        break;
    }
  }
  return true;
}

}  // namespace pwlmip::lp
