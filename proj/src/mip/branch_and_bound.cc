// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/mip/branch_and_bound.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>

#include "pwlmip/lp/dense_simplex.h"

namespace pwlmip {
namespace {

using Clock = std::chrono::steady_clock;

struct Node {
  double bound = 0.0;  // parent's LP value, minimization
  int depth = 0;
  std::int64_t id = 0;
  // Per binary of the component: -1 free, 0 or 1 fixed.
  std::vector<signed char> fixing;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id > b.id;
  }
};

enum class ComponentStatus { kOptimal, kInfeasible, kUnbounded, kFeasible,
                             kNoSolution };

struct ComponentResult {
  ComponentStatus status = ComponentStatus::kInfeasible;
  double objective = 0.0;  // minimization
  std::vector<double> x;
};

class ComponentSearch {
 public:
  ComponentSearch(lp::DenseProblem problem, std::vector<int> binaries,
                  const MilpOptions& options, double gap,
                  Clock::time_point deadline, MilpStats& stats, int component,
                  double sense_sign)
      : problem_(std::move(problem)),
        binaries_(std::move(binaries)),
        options_(options),
        gap_(gap),
        deadline_(deadline),
        stats_(stats),
        component_(component),
        sense_sign_(sense_sign) {}

  ComponentResult run() {
    ComponentResult result;
    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    open.push(Node{-kInfinity, 0, next_id_++,
                   std::vector<signed char>(binaries_.size(), -1)});
    double incumbent = kInfinity;
    bool limit = false;

    while (!open.empty()) {
      if (open.top().bound >= incumbent - gap_) break;
      if (stats_.nodes >= options_.node_limit || Clock::now() > deadline_) {
        limit = true;
        break;
      }
      Node node = open.top();
      open.pop();
      ++stats_.nodes;

      lp::DenseProblem sub = problem_;
      for (std::size_t b = 0; b < binaries_.size(); ++b) {
        if (node.fixing[b] < 0) continue;
        sub.lower[binaries_[b]] = sub.upper[binaries_[b]] = node.fixing[b];
      }
      const lp::DenseResult lp = lp::solve_dense(sub, options_.lp);
      ++stats_.lp_solves;
      stats_.lp_iterations += lp.iterations;
      if (lp.status == LpStatus::kInfeasible) continue;
      if (lp.status == LpStatus::kUnbounded) {
        result.status = ComponentStatus::kUnbounded;
        return result;
      }
      if (lp.objective >= incumbent - gap_) continue;

      int branch = -1;
      double most = options_.integrality_tol;
      for (std::size_t b = 0; b < binaries_.size(); ++b) {
        const double v = lp.x[binaries_[b]];
        const double frac = std::min(v, 1.0 - v);
        if (frac > most) {
          most = frac;
          branch = static_cast<int>(b);
        }
      }
      if (branch < 0) {
        incumbent = lp.objective;
        result.x = lp.x;
        stats_.incumbent_updates.push_back(
            {component_, stats_.nodes, sense_sign_ * incumbent});
        continue;
      }
      for (signed char side : {0, 1}) {
        Node child{lp.objective, node.depth + 1, next_id_++, node.fixing};
        child.fixing[branch] = side;
        open.push(std::move(child));
      }
    }

    const bool found = std::isfinite(incumbent);
    result.objective = incumbent;
    if (limit) {
      result.status =
          found ? ComponentStatus::kFeasible : ComponentStatus::kNoSolution;
    } else {
      result.status =
          found ? ComponentStatus::kOptimal : ComponentStatus::kInfeasible;
    }
    return result;
  }

 private:
  lp::DenseProblem problem_;
  std::vector<int> binaries_;
  const MilpOptions& options_;
  double gap_;
  Clock::time_point deadline_;
  MilpStats& stats_;
  int component_;
  double sense_sign_;
  std::int64_t next_id_ = 0;
};

}  // namespace

MilpSolution solve_milp(const Model& model, const MilpOptions& options) {
  const auto start = Clock::now();
  const auto deadline =
      std::isfinite(options.time_limit_seconds)
          ? start + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(
                            options.time_limit_seconds))
          : Clock::time_point::max();

  MilpSolution out;
  out.values.assign(model.num_variables(), 0.0);
  const auto finish = [&]() {
    out.stats.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  };
  if (!lp::empty_rows_feasible(model, options.lp.feasibility_tol)) {
    out.status = MilpStatus::kInfeasible;
    return finish();
  }

  const std::vector<lp::Block> blocks =
      options.decompose ? lp::decompose(model)
                        : std::vector<lp::Block>{lp::whole_model(model)};
  out.stats.components = static_cast<int>(blocks.size());
  const double gap =
      options.gap_tol / static_cast<double>(std::max<std::size_t>(1, blocks.size()));
  const double sense_sign = model.sense() == Sense::kMaximize ? -1.0 : 1.0;
  const auto vars = model.variables();

  lp::BlockExtractor extractor(model);
  bool limit = false;
  bool missing = false;
  for (int c = 0; c < static_cast<int>(blocks.size()); ++c) {
    const lp::Block& block = blocks[c];
    std::vector<int> binaries;
    for (int k = 0; k < static_cast<int>(block.vars.size()); ++k) {
      if (vars[block.vars[k]].kind == VarKind::kBinary) binaries.push_back(k);
    }
    ComponentSearch search(extractor.extract(block), std::move(binaries),
                           options, gap, deadline, out.stats, c, sense_sign);
    const ComponentResult r = search.run();
    switch (r.status) {
      case ComponentStatus::kInfeasible:
        out.status = MilpStatus::kInfeasible;
        return finish();
      case ComponentStatus::kUnbounded:
        out.status = MilpStatus::kUnbounded;
        return finish();
      case ComponentStatus::kNoSolution:
        limit = true;
        missing = true;
        continue;
      case ComponentStatus::kFeasible:
        limit = true;
        break;
      case ComponentStatus::kOptimal:
        break;
    }
    for (std::size_t k = 0; k < block.vars.size(); ++k) {
      out.values[block.vars[k]] = r.x[k];
    }
  }
  out.limit_reached = limit;
  if (missing) {
    out.status = MilpStatus::kNoSolution;
    return finish();
  }
  out.status = limit ? MilpStatus::kFeasible : MilpStatus::kOptimal;
  out.objective = model.objective_value(out.values);
  return finish();
}

}  // namespace pwlmip
