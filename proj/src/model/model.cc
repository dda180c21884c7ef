// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/model/model.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <unordered_map>
#include <utility>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

std::uint64_t next_model_tag() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

LinearExpr& LinearExpr::operator+=(const LinearExpr& other) {
  terms.insert(terms.end(), other.terms.begin(), other.terms.end());
  constant += other.constant;
  return *this;
}

Model::Model() : tag_(next_model_tag()) {}

bool Model::owns(VarId var) const {
  return var.tag_ == tag_ && var.index_ >= 0 &&
         var.index_ < static_cast<int>(variables_.size());
}

bool Model::owns(ConstraintId id) const {
  return id.tag_ == tag_ && id.index_ >= 0 &&
         id.index_ < static_cast<int>(constraints_.size());
}

void Model::check_owned(VarId var) const {
  if (!owns(var)) {
    throw ModelMismatchError("variable handle " + std::to_string(var.index_) +
                             " does not belong to this model");
  }
}

VarId Model::add_variable(const VariableSpec& spec) {
  Variable v{spec.name, spec.lower, spec.upper, spec.kind};
  if (v.kind == VarKind::kBinary) {
    v.lower = std::max(v.lower, 0.0);
    v.upper = std::min(v.upper, 1.0);
  }
  if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper) {
    throw InputError("variable '" + spec.name + "' has empty bounds");
  }
  variables_.push_back(std::move(v));
  return VarId(tag_, static_cast<int>(variables_.size()) - 1);
}

std::vector<Term> Model::normalized(const std::vector<Term>& terms) const {
  std::vector<Term> out;
  out.reserve(terms.size());
  std::unordered_map<int, std::size_t> slot;
  for (const Term& t : terms) {
    check_owned(t.var);
    if (!std::isfinite(t.coeff)) {
      throw InputError("non-finite coefficient on variable " +
                       std::to_string(t.var.index()));
    }
    const auto [it, inserted] = slot.try_emplace(t.var.index(), out.size());
    if (inserted) {
      out.push_back(t);
    } else {
      out[it->second].coeff += t.coeff;
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0.0; });
  return out;
}

ConstraintId Model::add_constraint(LinearConstraint constraint) {
  constraint.terms = normalized(constraint.terms);
  constraints_.push_back(std::move(constraint));
  return ConstraintId(tag_, static_cast<int>(constraints_.size()) - 1);
}

void Model::replace_constraint(ConstraintId id, LinearConstraint constraint) {
  if (!owns(id)) {
    throw ModelMismatchError("constraint handle does not belong to this model");
  }
  constraint.terms = normalized(constraint.terms);
  constraints_[id.index_] = std::move(constraint);
}

void Model::set_objective(LinearExpr objective, Sense sense) {
  objective.terms = normalized(objective.terms);
  objective_ = std::move(objective);
  sense_ = sense;
}

void Model::set_bounds(VarId var, double lower, double upper) {
  check_owned(var);
  if (std::isnan(lower) || std::isnan(upper) || lower > upper) {
    throw InputError("empty bounds for variable " +
                     std::to_string(var.index()));
  }
  Variable& v = variables_[var.index_];
  if (v.kind == VarKind::kBinary && (lower < 0.0 || upper > 1.0)) {
    throw InputError("binary bounds must lie within [0, 1]");
  }
  v.lower = lower;
  v.upper = upper;
}

const Variable& Model::variable(VarId var) const {
  check_owned(var);
  return variables_[var.index_];
}

const LinearConstraint& Model::constraint(ConstraintId id) const {
  if (!owns(id)) {
    throw ModelMismatchError("constraint handle does not belong to this model");
  }
  return constraints_[id.index_];
}

VarId Model::var_at(int index) const {
  if (index < 0 || index >= num_variables()) {
    throw DomainError("variable index " + std::to_string(index) +
                      " out of range");
  }
  return VarId(tag_, index);
}

ConstraintId Model::constraint_at(int index) const {
  if (index < 0 || index >= num_constraints()) {
    throw DomainError("constraint index " + std::to_string(index) +
                      " out of range");
  }
  return ConstraintId(tag_, index);
}

int Model::num_binaries() const {
  return static_cast<int>(
      std::count_if(variables_.begin(), variables_.end(), [](const auto& v) {
        return v.kind == VarKind::kBinary;
      }));
}

double Model::objective_value(std::span<const double> values) const {
  double total = objective_.constant;
  for (const Term& t : objective_.terms) total += t.coeff * values[t.var.index()];
  return total;
}

double Model::max_violation(std::span<const double> values) const {
  double worst = 0.0;
  for (std::size_t j = 0; j < variables_.size(); ++j) {
    worst = std::max(worst, variables_[j].lower - values[j]);
    worst = std::max(worst, values[j] - variables_[j].upper);
  }
  for (const auto& row : constraints_) {
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coeff * values[t.var.index()];
    switch (row.relation) {
      case Relation::kLessEqual:
        worst = std::max(worst, lhs - row.rhs);
        break;
      case Relation::kGreaterEqual:
        worst = std::max(worst, row.rhs - lhs);
        break;
      case Relation::kEqual:
        worst = std::max(worst, std::abs(lhs - row.rhs));
        break;
    }
  }
  return worst;
}

Model relax(const Model& model) {
  Model out = model;
  for (Variable& v : out.variables_) {
    if (v.kind == VarKind::kBinary) v.kind = VarKind::kContinuous;
  }
  return out;
}

}  // namespace pwlmip
