// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_MODEL_MODEL_H_
#define PWLMIP_MODEL_MODEL_H_

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace pwlmip {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class VarKind { kContinuous, kBinary };
enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMinimize, kMaximize };

// Handle to a variable. The index is the variable's position in insertion
// order, which is the canonical order for export, solutions and vertices.
// The tag ties the handle to the model lineage it was issued by; copies of a
// model (including relaxations) accept the same handles.
class VarId {
 public:
  VarId() = default;
  int index() const { return index_; }
  bool operator==(const VarId&) const = default;
  auto operator<=>(const VarId&) const = default;

 private:
  friend class Model;
  VarId(std::uint64_t tag, int index) : tag_(tag), index_(index) {}
  std::uint64_t tag_ = 0;
  int index_ = -1;
};

class ConstraintId {
 public:
  ConstraintId() = default;
  int index() const { return index_; }
  bool operator==(const ConstraintId&) const = default;

 private:
  friend class Model;
  ConstraintId(std::uint64_t tag, int index) : tag_(tag), index_(index) {}
  std::uint64_t tag_ = 0;
  int index_ = -1;
};

struct Term {
  VarId var;
  double coeff = 0.0;
  bool operator==(const Term&) const = default;
};

// Sum of terms plus a constant.
struct LinearExpr {
  std::vector<Term> terms;
  double constant = 0.0;

  LinearExpr& add(VarId var, double coeff) {
    terms.push_back({var, coeff});
    return *this;
  }
  LinearExpr& add_constant(double c) {
    constant += c;
    return *this;
  }
  LinearExpr& operator+=(const LinearExpr& other);
};

struct LinearConstraint {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
  std::string name;

  bool operator==(const LinearConstraint&) const = default;
};

struct VariableSpec {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  VarKind kind = VarKind::kContinuous;
};

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  VarKind kind = VarKind::kContinuous;
};

// Mixed-binary linear program. Variables carry their bounds; constraints
// are rows over previously issued handles. Terms are normalized on entry:
// repeated handles are merged and exact zeros dropped, first occurrence
// order kept.
class Model {
 public:
  Model();

  VarId add_variable(const VariableSpec& spec);
  ConstraintId add_constraint(LinearConstraint constraint);
  void replace_constraint(ConstraintId id, LinearConstraint constraint);
  void set_objective(LinearExpr objective, Sense sense);
  void set_sense(Sense sense) { sense_ = sense; }
  void set_bounds(VarId var, double lower, double upper);

  const Variable& variable(VarId var) const;
  const LinearConstraint& constraint(ConstraintId id) const;
  VarId var_at(int index) const;
  ConstraintId constraint_at(int index) const;

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  int num_binaries() const;
  std::span<const Variable> variables() const { return variables_; }
  std::span<const LinearConstraint> constraints() const {
    return constraints_;
  }
  const LinearExpr& objective() const { return objective_; }
  Sense sense() const { return sense_; }

  bool owns(VarId var) const;
  bool owns(ConstraintId id) const;

  // Objective value (constant included) at a point in canonical order.
  double objective_value(std::span<const double> values) const;
  // Largest bound or row violation at a point, 0 when feasible.
  double max_violation(std::span<const double> values) const;

 private:
  friend Model relax(const Model& model);

  std::vector<Term> normalized(const std::vector<Term>& terms) const;
  void check_owned(VarId var) const;

  std::uint64_t tag_;
  std::vector<Variable> variables_;
  std::vector<LinearConstraint> constraints_;
  LinearExpr objective_;
  Sense sense_ = Sense::kMinimize;
};

// Copy of `model` with every binary re-kinded continuous on [0, 1]. Bounds
// tightened inside [0, 1] (e.g. by branching) are kept.
Model relax(const Model& model);

}  // namespace pwlmip

#endif  // PWLMIP_MODEL_MODEL_H_
