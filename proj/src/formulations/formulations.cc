// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/formulations/formulations.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

std::string join(std::string_view prefix, std::string_view stem, int index) {
  std::string out(prefix);
  out += stem;
  out += std::to_string(index);
  return out;
}

VarId add_continuous(Model& model, std::string name, double lower,
                     double upper) {
  return model.add_variable({std::move(name), lower, upper,
                             VarKind::kContinuous});
}

VarId add_binary(Model& model, std::string name) {
  return model.add_variable({std::move(name), 0.0, 1.0, VarKind::kBinary});
}

ConstraintId add_row(Model& model, Fragment& frag, std::vector<Term> terms,
                     Relation relation, double rhs) {
  const ConstraintId id =
      model.add_constraint({std::move(terms), relation, rhs, {}});
  frag.constraints.push_back(id);
  return id;
}

// Rows shared by both incremental orientations: the filling-order chain over
// `lengths`, where lengths[k-1] is the range of the k-th filled segment.
void add_filling_chain(Model& model, Fragment& frag,
                       const std::vector<double>& lengths,
                       std::string_view y_stem, std::string_view beta_stem) {
  const int num_k = static_cast<int>(lengths.size());
  for (int k = 1; k <= num_k; ++k) {
    frag.aux_continuous.push_back(
        add_continuous(model, join(frag.prefix, y_stem, k), 0.0, kInfinity));
  }
  for (int k = 1; k < num_k; ++k) {
    frag.aux_binary.push_back(add_binary(model, join(frag.prefix, beta_stem, k)));
  }
  const auto& y = frag.aux_continuous;
  const auto& beta = frag.aux_binary;
  frag.first_segment_cap =
      add_row(model, frag, {{y[0], 1.0}}, Relation::kLessEqual, lengths[0]);
  for (int k = 1; k < num_k; ++k) {
    add_row(model, frag, {{y[k - 1], 1.0}, {beta[k - 1], -lengths[k - 1]}},
            Relation::kGreaterEqual, 0.0);
  }
  for (int k = 2; k <= num_k; ++k) {
    add_row(model, frag, {{y[k - 1], 1.0}, {beta[k - 2], -lengths[k - 1]}},
            Relation::kLessEqual, 0.0);
  }
}

Fragment start_fragment(Model& model, const PwlFunction& f, Method method,
                        std::string_view prefix) {
  Fragment frag;
  frag.method = method;
  frag.prefix = std::string(prefix);
  frag.domain_lower = f.lower();
  frag.domain_upper = f.upper();
  frag.x = add_continuous(model, frag.prefix + "x", f.lower(), f.upper());
  return frag;
}

Fragment incremental_from_left(Model& model, const PwlFunction& f,
                               Method method, std::string_view prefix) {
  const int num_k = f.num_segments();
  Fragment frag = start_fragment(model, f, method, prefix);
  std::vector<double> lengths;
  for (int k = 1; k <= num_k; ++k) lengths.push_back(f.segment_length(k));
  add_filling_chain(model, frag, lengths, "y", "beta");

  std::vector<Term> xdef{{frag.x, 1.0}};
  for (VarId y : frag.aux_continuous) xdef.push_back({y, -1.0});
  frag.x_definition =
      add_row(model, frag, std::move(xdef), Relation::kEqual, f.lower());

  const JumpVector delta = jumps(f);
  frag.objective.constant = f.value_at_breakpoint(0);
  for (int k = 1; k <= num_k; ++k) {
    frag.objective.add(frag.aux_continuous[k - 1], f.slope(k));
  }
  for (int k = 1; k < num_k; ++k) {
    if (delta.deltas[k - 1] != 0.0) {
      frag.objective.add(frag.aux_binary[k - 1], delta.deltas[k - 1]);
    }
  }
  return frag;
}

}  // namespace

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kIncrementalContinuous:
      return "incr";
    case Method::kIncrementalRight:
      return "incr-right";
    case Method::kIncrementalLeft:
      return "incr-left";
    case Method::kConvexCombination:
      return "cc";
    case Method::kConvexCombinationDisc:
      return "cc-disc";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m :
       {Method::kIncrementalContinuous, Method::kIncrementalRight,
        Method::kIncrementalLeft, Method::kConvexCombination,
        Method::kConvexCombinationDisc}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::string_view indicator_name(IndicatorVariant variant) {
  switch (variant) {
    case IndicatorVariant::kFIM:
      return "fim";
    case IndicatorVariant::kPIM:
      return "pim";
    case IndicatorVariant::kPIMPrime:
      return "pim-prime";
  }
  return "unknown";
}

std::optional<IndicatorVariant> parse_indicator(std::string_view name) {
  for (IndicatorVariant v : {IndicatorVariant::kFIM, IndicatorVariant::kPIM,
                             IndicatorVariant::kPIMPrime}) {
    if (indicator_name(v) == name) return v;
  }
  return std::nullopt;
}

bool is_incremental(Method method) {
  return method == Method::kIncrementalContinuous ||
         method == Method::kIncrementalRight ||
         method == Method::kIncrementalLeft;
}

Fragment incremental_continuous(Model& model, const PwlFunction& f,
                                std::string_view prefix) {
  if (f.continuity() != Continuity::kContinuous) {
    throw WrongMethodError(
        "incr needs a continuous function; use incr-right or incr-left");
  }
  return incremental_from_left(model, f, Method::kIncrementalContinuous,
                               prefix);
}

Fragment incremental_right_continuous(Model& model, const PwlFunction& f,
                                      std::string_view prefix) {
  if (f.continuity() == Continuity::kLeftContinuous) {
    throw WrongMethodError(
        "incr-right needs a right-continuous function; use incr-left");
  }
  return incremental_from_left(model, f, Method::kIncrementalRight, prefix);
}

Fragment incremental_left_continuous(Model& model, const PwlFunction& g,
                                     std::string_view prefix) {
  if (g.continuity() == Continuity::kRightContinuous) {
    throw WrongMethodError(
        "incr-left needs a left-continuous function; use incr-right");
  }
  const int num_k = g.num_segments();
  Fragment frag = start_fragment(model, g, Method::kIncrementalLeft, prefix);
  // y~_k fills segment K-k+1.
  std::vector<double> lengths;
  for (int k = 1; k <= num_k; ++k) {
    lengths.push_back(g.segment_length(num_k - k + 1));
  }
  add_filling_chain(model, frag, lengths, "yt", "betat");

  std::vector<Term> xdef{{frag.x, 1.0}};
  for (VarId y : frag.aux_continuous) xdef.push_back({y, 1.0});
  frag.x_definition =
      add_row(model, frag, std::move(xdef), Relation::kEqual, g.upper());

  const JumpVector delta = jumps(g);
  frag.objective.constant = g.value_at_breakpoint(num_k);
  for (int k = 1; k <= num_k; ++k) {
    frag.objective.add(frag.aux_continuous[k - 1], -g.slope(num_k - k + 1));
  }
  for (int k = 1; k < num_k; ++k) {
    if (delta.deltas[k - 1] != 0.0) {
      frag.objective.add(frag.aux_binary[k - 1], delta.deltas[k - 1]);
    }
  }
  return frag;
}

Fragment convex_combination_continuous(Model& model, const PwlFunction& f,
                                       std::string_view prefix) {
  if (f.continuity() != Continuity::kContinuous) {
    throw WrongMethodError(
        "cc needs a continuous function; use cc-disc for jumps");
  }
  const int num_k = f.num_segments();
  Fragment frag = start_fragment(model, f, Method::kConvexCombination, prefix);
  for (int k = 0; k <= num_k; ++k) {
    frag.aux_continuous.push_back(
        add_continuous(model, join(frag.prefix, "lambda", k), 0.0, kInfinity));
  }
  for (int k = 1; k <= num_k; ++k) {
    frag.aux_binary.push_back(add_binary(model, join(frag.prefix, "beta", k)));
  }
  const auto& lambda = frag.aux_continuous;
  const auto& beta = frag.aux_binary;

  std::vector<Term> xdef{{frag.x, 1.0}};
  for (int k = 0; k <= num_k; ++k) {
    xdef.push_back({lambda[k], -f.breakpoint(k)});
  }
  frag.x_definition =
      add_row(model, frag, std::move(xdef), Relation::kEqual, 0.0);

  std::vector<Term> weights;
  for (VarId l : lambda) weights.push_back({l, 1.0});
  add_row(model, frag, std::move(weights), Relation::kEqual, 1.0);
  std::vector<Term> choice;
  for (VarId b : beta) choice.push_back({b, 1.0});
  add_row(model, frag, std::move(choice), Relation::kEqual, 1.0);

  add_row(model, frag, {{lambda[0], 1.0}, {beta[0], -1.0}},
          Relation::kLessEqual, 0.0);
  for (int k = 1; k < num_k; ++k) {
    add_row(model, frag,
            {{lambda[k], 1.0}, {beta[k - 1], -1.0}, {beta[k], -1.0}},
            Relation::kLessEqual, 0.0);
  }
  add_row(model, frag, {{lambda[num_k], 1.0}, {beta[num_k - 1], -1.0}},
          Relation::kLessEqual, 0.0);

  for (int k = 0; k <= num_k; ++k) {
    frag.objective.add(lambda[k], f.value_at_breakpoint(k));
  }
  return frag;
}

Fragment convex_combination_discontinuous(Model& model, const PwlFunction& f,
                                          std::string_view prefix) {
  if (f.continuity() == Continuity::kContinuous) {
    throw WrongMethodError(
        "cc-disc doubles the weights for jumps; this function is continuous, "
        "use cc");
  }
  const int num_k = f.num_segments();
  Fragment frag =
      start_fragment(model, f, Method::kConvexCombinationDisc, prefix);
  for (int i = 0; i < 2 * num_k; ++i) {
    frag.aux_continuous.push_back(
        add_continuous(model, join(frag.prefix, "lambda", i), 0.0, kInfinity));
  }
  for (int k = 1; k <= num_k; ++k) {
    frag.aux_binary.push_back(add_binary(model, join(frag.prefix, "beta", k)));
  }
  const auto& lambda = frag.aux_continuous;
  const auto& beta = frag.aux_binary;

  std::vector<Term> xdef{{frag.x, 1.0}};
  for (int k = 1; k <= num_k; ++k) {
    xdef.push_back({lambda[2 * k - 2], -f.breakpoint(k - 1)});
    xdef.push_back({lambda[2 * k - 1], -f.breakpoint(k)});
  }
  frag.x_definition =
      add_row(model, frag, std::move(xdef), Relation::kEqual, 0.0);

  for (int k = 1; k <= num_k; ++k) {
    add_row(model, frag,
            {{lambda[2 * k - 2], 1.0},
             {lambda[2 * k - 1], 1.0},
             {beta[k - 1], -1.0}},
            Relation::kEqual, 0.0);
  }
  std::vector<Term> choice;
  for (VarId b : beta) choice.push_back({b, 1.0});
  add_row(model, frag, std::move(choice), Relation::kEqual, 1.0);

  for (int k = 1; k <= num_k; ++k) {
    frag.objective.add(lambda[2 * k - 2],
                       f.segment_value(k, f.breakpoint(k - 1)));
    frag.objective.add(lambda[2 * k - 1], f.segment_value(k, f.breakpoint(k)));
  }
  return frag;
}

Fragment build_fragment(Model& model, const PwlFunction& f, Method method,
                        std::string_view prefix) {
  switch (method) {
    case Method::kIncrementalContinuous:
      return incremental_continuous(model, f, prefix);
    case Method::kIncrementalRight:
      return incremental_right_continuous(model, f, prefix);
    case Method::kIncrementalLeft:
      return incremental_left_continuous(model, f, prefix);
    case Method::kConvexCombination:
      return convex_combination_continuous(model, f, prefix);
    case Method::kConvexCombinationDisc:
      return convex_combination_discontinuous(model, f, prefix);
  }
  throw WrongMethodError("unknown method");
}

Fragment with_binary_indicator(Model& model, Fragment fragment,
                               IndicatorVariant variant) {
  if (!is_incremental(fragment.method) || !fragment.first_segment_cap) {
    throw WrongMethodError(
        "binary indicators are only defined for incremental fragments, not " +
        std::string(method_name(fragment.method)));
  }
  if (fragment.indicator) {
    throw WrongMethodError("fragment already carries an indicator");
  }
  const VarId alpha = add_binary(model, fragment.prefix + "alpha");
  fragment.indicator = alpha;
  fragment.indicator_variant = variant;

  // y_1 <= (a_1 - a_0) alpha
  LinearConstraint cap = model.constraint(*fragment.first_segment_cap);
  cap.terms.push_back({alpha, -cap.rhs});
  cap.rhs = 0.0;
  model.replace_constraint(*fragment.first_segment_cap, std::move(cap));

  model.set_bounds(fragment.x, std::min(0.0, fragment.domain_lower),
                   std::max(0.0, fragment.domain_upper));

  switch (variant) {
    case IndicatorVariant::kFIM:
      break;
    case IndicatorVariant::kPIM: {
      // The x row's right-hand side is its anchor (a_0, or a_K for the left
      // mirror); move it onto alpha.
      LinearConstraint xdef = model.constraint(fragment.x_definition);
      xdef.terms.push_back({alpha, -xdef.rhs});
      xdef.rhs = 0.0;
      model.replace_constraint(fragment.x_definition, std::move(xdef));
      fragment.objective.add(alpha, fragment.objective.constant);
      fragment.objective.constant = 0.0;
      std::erase_if(fragment.objective.terms,
                    [](const Term& t) { return t.coeff == 0.0; });
      break;
    }
    case IndicatorVariant::kPIMPrime:
      fragment.constraints.push_back(model.add_constraint(
          {{{fragment.x, 1.0}, {alpha, -fragment.domain_lower}},
           Relation::kGreaterEqual,
           0.0,
           {}}));
      break;
  }
  return fragment;
}

VarCounts count_vars(const Fragment& fragment) {
  VarCounts out;
  out.continuous = static_cast<int>(fragment.aux_continuous.size());
  out.binary = static_cast<int>(fragment.aux_binary.size()) +
               (fragment.indicator ? 1 : 0);
  out.has_indicator = fragment.indicator.has_value();
  return out;
}

SeparableModel separable_sum(std::span<const PwlFunction> functions,
                             Method method, Sense sense,
                             std::optional<IndicatorVariant> indicator) {
  if (functions.empty()) {
    throw InputError("separable_sum needs at least one function");
  }
  SeparableModel out;
  out.fragments.reserve(functions.size());
  LinearExpr objective;
  const bool single = functions.size() == 1;
  for (std::size_t n = 0; n < functions.size(); ++n) {
    const std::string prefix = single ? "" : "n" + std::to_string(n) + "_";
    const auto where = [&](const std::exception& e) {
      return "function #" + std::to_string(n) + ": " + e.what();
    };
    try {
      Fragment frag = build_fragment(out.model, functions[n], method, prefix);
      if (indicator) {
        frag = with_binary_indicator(out.model, std::move(frag), *indicator);
      }
      objective += frag.objective;
      out.fragments.push_back(std::move(frag));
    } catch (const WrongMethodError& e) {
      throw WrongMethodError(where(e));
    } catch (const InputError& e) {
      throw InputError(where(e));
    }
  }
  out.model.set_objective(std::move(objective), sense);
  return out;
}

}  // namespace pwlmip
