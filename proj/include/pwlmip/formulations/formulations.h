// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_FORMULATIONS_FORMULATIONS_H_
#define PWLMIP_FORMULATIONS_FORMULATIONS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwlmip/model/model.h"
#include "pwlmip/pwl/pwl_function.h"

namespace pwlmip {

enum class Method {
  kIncrementalContinuous,  // "incr"
  kIncrementalRight,       // "incr-right"
  kIncrementalLeft,        // "incr-left"
  kConvexCombination,      // "cc"
  kConvexCombinationDisc,  // "cc-disc"
};

// Binary on/off indicator for x in [a_0, a_K] or x = 0.
enum class IndicatorVariant {
  kFIM,       // "fim": first-segment cap scaled by alpha only
  kPIM,       // "pim": anchor and objective constant scaled by alpha too
  kPIMPrime,  // "pim-prime": cap scaled plus x >= a_0 alpha
};

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);
std::string_view indicator_name(IndicatorVariant variant);
std::optional<IndicatorVariant> parse_indicator(std::string_view name);

bool is_incremental(Method method);

// What a formulation builder adds to a model for one PWL function.
//
// aux_continuous holds y_k (incremental, filling from a_0), y~_k (left
// incremental, filling from a_K) or the lambda weights. aux_binary holds
// beta_k / beta~_k. `objective` is the linear expression whose value equals
// f(x) at every integral feasible point; it only references this fragment's
// variables.
struct Fragment {
  VarId x;
  std::vector<VarId> aux_continuous;
  std::vector<VarId> aux_binary;
  std::optional<VarId> indicator;
  LinearExpr objective;
  std::vector<ConstraintId> constraints;
  Method method = Method::kIncrementalContinuous;
  std::optional<IndicatorVariant> indicator_variant;

  // Row defining x from the auxiliary variables.
  ConstraintId x_definition;
  // y_1 <= a_1 - a_0 (or y~_1 <= a_K - a_{K-1}); incremental methods only.
  std::optional<ConstraintId> first_segment_cap;
  double domain_lower = 0.0;
  double domain_upper = 0.0;
  std::string prefix;
};

struct VarCounts {
  int continuous = 0;  // excludes x
  int binary = 0;      // includes alpha when present
  bool has_indicator = false;
  bool operator==(const VarCounts&) const = default;
};

// Delta model for continuous f: x = a_0 + sum y_k, y_1 <= a_1 - a_0,
// (a_k - a_{k-1}) beta_k <= y_k <= (a_k - a_{k-1}) beta_{k-1}, objective
// f(a_0) + sum m_k y_k. Throws WrongMethodError on discontinuous input.
Fragment incremental_continuous(Model& model, const PwlFunction& f,
                                std::string_view prefix = "");

// Same rows as incremental_continuous; the objective adds Delta_k beta_k for
// the jump at a_k. Accepts continuous functions (all jumps zero).
Fragment incremental_right_continuous(Model& model, const PwlFunction& f,
                                      std::string_view prefix = "");

// Mirror that fills from the right end: x = a_K - sum y~_k, where y~_k covers
// segment K-k+1 and beta~_k pairs with breakpoint a_{K-k}. Objective
// g(a_K) + sum(-m_{K-k+1} y~_k + Delta~_k beta~_k). Accepts continuous
// functions.
Fragment incremental_left_continuous(Model& model, const PwlFunction& g,
                                     std::string_view prefix = "");

// Lambda model: x = sum a_k lambda_k, sum lambda = 1, sum beta = 1,
// lambda_0 <= beta_1, lambda_K <= beta_K,
// lambda_k <= beta_k + beta_{k+1}. Continuous functions only.
Fragment convex_combination_continuous(Model& model, const PwlFunction& f,
                                       std::string_view prefix = "");

// Two weights per segment: lambda_{2k-2} + lambda_{2k-1} = beta_k,
// sum beta = 1, x = sum(a_{k-1} lambda_{2k-2} + a_k lambda_{2k-1}); the
// objective uses each segment's own endpoint values. Rejects continuous
// input (the lambda model is cheaper).
Fragment convex_combination_discontinuous(Model& model, const PwlFunction& f,
                                          std::string_view prefix = "");

// Dispatch by method tag.
Fragment build_fragment(Model& model, const PwlFunction& f, Method method,
                        std::string_view prefix = "");

// Adds the binary indicator alpha to an incremental fragment and rewrites its
// rows for the requested variant. All variants scale the first-segment cap by
// alpha. kPIM also scales the anchor of the x row and the objective constant;
// kPIMPrime keeps the x row and adds x >= a_0 alpha. The x bounds widen to
// [min(0, a_0), max(0, a_K)]. Throws WrongMethodError for convex-combination
// fragments or a fragment that already has an indicator.
Fragment with_binary_indicator(Model& model, Fragment fragment,
                               IndicatorVariant variant);

VarCounts count_vars(const Fragment& fragment);

struct SeparableModel {
  Model model;
  std::vector<Fragment> fragments;
};

// One independent fragment per function, objective = sum of fragment
// objectives. Builder errors are rethrown with the offending index.
SeparableModel separable_sum(std::span<const PwlFunction> functions,
                             Method method, Sense sense,
                             std::optional<IndicatorVariant> indicator = {});

}  // namespace pwlmip

#endif  // PWLMIP_FORMULATIONS_FORMULATIONS_H_
