// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_IDEALITY_IDEALITY_H_
#define PWLMIP_IDEALITY_IDEALITY_H_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pwlmip/formulations/formulations.h"
#include "pwlmip/ideality/polytope.h"
#include "pwlmip/model/model.h"
#include "pwlmip/pwl/pwl_function.h"

namespace pwlmip {

// A named point tested against an LP-relaxation polytope.
struct FlaggedPoint {
  std::string name;
  // p_star is only defined for a_0 = 0.
  bool applicable = true;
  bool member = false;
  bool extreme = false;
  RationalVector point;
};

struct IdealityReport {
  std::size_t vertex_count = 0;
  // True iff no vertex has a fractional binary coordinate.
  bool integral = true;
  std::vector<RationalVector> fractional_witnesses;
  std::vector<FlaggedPoint> flagged;
};

// Binary coordinates of a fragment: its betas, then alpha when present.
// Taken from the fragment rather than from variable kinds, which relax()
// erases.
std::vector<int> binary_coordinates(const Fragment& fragment);

// Enumerates the vertices of the relaxation and collects those whose
// `binary_coords` are not all 0 or 1.
IdealityReport check_local_ideality(
    const Model& relaxed, std::span<const int> binary_coords,
    CoefficientReading reading = CoefficientReading::kDecimal,
    const VertexEnumOptions& options = {});

// The relaxation of a single-function incremental model with an indicator;
// the method follows the function's continuity (incr, incr-right,
// incr-left).
struct IndicatorModel {
  Model relaxed;
  Fragment fragment;
};

IndicatorModel build_indicator_model(const PwlFunction& f,
                                     IndicatorVariant variant);

// Membership and extremality of p_star = (x, y, beta, alpha) = (0, 0, 0, 1)
// (only when a_0 = 0) and p0 = (a_0, 0, 0, 0) in the variant's polytope.
// Extremality is read off the exact vertex enumeration.
std::vector<FlaggedPoint> check_flagged_points(
    IndicatorVariant variant, const PwlFunction& f,
    const VertexEnumOptions& options = {});

// {"vertices": n, "integral": bool, "witnesses": [[...], ...],
//  "flagged": {"<name>": {"applicable", "member", "extreme", "point"}}}
// with rationals written as "p/q" strings.
nlohmann::json report_to_json(const IdealityReport& report);

}  // namespace pwlmip

#endif  // PWLMIP_IDEALITY_IDEALITY_H_
