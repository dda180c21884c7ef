// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/ideality/ideality.h"

#include <algorithm>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

bool is_zero_or_one(const Rational& q) { return q == 0 || q == 1; }

nlohmann::json point_json(const RationalVector& point) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rational& q : point) arr.push_back(to_string(q));
  return arr;
}

Method method_for(const PwlFunction& f) {
  switch (f.continuity()) {
    case Continuity::kContinuous:
      return Method::kIncrementalContinuous;
    case Continuity::kRightContinuous:
      return Method::kIncrementalRight;
    case Continuity::kLeftContinuous:
      return Method::kIncrementalLeft;
  }
  return Method::kIncrementalContinuous;
}

}  // namespace

std::vector<int> binary_coordinates(const Fragment& fragment) {
  std::vector<int> out;
  for (VarId b : fragment.aux_binary) out.push_back(b.index());
  if (fragment.indicator) out.push_back(fragment.indicator->index());
  return out;
}

IdealityReport check_local_ideality(const Model& relaxed,
                                    std::span<const int> binary_coords,
                                    CoefficientReading reading,
                                    const VertexEnumOptions& options) {
  const HPolytope polytope = from_relaxation(relaxed, reading);
  const std::vector<RationalVector> vertices =
      enumerate_vertices(polytope, options);
  IdealityReport report;
  report.vertex_count = vertices.size();
  for (const RationalVector& v : vertices) {
    const bool integral =
        std::all_of(binary_coords.begin(), binary_coords.end(),
                    [&](int j) { return is_zero_or_one(v[j]); });
    if (!integral) report.fractional_witnesses.push_back(v);
  }
  report.integral = report.fractional_witnesses.empty();
  return report;
}

IndicatorModel build_indicator_model(const PwlFunction& f,
                                     IndicatorVariant variant) {
  Model model;
  Fragment frag = build_fragment(model, f, method_for(f));
  frag = with_binary_indicator(model, std::move(frag), variant);
  model.set_objective(frag.objective, Sense::kMinimize);
  return {relax(model), std::move(frag)};
}

std::vector<FlaggedPoint> check_flagged_points(
    IndicatorVariant variant, const PwlFunction& f,
    const VertexEnumOptions& options) {
  const IndicatorModel built = build_indicator_model(f, variant);
  const HPolytope polytope = from_relaxation(built.relaxed);
  const std::vector<RationalVector> vertices =
      enumerate_vertices(polytope, options);
  const int n = built.relaxed.num_variables();
  const Fragment& frag = built.fragment;

  const auto assess = [&](FlaggedPoint& fp) {
    fp.member = polytope.contains(fp.point);
    fp.extreme =
        std::binary_search(vertices.begin(), vertices.end(), fp.point);
  };

  std::vector<FlaggedPoint> out;
  FlaggedPoint p_star{"p_star", f.lower() == 0.0, false, false,
                      RationalVector(n, 0)};
  p_star.point[frag.indicator->index()] = 1;
  if (p_star.applicable) assess(p_star);
  out.push_back(std::move(p_star));

  FlaggedPoint p0{"p0", true, false, false, RationalVector(n, 0)};
  p0.point[frag.x.index()] = to_rational(f.lower());
  assess(p0);
  out.push_back(std::move(p0));
  return out;
}

nlohmann::json report_to_json(const IdealityReport& report) {
  nlohmann::json j;
  j["vertices"] = report.vertex_count;
  j["integral"] = report.integral;
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : report.fractional_witnesses) {
    j["witnesses"].push_back(point_json(w));
  }
  j["flagged"] = nlohmann::json::object();
  for (const FlaggedPoint& fp : report.flagged) {
    j["flagged"][fp.name] = {{"applicable", fp.applicable},
                             {"member", fp.member},
                             {"extreme", fp.extreme},
                             {"point", point_json(fp.point)}};
  }
  return j;
}

}  // namespace pwlmip
