// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/pwl/pwl_function.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

void check_structure(const std::vector<double>& breakpoints,
                     const std::vector<double>& slopes,
                     const std::vector<double>& intercepts) {
  if (breakpoints.size() < 2) {
    throw InputError("a PWL function needs at least two breakpoints");
  }
  if (slopes.size() != breakpoints.size() - 1 ||
      intercepts.size() != breakpoints.size() - 1) {
    throw InputError("expected " + std::to_string(breakpoints.size() - 1) +
                     " slopes and intercepts, got " +
                     std::to_string(slopes.size()) + " and " +
                     std::to_string(intercepts.size()));
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (!std::isfinite(breakpoints[i])) {
      throw InputError("breakpoint " + std::to_string(i) + " is not finite");
    }
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i])) {
      throw InputError("breakpoints must be strictly increasing (index " +
                       std::to_string(i) + ")");
    }
  }
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (!std::isfinite(slopes[i]) || !std::isfinite(intercepts[i])) {
      throw InputError("segment " + std::to_string(i + 1) +
                       " has a non-finite slope or intercept");
    }
  }
}

double left_limit(const std::vector<double>& a, const std::vector<double>& m,
                  const std::vector<double>& d, std::size_t k) {
  return m[k - 1] * a[k] + d[k - 1];
}

double right_limit(const std::vector<double>& a, const std::vector<double>& m,
                   const std::vector<double>& d, std::size_t k) {
  return m[k] * a[k] + d[k];
}

bool all_interior_continuous(const std::vector<double>& a,
                             const std::vector<double>& m,
                             const std::vector<double>& d) {
  for (std::size_t k = 1; k + 1 < a.size(); ++k) {
    if (std::abs(left_limit(a, m, d, k) - right_limit(a, m, d, k)) >
        kContinuityTolerance) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Continuity continuity) {
  switch (continuity) {
    case Continuity::kContinuous:
      return "continuous";
    case Continuity::kRightContinuous:
      return "right";
    case Continuity::kLeftContinuous:
      return "left";
  }
  return "unknown";
}

PwlFunction::PwlFunction(std::vector<double> breakpoints,
                         std::vector<double> slopes,
                         std::vector<double> intercepts, Continuity continuity)
    : breakpoints_(std::move(breakpoints)),
      slopes_(std::move(slopes)),
      intercepts_(std::move(intercepts)),
      continuity_(continuity) {
  check_structure(breakpoints_, slopes_, intercepts_);
  if (continuity_ == Continuity::kContinuous &&
      !all_interior_continuous(breakpoints_, slopes_, intercepts_)) {
    throw InputError(
        "function declared continuous but its pieces disagree at a "
        "breakpoint");
  }
}

double PwlFunction::value_at_breakpoint(int k) const {
  const int num_k = num_segments();
  if (k < 0 || k > num_k) {
    throw DomainError("breakpoint index " + std::to_string(k) +
                      " out of range");
  }
  if (k == 0) return segment_value(1, breakpoints_[0]);
  if (k == num_k) return segment_value(num_k, breakpoints_[num_k]);
  if (continuity_ == Continuity::kLeftContinuous) {
    return segment_value(k, breakpoints_[k]);
  }
  return segment_value(k + 1, breakpoints_[k]);
}

double evaluate(const PwlFunction& f, double x) {
  if (!(x >= f.lower() && x <= f.upper())) {
    throw DomainError("x = " + std::to_string(x) + " outside [" +
                      std::to_string(f.lower()) + ", " +
                      std::to_string(f.upper()) + "]");
  }
  const auto a = f.breakpoints();
  const int num_k = f.num_segments();
  int segment;
  if (f.continuity() == Continuity::kLeftContinuous) {
    // First breakpoint >= x closes the owning segment: (a_{j-1}, a_j].
    const auto it = std::lower_bound(a.begin() + 1, a.end(), x);
    segment = static_cast<int>(it - a.begin());
  } else {
    // First breakpoint > x opens the next segment: [a_{j-1}, a_j).
    const auto it = std::upper_bound(a.begin() + 1, a.end(), x);
    segment = static_cast<int>(it - a.begin());
  }
  segment = std::clamp(segment, 1, num_k);
  return f.segment_value(segment, x);
}

double one_sided_limit(const PwlFunction& f, int k, Side side) {
  const int num_k = f.num_segments();
  if (k < 0 || k > num_k) {
    throw DomainError("breakpoint index " + std::to_string(k) +
                      " out of range [0, " + std::to_string(num_k) + "]");
  }
  if (side == Side::kLeft) {
    if (k == 0) throw DomainError("no left limit at a_0");
    return f.segment_value(k, f.breakpoint(k));
  }
  if (k == num_k) throw DomainError("no right limit at a_K");
  return f.segment_value(k + 1, f.breakpoint(k));
}

JumpVector jumps(const PwlFunction& f) {
  const int num_k = f.num_segments();
  JumpVector out{std::vector<double>(num_k, 0.0)};
  switch (f.continuity()) {
    case Continuity::kContinuous:
      break;
    case Continuity::kRightContinuous:
      for (int k = 1; k < num_k; ++k) {
        out.deltas[k - 1] =
            f.value_at_breakpoint(k) - f.segment_value(k, f.breakpoint(k));
      }
      break;
    case Continuity::kLeftContinuous:
      for (int k = 1; k < num_k; ++k) {
        const int at = num_k - k;
        out.deltas[k - 1] = f.value_at_breakpoint(at) -
                            f.segment_value(at + 1, f.breakpoint(at));
      }
      break;
  }
  return out;
}

PwlFunction classify(std::vector<double> breakpoints,
                     std::vector<double> slopes,
                     std::vector<double> intercepts,
                     std::optional<Convention> convention,
                     std::span<const double> breakpoint_values) {
  check_structure(breakpoints, slopes, intercepts);
  const std::size_t num_k = slopes.size();

  std::optional<Convention> observed;
  if (!breakpoint_values.empty()) {
    if (breakpoint_values.size() != num_k + 1) {
      throw InputError("expected one value per breakpoint");
    }
    const auto near = [](double u, double v) {
      return std::abs(u - v) <= kContinuityTolerance;
    };
    if (!near(breakpoint_values.front(),
              slopes.front() * breakpoints.front() + intercepts.front()) ||
        !near(breakpoint_values.back(),
              slopes.back() * breakpoints.back() + intercepts.back())) {
      throw UnsupportedFunctionError(
          "end-point values must come from the closed end segments");
    }
    for (std::size_t k = 1; k < num_k; ++k) {
      const double lo = left_limit(breakpoints, slopes, intercepts, k);
      const double hi = right_limit(breakpoints, slopes, intercepts, k);
      const double v = breakpoint_values[k];
      if (near(lo, hi)) {
        if (!near(v, lo)) {
          throw UnsupportedFunctionError(
              "isolated value at breakpoint " + std::to_string(k) +
              " matches neither one-sided limit");
        }
        continue;
      }
      std::optional<Convention> here;
      if (near(v, hi)) here = Convention::kRight;
      if (near(v, lo)) here = Convention::kLeft;
      if (!here) {
        throw UnsupportedFunctionError(
            "value at breakpoint " + std::to_string(k) +
            " matches neither one-sided limit");
      }
      if (observed && *observed != *here) {
        throw UnsupportedFunctionError(
            "function is right-continuous at some breakpoints and "
            "left-continuous at others");
      }
      observed = here;
    }
    if (observed && convention && *observed != *convention) {
      throw UnsupportedFunctionError(
          "breakpoint values contradict the requested convention");
    }
  }

  if (all_interior_continuous(breakpoints, slopes, intercepts)) {
    return PwlFunction(std::move(breakpoints), std::move(slopes),
                       std::move(intercepts), Continuity::kContinuous);
  }
  const std::optional<Convention> chosen = observed ? observed : convention;
  if (!chosen) {
    throw UnsupportedFunctionError(
        "discontinuous piece data needs a right or left convention");
  }
  return PwlFunction(std::move(breakpoints), std::move(slopes),
                     std::move(intercepts),
                     *chosen == Convention::kRight
                         ? Continuity::kRightContinuous
                         : Continuity::kLeftContinuous);
}

PwlFunction shift_domain(const PwlFunction& f, double new_lower) {
  const double shift = new_lower - f.lower();
  std::vector<double> breakpoints, slopes, intercepts;
  for (double a : f.breakpoints()) breakpoints.push_back(a + shift);
  for (int k = 1; k <= f.num_segments(); ++k) {
    slopes.push_back(f.slope(k));
    intercepts.push_back(f.intercept(k) - f.slope(k) * shift);
  }
  return PwlFunction(std::move(breakpoints), std::move(slopes),
                     std::move(intercepts), f.continuity());
}

PwlFunction approximate(const std::function<double(double)>& sampler,
                        std::vector<double> breakpoints) {
  if (breakpoints.size() < 2) {
    throw InputError("a PWL function needs at least two breakpoints");
  }
  std::vector<double> samples;
  samples.reserve(breakpoints.size());
  for (double a : breakpoints) {
    const double v = sampler(a);
    if (!std::isfinite(v)) {
      throw InputError("sampler returned a non-finite value at x = " +
                       std::to_string(a));
    }
    samples.push_back(v);
  }
  const std::size_t num_k = breakpoints.size() - 1;
  std::vector<double> slopes(num_k), intercepts(num_k);
  for (std::size_t k = 1; k <= num_k; ++k) {
    const double m =
        (samples[k] - samples[k - 1]) / (breakpoints[k] - breakpoints[k - 1]);
    slopes[k - 1] = m;
    intercepts[k - 1] = samples[k - 1] - m * breakpoints[k - 1];
  }
  // Adjacent secants share the sample at a_k, so the pieces meet up to
  // rounding; the constructor rejects anything beyond kContinuityTolerance.
  return PwlFunction(std::move(breakpoints), std::move(slopes),
                     std::move(intercepts), Continuity::kContinuous);
}

}  // namespace pwlmip
