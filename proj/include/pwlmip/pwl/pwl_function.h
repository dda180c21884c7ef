// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_PWL_PWL_FUNCTION_H_
#define PWLMIP_PWL_PWL_FUNCTION_H_

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pwlmip {

// Which endpoint each segment owns at an interior breakpoint. A continuous
// function owns both.
enum class Continuity { kContinuous, kRightContinuous, kLeftContinuous };

// Convention a caller asserts for discontinuous piece data.
enum class Convention { kRight, kLeft };

enum class Side { kLeft, kRight };

// Absolute tolerance used to decide that two one-sided limits agree.
inline constexpr double kContinuityTolerance = 1e-9;

std::string_view to_string(Continuity continuity);

// Univariate piecewise-linear function on [a_0, a_K].
//
// Segment k (1-based, k = 1..K) is m_k * x + d_k on [a_{k-1}, a_k]. Which
// segment supplies the value at an interior breakpoint is decided by the
// continuity class:
//   kRightContinuous: [a_{k-1}, a_k), last segment closed.
//   kLeftContinuous:  (a_{k-1}, a_k], first segment closed.
//   kContinuous:      both limits agree within kContinuityTolerance.
// Instances are immutable.
class PwlFunction {
 public:
  // Throws InputError when the structural invariants fail or when
  // `continuity` is kContinuous but some interior limits disagree.
  PwlFunction(std::vector<double> breakpoints, std::vector<double> slopes,
              std::vector<double> intercepts, Continuity continuity);

  int num_segments() const { return static_cast<int>(slopes_.size()); }
  std::span<const double> breakpoints() const { return breakpoints_; }
  std::span<const double> slopes() const { return slopes_; }
  std::span<const double> intercepts() const { return intercepts_; }
  Continuity continuity() const { return continuity_; }

  double breakpoint(int k) const { return breakpoints_[k]; }
  double lower() const { return breakpoints_.front(); }
  double upper() const { return breakpoints_.back(); }
  // a_k - a_{k-1}, 1-based segment index.
  double segment_length(int k) const {
    return breakpoints_[k] - breakpoints_[k - 1];
  }
  double slope(int k) const { return slopes_[k - 1]; }
  double intercept(int k) const { return intercepts_[k - 1]; }
  // m_k * x + d_k, no domain check.
  double segment_value(int k, double x) const {
    return slopes_[k - 1] * x + intercepts_[k - 1];
  }

  // The function's value at breakpoint a_k, k = 0..K.
  double value_at_breakpoint(int k) const;

  bool operator==(const PwlFunction&) const = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> slopes_;
  std::vector<double> intercepts_;
  Continuity continuity_;
};

// Jumps at the breakpoints, one entry per segment (length K).
//
// Right-continuous: deltas[k-1] = f(a_k) - (m_k a_k + d_k) for k = 1..K-1.
// Left-continuous:  deltas[k-1] = g(a_{K-k}) - (m_{K-k+1} a_{K-k} + d_{K-k+1}),
//                   i.e. indexed from the right end.
// The last entry is always 0 and continuous functions are all zeros.
struct JumpVector {
  std::vector<double> deltas;
};

// Throws DomainError when x lies outside [a_0, a_K].
double evaluate(const PwlFunction& f, double x);

// Left: m_k a_k + d_k. Right: m_{k+1} a_k + d_{k+1}.
// Throws DomainError for k outside [0, K], Left at a_0 or Right at a_K.
double one_sided_limit(const PwlFunction& f, int k, Side side);

JumpVector jumps(const PwlFunction& f);

// Builds a function from piece data and infers its continuity class.
//
// When every interior breakpoint matches within kContinuityTolerance the
// result is kContinuous whatever `convention` says. Otherwise the caller must
// supply the convention, since piece data alone does not record which
// segment owns a breakpoint.
//
// `breakpoint_values`, when non-empty, gives f(a_k) for k = 0..K. At every
// jump the value must equal one of the one-sided limits and all jumps must
// follow the same side; anything else is outside what the incremental model
// can represent and raises UnsupportedFunctionError.
PwlFunction classify(std::vector<double> breakpoints,
                     std::vector<double> slopes,
                     std::vector<double> intercepts,
                     std::optional<Convention> convention = std::nullopt,
                     std::span<const double> breakpoint_values = {});

// The same function translated horizontally so its domain starts at
// `new_lower`: g(x) = f(x - (new_lower - a_0)).
PwlFunction shift_domain(const PwlFunction& f, double new_lower);

// Secant interpolation of `sampler` through the given breakpoints.
// Throws InputError on non-finite samples.
PwlFunction approximate(const std::function<double(double)>& sampler,
                        std::vector<double> breakpoints);

}  // namespace pwlmip

#endif  // PWLMIP_PWL_PWL_FUNCTION_H_
