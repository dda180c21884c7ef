// SPDX-License-Identifier: Apache-2.0

#ifndef PWLMIP_IDEALITY_POLYTOPE_H_
#define PWLMIP_IDEALITY_POLYTOPE_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "pwlmip/model/model.h"

namespace pwlmip {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// How floating-point model coefficients become rationals.
enum class CoefficientReading {
  // Read the shortest round-trip decimal of the double (0.1 -> 1/10).
  // Values needing more than kMaxDecimalDigits significant digits are taken
  // to come from irrational or inexact arithmetic and are refused.
  kDecimal,
  // The exact binary value of the double.
  kBinaryExact,
};

inline constexpr int kMaxDecimalDigits = 15;

// Throws InexactCoefficientError (non-finite, or too long a decimal).
Rational to_rational(double value,
                     CoefficientReading reading = CoefficientReading::kDecimal);
std::string to_string(const Rational& q);

// { x : A x <= b, E x = h } in exact arithmetic, columns in the model's
// canonical variable order. Finite variable bounds are folded in as rows;
// a fixed variable becomes an equality.
struct HPolytope {
  int num_vars = 0;
  std::vector<RationalVector> a;
  RationalVector b;
  std::vector<RationalVector> e;
  RationalVector h;

  bool contains(std::span<const Rational> point) const;
};

// Requires a model without binaries (see relax()).
HPolytope from_relaxation(
    const Model& relaxed,
    CoefficientReading reading = CoefficientReading::kDecimal);

struct VertexEnumOptions {
  // Largest dimension left after eliminating equalities.
  int max_dimension = 12;
};

// Dimension of the affine hull of {E x = h}, or -1 when it is empty.
int free_dimension(const HPolytope& p);

// All vertices, exactly, sorted lexicographically. Equalities are eliminated
// first; then every set of d linearly independent inequality rows is solved
// and kept when feasible. Throws DimensionGuardError when d exceeds the
// guard.
std::vector<RationalVector> enumerate_vertices(
    const HPolytope& p, const VertexEnumOptions& options = {});

// Member of p whose active rows (equalities included) have full column rank.
bool is_vertex(const HPolytope& p, std::span<const Rational> point);

}  // namespace pwlmip

#endif  // PWLMIP_IDEALITY_POLYTOPE_H_
