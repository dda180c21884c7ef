// SPDX-License-Identifier: Apache-2.0

#include "pwlmip/ideality/polytope.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "pwlmip/errors.h"

namespace pwlmip {
namespace {

// Reduced row echelon form of `rows` over their first `ncols` entries (any
// further entries, e.g. a right-hand side, are carried along). Returns the
// pivot column of each leading row; rows past the rank are zero in the
// first `ncols` entries.
std::vector<int> rref(std::vector<RationalVector>& rows, int ncols) {
  std::vector<int> pivots;
  std::size_t next = 0;
  for (int col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t sel = next;
    while (sel < rows.size() && sgn(rows[sel][col]) == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[next], rows[sel]);
    RationalVector& p = rows[next];
    const Rational inv = 1 / p[col];
    for (auto& v : p) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next || sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < p.size(); ++j) rows[i][j] -= f * p[j];
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

Rational dot(const RationalVector& row, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(row[j]) != 0) s += row[j] * x[j];
  }
  return s;
}

// Equality constraints solved for their pivot variables:
// x = origin + sum_f direction[f] * z_f over the free columns.
struct AffineHull {
  bool empty = false;
  std::vector<int> free_cols;
  RationalVector origin;
  std::vector<RationalVector> direction;  // one per free column, length n
};

AffineHull eliminate_equalities(const HPolytope& p) {
  const int n = p.num_vars;
  std::vector<RationalVector> aug;
  aug.reserve(p.e.size());
  for (std::size_t i = 0; i < p.e.size(); ++i) {
    RationalVector row = p.e[i];
    row.push_back(p.h[i]);
    aug.push_back(std::move(row));
  }
  const std::vector<int> pivots = rref(aug, n);
  AffineHull hull;
  for (std::size_t r = pivots.size(); r < aug.size(); ++r) {
    if (sgn(aug[r][n]) != 0) {  // 0 = nonzero
      hull.empty = true;
      return hull;
    }
  }
  std::vector<bool> is_pivot(n, false);
  for (int pc : pivots) is_pivot[pc] = true;
  for (int j = 0; j < n; ++j) {
    if (!is_pivot[j]) hull.free_cols.push_back(j);
  }
  hull.origin.assign(n, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    hull.origin[pivots[r]] = aug[r][n];
  }
  for (int f : hull.free_cols) {
    RationalVector dir(n, 0);
    dir[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      dir[pivots[r]] = -aug[r][f];
    }
    hull.direction.push_back(std::move(dir));
  }
  return hull;
}

// Depth-first search over sets of independent inequality rows in the
// reduced space. Each state holds the chosen rows in reduced row echelon
// form, augmented with their right-hand side.
class SubsetSearch {
 public:
  SubsetSearch(std::vector<RationalVector> rows, RationalVector rhs, int dim)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), dim_(dim) {}

  std::set<RationalVector> run() {
    descend(0, {}, {});
    return std::move(found_);
  }

 private:
  void descend(std::size_t start, const std::vector<RationalVector>& basis,
               const std::vector<int>& pivots) {
    const int rank = static_cast<int>(basis.size());
    if (rank == dim_) {
      RationalVector z(dim_, 0);
      for (int r = 0; r < rank; ++r) z[pivots[r]] = basis[r][dim_];
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (dot(rows_[i], z) > rhs_[i]) return;
      }
      found_.insert(std::move(z));
      return;
    }
    for (std::size_t i = start; i < rows_.size(); ++i) {
      if (rows_.size() - i < static_cast<std::size_t>(dim_ - rank)) break;
      RationalVector cand = rows_[i];
      cand.push_back(rhs_[i]);
      for (int r = 0; r < rank; ++r) {
        const Rational f = cand[pivots[r]];
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= dim_; ++j) cand[j] -= f * basis[r][j];
      }
      int pc = -1;
      for (int j = 0; j < dim_; ++j) {
        if (sgn(cand[j]) != 0) {
          pc = j;
          break;
        }
      }
      if (pc < 0) continue;
      const Rational inv = 1 / cand[pc];
      for (auto& v : cand) v *= inv;
      std::vector<RationalVector> next = basis;
      for (auto& row : next) {
        const Rational f = row[pc];
        if (sgn(f) == 0) continue;
        for (int j = 0; j <= dim_; ++j) row[j] -= f * cand[j];
      }
      next.push_back(std::move(cand));
      std::vector<int> next_pivots = pivots;
      next_pivots.push_back(pc);
      descend(i + 1, next, next_pivots);
    }
  }

  std::vector<RationalVector> rows_;
  RationalVector rhs_;
  int dim_;
  std::set<RationalVector> found_;
};

}  // namespace

Rational to_rational(double value, CoefficientReading reading) {
  if (!std::isfinite(value)) {
    throw InexactCoefficientError("non-finite coefficient");
  }
  if (reading == CoefficientReading::kBinaryExact) return Rational(value);

  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  const std::string text(buf, res.ptr);
  std::string digits;
  int frac_len = 0;
  long exponent = 0;
  bool negative = false;
  bool after_point = false;
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') {
    negative = true;
    ++i;
  }
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.') {
      after_point = true;
    } else if (c == 'e' || c == 'E') {
      exponent = std::stol(text.substr(i + 1));
      break;
    } else {
      digits.push_back(c);
      if (after_point) ++frac_len;
    }
  }
  const auto first = digits.find_first_not_of('0');
  if (first == std::string::npos) return Rational(0);
  const auto last = digits.find_last_not_of('0');
  if (static_cast<int>(last - first + 1) > kMaxDecimalDigits) {
    throw InexactCoefficientError(
        "coefficient " + text +
        " has no short decimal form; build the model from rational data");
  }
  mpz_class mantissa(digits.substr(first));
  const long scale = exponent - frac_len;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational q = scale >= 0 ? Rational(mantissa * power) : Rational(mantissa, power);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool HPolytope::contains(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars) return false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (dot(e[i], point) != h[i]) return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (dot(a[i], point) > b[i]) return false;
  }
  return true;
}

HPolytope from_relaxation(const Model& relaxed, CoefficientReading reading) {
  if (relaxed.num_binaries() > 0) {
    throw InputError("from_relaxation needs a relaxed model; call relax()");
  }
  HPolytope p;
  const int n = relaxed.num_variables();
  p.num_vars = n;
  for (const auto& row : relaxed.constraints()) {
    RationalVector coeffs(n, 0);
    for (const Term& t : row.terms) {
      coeffs[t.var.index()] = to_rational(t.coeff, reading);
    }
    const Rational rhs = to_rational(row.rhs, reading);
    switch (row.relation) {
      case Relation::kLessEqual:
        p.a.push_back(std::move(coeffs));
        p.b.push_back(rhs);
        break;
      case Relation::kGreaterEqual:
        for (auto& c : coeffs) c = -c;
        p.a.push_back(std::move(coeffs));
        p.b.push_back(-rhs);
        break;
      case Relation::kEqual:
        p.e.push_back(std::move(coeffs));
        p.h.push_back(rhs);
        break;
    }
  }
  const auto vars = relaxed.variables();
  for (int j = 0; j < n; ++j) {
    const Variable& v = vars[j];
    if (std::isfinite(v.lower) && v.lower == v.upper) {
      RationalVector unit(n, 0);
      unit[j] = 1;
      p.e.push_back(std::move(unit));
      p.h.push_back(to_rational(v.lower, reading));
      continue;
    }
    if (std::isfinite(v.lower)) {
      RationalVector unit(n, 0);
      unit[j] = -1;
      p.a.push_back(std::move(unit));
      p.b.push_back(-to_rational(v.lower, reading));
    }
    if (std::isfinite(v.upper)) {
      RationalVector unit(n, 0);
      unit[j] = 1;
      p.a.push_back(std::move(unit));
      p.b.push_back(to_rational(v.upper, reading));
    }
  }
  return p;
}

int free_dimension(const HPolytope& p) {
  const AffineHull hull = eliminate_equalities(p);
  return hull.empty ? -1 : static_cast<int>(hull.free_cols.size());
}

std::vector<RationalVector> enumerate_vertices(
    const HPolytope& p, const VertexEnumOptions& options) {
  const AffineHull hull = eliminate_equalities(p);
  if (hull.empty) return {};
  const int dim = static_cast<int>(hull.free_cols.size());
  if (dim > options.max_dimension) {
    throw DimensionGuardError(
        "polytope has dimension " + std::to_string(dim) +
        " after eliminating equalities, above the enumeration limit of " +
        std::to_string(options.max_dimension) + "; use fewer segments");
  }

  // Inequalities in the free coordinates: (A D) z <= b - A origin.
  std::set<std::pair<RationalVector, Rational>> seen;
  std::vector<RationalVector> rows;
  RationalVector rhs;
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    RationalVector row(dim, 0);
    for (int f = 0; f < dim; ++f) row[f] = dot(p.a[i], hull.direction[f]);
    Rational r = p.b[i] - dot(p.a[i], hull.origin);
    int lead = -1;
    for (int f = 0; f < dim; ++f) {
      if (sgn(row[f]) != 0) {
        lead = f;
        break;
      }
    }
    if (lead < 0) {
      if (sgn(r) < 0) return {};  // 0 <= negative
      continue;
    }
    // Positive scaling keeps the half-space; use it to spot duplicates.
    const Rational scale = abs(row[lead]);
    for (auto& v : row) v /= scale;
    r /= scale;
    if (!seen.emplace(row, r).second) continue;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(r));
  }

  std::set<RationalVector> found;
  if (dim == 0) {
    found.insert(RationalVector{});
  } else {
    found = SubsetSearch(std::move(rows), std::move(rhs), dim).run();
  }

  std::vector<RationalVector> out;
  out.reserve(found.size());
  for (const RationalVector& z : found) {
    RationalVector x = hull.origin;
    for (int f = 0; f < dim; ++f) {
      if (sgn(z[f]) == 0) continue;
      for (int j = 0; j < p.num_vars; ++j) x[j] += z[f] * hull.direction[f][j];
    }
    out.push_back(std::move(x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex(const HPolytope& p, std::span<const Rational> point) {
  if (!p.contains(point)) return false;
  std::vector<RationalVector> active = p.e;
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    if (dot(p.a[i], point) == p.b[i]) active.push_back(p.a[i]);
  }
  return static_cast<int>(rref(active, p.num_vars).size()) == p.num_vars;
}

}  // namespace pwlmip
