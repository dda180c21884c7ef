// SPDX-License-Identifier: Apache-2.0

#include <sstream>
#include <string>

#include "doctest.h"
#include "pwlmip/errors.h"
#include "pwlmip/formulations/formulations.h"
#include "pwlmip/lp/simplex.h"
#include "pwlmip/mip/branch_and_bound.h"
#include "pwlmip/model/lp_writer.h"
#include "pwlmip/model/model.h"
#include "test_support.h"

namespace pwlmip {
namespace {

int count_occurrences(const std::string& text, const std::string& what) {
  int n = 0;
  for (std::size_t p = text.find(what); p != std::string::npos;
       p = text.find(what, p + 1)) {
    ++n;
  }
  return n;
}

TEST_CASE("variables and handles") {
  Model m;
  const VarId b = m.add_variable({"b", -3, 7, VarKind::kBinary});
  CHECK(m.variable(b).lower == 0.0);
  CHECK(m.variable(b).upper == 1.0);
  const VarId x = m.add_variable({"x", 0, 5});
  CHECK(x.index() == 1);
  CHECK(m.var_at(1) == x);
  CHECK_THROWS_AS(m.add_variable({"bad", 2, 1}), InputError);

  Model other;
  const VarId foreign = other.add_variable({"z"});
  CHECK_THROWS_AS(m.add_constraint({{{foreign, 1.0}}, Relation::kLessEqual, 1}),
                  ModelMismatchError);
  CHECK_THROWS_AS(m.set_objective(LinearExpr{}.add(foreign, 1.0), Sense::kMinimize),
                  ModelMismatchError);
  CHECK_FALSE(m.owns(foreign));

  // Handles issued earlier keep resolving after later mutations.
  for (int i = 0; i < 50; ++i) m.add_variable({});
  CHECK(m.variable(x).name == "x");
  CHECK(m.variable(b).kind == VarKind::kBinary);
}

TEST_CASE("terms are normalized") {
  Model m;
  const VarId x = m.add_variable({"x"});
  const VarId y = m.add_variable({"y"});
  const ConstraintId c = m.add_constraint(
      {{{y, 1.0}, {x, 2.0}, {y, 3.0}, {x, -2.0}}, Relation::kEqual, 4.0});
  const auto& row = m.constraint(c);
  REQUIRE(row.terms.size() == 1);
  CHECK(row.terms[0].var == y);
  CHECK(row.terms[0].coeff == 4.0);
}

TEST_CASE("objective value includes the constant") {
  Model m;
  m.set_objective(LinearExpr{}.add_constant(4.25), Sense::kMinimize);
  CHECK(m.objective_value({}) == 4.25);
  const VarId x = m.add_variable({"x"});
  m.set_objective(LinearExpr{}.add(x, 2.0).add_constant(1.0), Sense::kMaximize);
  const double v[] = {3.0};
  CHECK(m.objective_value(v) == 7.0);
}

TEST_CASE("max_violation") {
  Model m;
  const VarId x = m.add_variable({"x", 0, 2});
  m.add_constraint({{{x, 1.0}}, Relation::kGreaterEqual, 1.0});
  const double ok[] = {1.5};
  const double low[] = {0.25};
  const double high[] = {2.5};
  CHECK(m.max_violation(ok) == 0.0);
  CHECK(m.max_violation(low) == doctest::Approx(0.75));
  CHECK(m.max_violation(high) == doctest::Approx(0.5));
}

TEST_CASE("relax") {
  Model m;
  const PwlFunction f = testing::sawtooth_right();
  const Fragment frag = build_fragment(m, f, Method::kIncrementalRight);
  m.set_objective(frag.objective, Sense::kMaximize);
  REQUIRE(m.num_binaries() == 2);
  const Model r = relax(m);
  CHECK(r.num_binaries() == 0);
  CHECK(m.num_binaries() == 2);
  CHECK(r.num_constraints() == m.num_constraints());
  CHECK(r.num_variables() == m.num_variables());
  CHECK(r.objective() .terms == m.objective().terms);
  CHECK(r.objective().constant == m.objective().constant);
  for (const VarId b : frag.aux_binary) {
    CHECK(r.variable(b).lower == 0.0);
    CHECK(r.variable(b).upper == 1.0);
  }
  const Model rr = relax(r);
  CHECK(export_lp_text(rr) == export_lp_text(r));
  // Handles from the original resolve in the relaxation.
  CHECK(r.owns(frag.x));

  // The relaxation bounds the MILP optimum.
  Model mn;
  const Fragment g = build_fragment(mn, f, Method::kIncrementalRight);
  mn.set_objective(g.objective, Sense::kMinimize);
  const LpSolution lp = solve_lp(relax(mn));
  const MilpSolution ip = solve_milp(mn);
  REQUIRE(lp.status == LpStatus::kOptimal);
  REQUIRE(ip.status == MilpStatus::kOptimal);
  CHECK(lp.objective <= ip.objective + 1e-9);
}

TEST_CASE("lp text export") {
  Model m;
  const Fragment frag =
      build_fragment(m, testing::sawtooth_right(), Method::kIncrementalRight);
  m.set_objective(frag.objective, Sense::kMaximize);
  const std::string text = export_lp_text(m);
  CHECK(text == export_lp_text(m));
  CHECK(text.find("\nMaximize\n") != std::string::npos);
  CHECK(count_occurrences(text, "Binaries") == 1);
  const std::size_t bin = text.find("Binaries\n");
  const std::size_t end = text.find("End", bin);
  const std::string section = text.substr(bin + 9, end - bin - 9);
  CHECK(count_occurrences(section, "\n") == 2);
  CHECK(text.find("Subject To") < text.find("Bounds"));
  CHECK(text.find("Bounds") < bin);

  std::ostringstream os;
  write_lp(m, os);
  CHECK(os.str() == text);

  Model mn;
  const VarId v = mn.add_variable({"", -kInfinity, kInfinity});
  mn.add_variable({"", 1.5, 1.5});
  mn.set_objective(LinearExpr{}.add(v, 0.1), Sense::kMinimize);
  const std::string t2 = export_lp_text(mn);
  CHECK(t2.find("\nMinimize\n") != std::string::npos);
  CHECK(t2.find("v0 free") != std::string::npos);
  CHECK(t2.find("v1 = 1.5") != std::string::npos);
  CHECK(t2.find("0.10000000000000001 v0") != std::string::npos);
}

}  // namespace
}  // namespace pwlmip
