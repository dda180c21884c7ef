// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pwlmip/errors.h"
#include "pwlmip/formulations/formulations.h"
#include "pwlmip/lp/simplex.h"
#include "pwlmip/mip/branch_and_bound.h"
#include "pwlmip/model/lp_writer.h"
#include "test_support.h"

namespace pwlmip {
namespace {

using testing::sawtooth_left;
using testing::sawtooth_right;

std::map<std::string, double> by_name(const Model& m, const LinearExpr& e) {
  std::map<std::string, double> out;
  for (const Term& t : e.terms) out[m.variable(t.var).name] += t.coeff;
  return out;
}

// "name:coeff ... REL rhs" with terms in insertion order.
std::string render(const Model& m, ConstraintId id) {
  const LinearConstraint& c = m.constraint(id);
  std::ostringstream os;
  for (const Term& t : c.terms) os << m.variable(t.var).name << ':' << t.coeff << ' ';
  os << (c.relation == Relation::kLessEqual   ? "<="
         : c.relation == Relation::kEqual     ? "="
                                              : ">=")
     << ' ' << c.rhs;
  return os.str();
}

std::vector<std::string> render_all(const Model& m, const Fragment& f) {
  std::vector<std::string> out;
  for (ConstraintId id : f.constraints) out.push_back(render(m, id));
  return out;
}

double solve_with_fixed_x(const PwlFunction& f, Method method, Sense sense,
                          double x0) {
  Model m;
  const Fragment frag = build_fragment(m, f, method);
  m.add_constraint({{{frag.x, 1.0}}, Relation::kEqual, x0});
  m.set_objective(frag.objective, sense);
  const MilpSolution s = solve_milp(m);
  REQUIRE(s.status == MilpStatus::kOptimal);
  return s.objective;
}

std::vector<Method> methods_for(Continuity c) {
  switch (c) {
    case Continuity::kContinuous:
      return {Method::kIncrementalContinuous, Method::kIncrementalRight,
              Method::kIncrementalLeft, Method::kConvexCombination};
    case Continuity::kRightContinuous:
      return {Method::kIncrementalRight, Method::kConvexCombinationDisc};
    case Continuity::kLeftContinuous:
      return {Method::kIncrementalLeft, Method::kConvexCombinationDisc};
  }
  return {};
}

TEST_CASE("method and indicator names") {
  for (const char* name : {"incr", "incr-right", "incr-left", "cc", "cc-disc"}) {
    REQUIRE(parse_method(name));
    CHECK(method_name(*parse_method(name)) == name);
  }
  for (const char* name : {"fim", "pim", "pim-prime"}) {
    REQUIRE(parse_indicator(name));
    CHECK(indicator_name(*parse_indicator(name)) == name);
  }
  CHECK_FALSE(parse_method("sos2"));
  CHECK_FALSE(parse_indicator("x"));
}

TEST_CASE("right-continuous incremental model of the sawtooth") {
  Model m;
  const Fragment f = incremental_right_continuous(m, sawtooth_right());
  CHECK(f.objective.constant == 7.5);
  const std::map<std::string, double> want{{"y1", -5},   {"y2", -5},
                                           {"y3", -2.5}, {"beta1", 7.5},
                                           {"beta2", 2.5}};
  CHECK(by_name(m, f.objective) == want);
  // beta1 <= y1 <= 1; beta2 <= y2 <= beta1; 0 <= y3 <= beta2.
  const std::vector<std::string> rows{
      "y1:1 <= 1",           "y1:1 beta1:-1 >= 0", "y2:1 beta2:-1 >= 0",
      "y2:1 beta1:-1 <= 0",  "y3:1 beta2:-1 <= 0", "x:1 y1:-1 y2:-1 y3:-1 = 0"};
  CHECK(render_all(m, f) == rows);
  CHECK(m.variable(f.aux_continuous[2]).lower == 0.0);
  CHECK(count_vars(f) == VarCounts{3, 2, false});
  CHECK(m.variable(f.x).lower == 0.0);
  CHECK(m.variable(f.x).upper == 3.0);
}

TEST_CASE("left-continuous incremental model of the sawtooth") {
  Model m;
  const Fragment f = incremental_left_continuous(m, sawtooth_left());
  CHECK(f.objective.constant == 5.0);
  const std::map<std::string, double> want{{"yt1", 2.5},     {"yt2", 5},
                                           {"yt3", 5},       {"betat1", -2.5},
                                           {"betat2", -7.5}};
  CHECK(by_name(m, f.objective) == want);
  CHECK(render(m, f.x_definition) == "x:1 yt1:1 yt2:1 yt3:1 = 3");
  CHECK(count_vars(f) == VarCounts{3, 2, false});

  // betat1 = 1 forces yt1 to its full length, so x <= a_{K-1}.
  m.set_bounds(f.aux_binary[0], 1, 1);
  m.set_objective(LinearExpr{}.add(f.x, 1.0), Sense::kMaximize);
  const LpSolution lp = solve_lp(relax(m));
  REQUIRE(lp.status == LpStatus::kOptimal);
  CHECK(lp.values[f.aux_continuous[0].index()] == doctest::Approx(1.0));
  CHECK(lp.objective == doctest::Approx(2.0));
}

TEST_CASE("incremental model of a continuous function") {
  const PwlFunction f({0, 1, 3, 4}, {2, -1, 0.5}, {1, 4, -0.5},
                      Continuity::kContinuous);
  Model m;
  const Fragment a = incremental_continuous(m, f);
  CHECK(a.objective.constant == 1.0);
  CHECK(by_name(m, a.objective) ==
        std::map<std::string, double>{{"y1", 2}, {"y2", -1}, {"y3", 0.5}});
  Model m2;
  const Fragment b = incremental_right_continuous(m2, f);
  CHECK(by_name(m2, b.objective) == by_name(m, a.objective));
  CHECK(b.objective.constant == a.objective.constant);
  CHECK(render_all(m2, b) == render_all(m, a));

  const PwlFunction one({2, 5}, {-1}, {4}, Continuity::kContinuous);
  Model m3;
  const Fragment c = incremental_continuous(m3, one);
  CHECK(count_vars(c) == VarCounts{1, 0, false});
  CHECK(c.objective.constant == 2.0);
  CHECK(by_name(m3, c.objective) == std::map<std::string, double>{{"y1", -1}});
}

TEST_CASE("convex combination models") {
  const PwlFunction f({0, 1, 3, 4}, {2, -1, 0.5}, {1, 4, -0.5},
                      Continuity::kContinuous);
  Model m;
  const Fragment cc = convex_combination_continuous(m, f);
  CHECK(count_vars(cc) == VarCounts{4, 3, false});
  CHECK(by_name(m, cc.objective) ==
        std::map<std::string, double>{
            {"lambda0", 1}, {"lambda1", 3}, {"lambda2", 1}, {"lambda3", 1.5}});
  CHECK(render(m, cc.x_definition) ==
        "x:1 lambda1:-1 lambda2:-3 lambda3:-4 = 0");

  // All weight on lambda_0.
  std::vector<double> point(m.num_variables(), 0.0);
  point[cc.x.index()] = 0.0;
  point[cc.aux_continuous[0].index()] = 1.0;
  point[cc.aux_binary[0].index()] = 1.0;
  CHECK(m.max_violation(point) == 0.0);
  m.set_objective(cc.objective, Sense::kMinimize);
  CHECK(m.objective_value(point) == 1.0);

  CHECK(solve_with_fixed_x(f, Method::kConvexCombination, Sense::kMaximize, 1.0) ==
        doctest::Approx(evaluate(f, 1.0)).epsilon(1e-12));

  Model md;
  const Fragment d = convex_combination_discontinuous(md, sawtooth_right());
  CHECK(count_vars(d) == VarCounts{6, 3, false});
  CHECK(by_name(md, d.objective) ==
        std::map<std::string, double>{{"lambda0", 7.5},
                                      {"lambda1", 2.5},
                                      {"lambda2", 10},
                                      {"lambda3", 5},
                                      {"lambda4", 7.5},
                                      {"lambda5", 5}});
  CHECK(render(md, d.x_definition) ==
        "x:1 lambda1:-1 lambda2:-1 lambda3:-2 lambda4:-2 lambda5:-3 = 0");
  CHECK(render(md, d.constraints[1]) == "lambda0:1 lambda1:1 beta1:-1 = 0");
  CHECK(render(md, d.constraints.back()) == "beta1:1 beta2:1 beta3:1 = 1");

  std::mt19937_64 rng(5);
  for (int k = 1; k <= 5; ++k) {
    const PwlFunction g = testing::random_pwl(rng, k, Continuity::kContinuous);
    Model mk;
    CHECK(count_vars(convex_combination_continuous(mk, g)) ==
          VarCounts{k + 1, k, false});
    Model mi;
    CHECK(count_vars(incremental_continuous(mi, g)) == VarCounts{k, k - 1, false});
  }
}

TEST_CASE("builders reject the wrong continuity class") {
  Model m;
  CHECK_THROWS_AS(incremental_continuous(m, sawtooth_right()), WrongMethodError);
  CHECK_THROWS_AS(incremental_right_continuous(m, sawtooth_left()), WrongMethodError);
  CHECK_THROWS_AS(incremental_left_continuous(m, sawtooth_right()), WrongMethodError);
  CHECK_THROWS_AS(convex_combination_continuous(m, sawtooth_left()), WrongMethodError);
  const PwlFunction c({0, 1}, {1}, {0}, Continuity::kContinuous);
  CHECK_THROWS_AS(convex_combination_discontinuous(m, c), WrongMethodError);
}

TEST_CASE("binary indicator variants") {
  const PwlFunction f = shift_domain(sawtooth_right(), 1.0);  // a_0 = 1

  SUBCASE("all variants scale the first cap") {
    for (IndicatorVariant v : {IndicatorVariant::kFIM, IndicatorVariant::kPIM,
                               IndicatorVariant::kPIMPrime}) {
      Model m;
      const Fragment frag = with_binary_indicator(
          m, incremental_right_continuous(m, f), v);
      CHECK(render(m, *frag.first_segment_cap) == "y1:1 alpha:-1 <= 0");
      CHECK(count_vars(frag) == VarCounts{3, 3, true});
      CHECK(m.variable(frag.x).lower == 0.0);
      CHECK(m.variable(frag.x).upper == 4.0);
      CHECK(frag.indicator_variant == v);
    }
  }

  SUBCASE("FIM keeps the x row and objective") {
    Model m;
    const Fragment frag = with_binary_indicator(
        m, incremental_right_continuous(m, f), IndicatorVariant::kFIM);
    CHECK(render(m, frag.x_definition) == "x:1 y1:-1 y2:-1 y3:-1 = 1");
    CHECK(frag.objective.constant == 7.5);
  }

  SUBCASE("PIM moves the anchor and constant onto alpha") {
    Model m;
    const Fragment frag = with_binary_indicator(
        m, incremental_right_continuous(m, f), IndicatorVariant::kPIM);
    CHECK(render(m, frag.x_definition) == "x:1 y1:-1 y2:-1 y3:-1 alpha:-1 = 0");
    CHECK(frag.objective.constant == 0.0);
    CHECK(by_name(m, frag.objective)["alpha"] == 7.5);

    // alpha = 0 chains every y to zero, so x = 0 and the objective is 0.
    m.set_bounds(*frag.indicator, 0, 0);
    for (Sense s : {Sense::kMaximize, Sense::kMinimize}) {
      m.set_objective(LinearExpr{}.add(frag.x, 1.0), s);
      const LpSolution lp = solve_lp(relax(m));
      REQUIRE(lp.status == LpStatus::kOptimal);
      CHECK(lp.objective == doctest::Approx(0.0));
      for (VarId y : frag.aux_continuous) CHECK(lp.values[y.index()] == doctest::Approx(0.0));
      m.set_objective(frag.objective, s);
      const MilpSolution ip = solve_milp(m);
      REQUIRE(ip.status == MilpStatus::kOptimal);
      CHECK(ip.objective == doctest::Approx(0.0));
    }
  }

  SUBCASE("PIM-prime adds the lower bound row") {
    Model m;
    const Fragment frag = with_binary_indicator(
        m, incremental_right_continuous(m, f), IndicatorVariant::kPIMPrime);
    CHECK(render(m, frag.x_definition) == "x:1 y1:-1 y2:-1 y3:-1 = 1");
    CHECK(render(m, frag.constraints.back()) == "x:1 alpha:-1 >= 0");
    CHECK(frag.objective.constant == 7.5);
  }

  SUBCASE("left mirror anchors on a_K") {
    const PwlFunction g = shift_domain(sawtooth_left(), 1.0);
    Model m;
    const Fragment frag = with_binary_indicator(
        m, incremental_left_continuous(m, g), IndicatorVariant::kPIM);
    CHECK(render(m, frag.x_definition) == "x:1 yt1:1 yt2:1 yt3:1 alpha:-4 = 0");
    CHECK(by_name(m, frag.objective)["alpha"] == 5.0);
    Model mp;
    const Fragment prime = with_binary_indicator(
        mp, incremental_left_continuous(mp, g), IndicatorVariant::kPIMPrime);
    CHECK(render(mp, prime.constraints.back()) == "x:1 alpha:-1 >= 0");
  }

  SUBCASE("PIM with a_0 = 0 has the same rows as FIM") {
    Model a;
    const Fragment fa = with_binary_indicator(
        a, incremental_right_continuous(a, sawtooth_right()), IndicatorVariant::kFIM);
    Model b;
    const Fragment fb = with_binary_indicator(
        b, incremental_right_continuous(b, sawtooth_right()), IndicatorVariant::kPIM);
    CHECK(render_all(a, fa) == render_all(b, fb));
    a.set_objective(LinearExpr{}, Sense::kMinimize);
    b.set_objective(LinearExpr{}, Sense::kMinimize);
    CHECK(export_lp_text(a) == export_lp_text(b));
  }

  SUBCASE("misuse") {
    Model m;
    Fragment cc = convex_combination_discontinuous(m, f);
    CHECK_THROWS_AS(with_binary_indicator(m, cc, IndicatorVariant::kFIM),
                    WrongMethodError);
    Fragment inc = with_binary_indicator(m, incremental_right_continuous(m, f, "b_"),
                                         IndicatorVariant::kFIM);
    CHECK_THROWS_AS(with_binary_indicator(m, inc, IndicatorVariant::kPIM),
                    WrongMethodError);
  }
}

TEST_CASE("separable sums") {
  const std::vector<PwlFunction> one{sawtooth_right()};
  const SeparableModel s = separable_sum(one, Method::kIncrementalRight, Sense::kMaximize);
  Model m;
  const Fragment frag = incremental_right_continuous(m, sawtooth_right());
  m.set_objective(frag.objective, Sense::kMaximize);
  CHECK(export_lp_text(s.model) == export_lp_text(m));

  const std::vector<PwlFunction> mixed{sawtooth_right(), sawtooth_left()};
  try {
    separable_sum(mixed, Method::kIncrementalRight, Sense::kMaximize);
    FAIL("expected WrongMethodError");
  } catch (const WrongMethodError& e) {
    CHECK(std::string(e.what()).find("function #1") != std::string::npos);
  }
  CHECK_THROWS_AS(separable_sum({}, Method::kIncrementalRight, Sense::kMaximize),
                  InputError);

  const std::vector<PwlFunction> many(1000, sawtooth_right());
  const SeparableModel big = separable_sum(many, Method::kIncrementalRight, Sense::kMaximize);
  CHECK(big.model.num_binaries() == 2000);
  const MilpSolution sol = solve_milp(big.model);
  CHECK(sol.objective == doctest::Approx(10000.0).epsilon(1e-9));
  const std::vector<PwlFunction> many_left(1000, sawtooth_left());
  const MilpSolution sol2 = solve_milp(
      separable_sum(many_left, Method::kIncrementalLeft, Sense::kMinimize).model);
  CHECK(sol2.objective == doctest::Approx(2500.0).epsilon(1e-9));
}

TEST_CASE("unconstrained optima of the sawtooth fixtures") {
  for (Method method : {Method::kIncrementalRight, Method::kConvexCombinationDisc}) {
    Model m;
    const Fragment f = build_fragment(m, sawtooth_right(), method);
    m.set_objective(f.objective, Sense::kMaximize);
    const MilpSolution s = solve_milp(m);
    CHECK(s.objective == doctest::Approx(10.0));
    CHECK(s.values[f.x.index()] == doctest::Approx(1.0));
  }
  for (Method method : {Method::kIncrementalLeft, Method::kConvexCombinationDisc}) {
    Model m;
    const Fragment f = build_fragment(m, sawtooth_left(), method);
    m.set_objective(f.objective, Sense::kMinimize);
    const MilpSolution s = solve_milp(m);
    CHECK(s.objective == doctest::Approx(2.5));
    CHECK(s.values[f.x.index()] == doctest::Approx(1.0));
  }
}

TEST_CASE("property: fixed interior x reproduces evaluate") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 5)(rng);
    const Continuity c = testing::random_continuity(rng);
    const PwlFunction f = testing::random_pwl(rng, k, c);
    const int seg = std::uniform_int_distribution<int>(1, k)(rng);
    const double t = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
    const double x0 = f.breakpoint(seg - 1) + t * f.segment_length(seg);
    const double want = testing::reference_value(f, x0);
    for (Method method : methods_for(c)) {
      for (Sense s : {Sense::kMaximize, Sense::kMinimize}) {
        CHECK(std::abs(solve_with_fixed_x(f, method, s, x0) - want) <= 1e-8);
      }
    }
  }
}

TEST_CASE("property: breakpoints admit exactly the two one-sided values") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    const Continuity c = trial % 2 ? Continuity::kRightContinuous
                                   : Continuity::kLeftContinuous;
    const PwlFunction f = testing::random_pwl(rng, k, c);
    const Method method = c == Continuity::kRightContinuous
                              ? Method::kIncrementalRight
                              : Method::kIncrementalLeft;
    for (int j = 1; j < k; ++j) {
      const double lo = one_sided_limit(f, j, Side::kLeft);
      const double hi = one_sided_limit(f, j, Side::kRight);
      const double max = solve_with_fixed_x(f, method, Sense::kMaximize, f.breakpoint(j));
      const double min = solve_with_fixed_x(f, method, Sense::kMinimize, f.breakpoint(j));
      CHECK(max == doctest::Approx(std::max(lo, hi)).epsilon(1e-9));
      CHECK(min == doctest::Approx(std::min(lo, hi)).epsilon(1e-9));
    }
  }
}

TEST_CASE("property: dichotomy at integral points") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = std::uniform_int_distribution<int>(2, 5)(rng);
    const PwlFunction f = testing::random_pwl(rng, k, Continuity::kRightContinuous);
    Model m;
    const Fragment frag = incremental_right_continuous(m, f);
    LinearExpr obj = frag.objective;
    obj.add(frag.x, std::uniform_real_distribution<double>(-4, 4)(rng));
    m.set_objective(obj, trial % 2 ? Sense::kMaximize : Sense::kMinimize);
    const MilpSolution s = solve_milp(m);
    REQUIRE(s.status == MilpStatus::kOptimal);
    for (int j = 1; j < k; ++j) {
      const double y = s.values[frag.aux_continuous[j - 1].index()];
      if (y < f.segment_length(j) - 1e-7) {
        CHECK(s.values[frag.aux_continuous[j].index()] == doctest::Approx(0.0));
      }
    }
  }
}

}  // namespace
}  // namespace pwlmip
