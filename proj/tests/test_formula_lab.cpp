#include "doctest.h"

#include "pancake/formula_lab.hpp"
#include "pancake/reference_tables.hpp"

using namespace pancake;

TEST_CASE("registry lookup") {
  CHECK(find_formula("R4_plain").k == 4);
  CHECK(find_formula("r4-burnt").graph == Kind::Burnt);
  CHECK(find_formula("r5-burnt").name == "R5_burnt_conj");
  CHECK(find_formula("R5_BURNT_CONJ").status == FormulaStatus::Conjectured);
  CHECK_THROWS_AS(find_formula("r12-plain"), UnknownFormula);
  CHECK(formula_registry().size() == 17);
}

TEST_CASE("evaluation") {
  CHECK(*eval_formula("R4_plain", 4).value == 3);
  CHECK(*eval_formula("R4_burnt", 3).value == 18);
  CHECK(*eval_formula("R5_burnt_conj", 4).value == 124);
  CHECK(*eval_formula("R1_plain", 1).value == 0);
  CHECK(*eval_formula("R3_plain", 4).value == 11);

  const FormulaValue below = eval_formula("R4_plain", 3);
  CHECK(below.out_of_validity());

  const FormulaValue r76 = eval_formula("R7_plain", 6);
  CHECK(r76.from_exception);
  CHECK(*r76.value == 2);
  CHECK(*eval_formula("R7_plain", 7).value == 1016);
  CHECK(*eval_formula("R8_plain", 7).value == 35);
  CHECK(eval_formula("R8_plain", 6).out_of_validity());
}

TEST_CASE("formulas grow past 64 bits without overflow") {
  const Int v = *eval_formula("R9_burnt_conj", 2'000).value;
  CHECK(v > Int{1} << 90);
  CHECK_THROWS_AS(eval_formula("R9_burnt_conj", 2'000'000'000), ArithmeticOverflow);
}

TEST_CASE("crosscheck against the published tables") {
  const auto r4 = crosscheck(find_formula("R4_plain"), published_table(Kind::Plain));
  CHECK(r4.mismatches() == 0);
  CHECK(r4.compared() == 18);
  CHECK(r4.verdict() == "verified");

  const auto r7 = crosscheck(find_formula("R7_plain"), published_table(Kind::Plain), 6, 6);
  REQUIRE(r7.rows.size() == 1);
  CHECK(r7.rows[0].from_exception);
  CHECK(r7.rows[0].outcome == CellOutcome::Equal);

  const auto r5b = crosscheck(find_formula("R5_burnt_conj"), published_table(Kind::Burnt));
  CHECK(r5b.verdict() == "consistent");

  CHECK_THROWS_AS(crosscheck(find_formula("R4_plain"), published_table(Kind::Burnt)), std::invalid_argument);
}

TEST_CASE("the eighth-layer polynomial misses two published values") {
  const auto r8 = crosscheck(find_formula("R8_plain"), published_table(Kind::Plain), 7, 21);
  CHECK(r8.verdict() == "mismatch");
  std::vector<int> bad;
  for (const auto& row : r8.rows) {
    if (row.outcome == CellOutcome::Mismatch) bad.push_back(row.n);
  }
  CHECK(bad == std::vector<int>{8, 9});
  CHECK(*eval_formula("R8_plain", 8).value == 8522);
  CHECK(*eval_formula("R8_plain", 9).value == 132695);
}

TEST_CASE("crosscheck against search profiles") {
  std::vector<LayerProfile> profiles;
  for (int n = 4; n <= 7; ++n) profiles.push_back(layer_profile(GraphKind::plain(n)));
  const auto r = crosscheck(find_formula("R4_plain"), profiles);
  CHECK(r.compared() == 4);
  CHECK(r.mismatches() == 0);

  std::vector<LayerProfile> burnt = {layer_profile(GraphKind::burnt(2))};
  CHECK_THROWS_AS(crosscheck(find_formula("R4_plain"), burnt), std::invalid_argument);
}

TEST_CASE("layer tables") {
  LayerTable t(Kind::Plain);
  t.set_row(3, {Int{1}, Int{2}, std::nullopt}, false);
  CHECK(*t.get(3, 1) == 2);
  CHECK_FALSE(t.get(3, 2));
  CHECK_FALSE(t.get(3, 5));
  CHECK_FALSE(t.get(4, 0));
  t.set_row(2, {Int{1}, Int{1}}, true);
  CHECK(*t.get(2, 9) == 0);
  t.set(5, 2, 12);
  CHECK(t.width(5) == 2);
  CHECK(t.rows() == std::vector<int>{2, 3, 5});
}

TEST_CASE("Newton fits") {
  std::vector<std::pair<int, Int>> constant = {{1, 5}, {2, 5}, {3, 5}};
  const NewtonPoly c = fit_newton(constant);
  CHECK(c.degree() == 0);
  CHECK(c.coefficients[0] == 5);

  const LayerTable& burnt = published_table(Kind::Burnt);
  std::vector<std::pair<int, Int>> r4b;
  for (int n = 1; n <= 6; ++n) r4b.emplace_back(n, *burnt.get(n, 4));
  const NewtonPoly p = fit_newton(r4b);
  CHECK(p.degree() == 4);
  for (int n = 1; n <= 10; ++n) CHECK(p(n) == *eval_formula("R4_burnt", n).value);

  const LayerTable& plain = published_table(Kind::Plain);
  std::vector<std::pair<int, Int>> r4;
  for (int n = 4; n <= 10; ++n) r4.emplace_back(n, *plain.get(n, 4));
  const NewtonPoly q = fit_newton(r4);
  CHECK(q.degree() == 4);
  for (int n = 4; n <= 21; ++n) CHECK(q(n) == *plain.get(n, 4));

  std::vector<std::pair<int, Int>> gap = {{1, 1}, {3, 2}, {4, 3}};
  CHECK_THROWS_AS(fit_newton(gap), NewtonFitError);
  std::vector<std::pair<int, Int>> short_run = {{1, 1}, {2, 4}, {3, 9}};
  CHECK_THROWS_AS(fit_newton(short_run), NewtonFitError);
  CHECK_THROWS_AS(fit_newton(std::vector<std::pair<int, Int>>{{1, 1}}), NewtonFitError);
}

TEST_CASE("binomial recurrence on the plain table") {
  const LayerTable& t = published_table(Kind::Plain);
  const auto c = check_binomial_recurrence(4, 10, t);
  CHECK(c.verdict == Verdict::Holds);
  CHECK(*c.lhs == 3963);
  CHECK(check_binomial_recurrence(6, 13, t).verdict == Verdict::Holds);
  const auto short_of_data = check_binomial_recurrence(4, 8, t);
  CHECK(short_of_data.verdict == Verdict::InsufficientData);
  CHECK_THROWS_AS(check_binomial_recurrence(7, 12, t), std::invalid_argument);

  // A tampered entry is caught.
  LayerTable bad = t;
  bad.set(10, 4, 3964);
  CHECK(check_binomial_recurrence(4, 10, bad).verdict == Verdict::Fails);
}

TEST_CASE("Gregory-Newton expansion on the burnt table") {
  const LayerTable& t = published_table(Kind::Burnt);
  CHECK(check_gregory_newton(4, 10, t).verdict == Verdict::Holds);
  CHECK(check_gregory_newton(2, 5, t).verdict == Verdict::Holds);
  CHECK(check_gregory_newton(7, 9, t).verdict == Verdict::Holds);
  CHECK_THROWS_AS(check_gregory_newton(7, 20, t), MissingTableData);
  // R^B_11(10) and R^B_11(11) are unknown but carry zero weight at n = 9.
  CHECK(check_gregory_newton(11, 9, t).verdict == Verdict::Holds);

  LayerTable holes(Kind::Burnt);
  holes.set(1, 2, 0);
  holes.set(5, 2, 20);
  CHECK_THROWS_AS(check_gregory_newton(2, 5, holes), MissingTableData);
  holes.set(2, 2, 2);
  CHECK(check_gregory_newton(2, 5, holes).verdict == Verdict::Holds);
  holes.set(5, 2, 21);
  CHECK(check_gregory_newton(2, 5, holes).verdict == Verdict::Fails);
  CHECK_THROWS_AS(check_gregory_newton(0, 3, t), std::invalid_argument);
}
