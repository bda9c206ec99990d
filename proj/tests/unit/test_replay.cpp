#include <doctest.h>

#include "stanley/replay.hpp"
#include "stanley/serialize.hpp"

using namespace stanley;

TEST_CASE("expectation table spot values") {
  auto p52 = expected_value(FamilySpec::parse("P:5,2"), Measure::Depth, Mod::Quotient);
  REQUIRE(p52.has_value());
  CHECK(p52->form == Expectation::Form::Exact);
  CHECK(p52->lo == 2);

  auto c43 = expected_value(FamilySpec::parse("C:4,3"), Measure::Depth, Mod::Quotient);
  REQUIRE(c43.has_value());
  CHECK(c43->form == Expectation::Form::Range);
  CHECK(c43->lo == 1);
  CHECK(c43->hi == 2);

  auto c32 = expected_value(FamilySpec::parse("C:3,2"), Measure::Sdepth, Mod::Quotient);
  REQUIRE(c32.has_value());
  CHECK(c32->form == Expectation::Form::Exact);
  CHECK(c32->lo == 1);

  // Swapped grids read off the same closed form.
  auto p27 = expected_value(FamilySpec::parse("P:2,7"), Measure::Depth, Mod::Quotient);
  REQUIRE(p27.has_value());
  CHECK(p27->lo == 3);  // ceil(7/3)

  auto ideal_depth =
      expected_value(FamilySpec::parse("P:5,2"), Measure::Depth, Mod::Ideal);
  REQUIRE(ideal_depth.has_value());
  CHECK(ideal_depth->lo == 3);

  auto strict =
      expected_value(FamilySpec::parse("P:4,2"), Measure::Sdepth, Mod::Ideal);
  REQUIRE(strict.has_value());
  CHECK(strict->form == Expectation::Form::StrictLowerBound);
  CHECK(strict->lo == 2);

  auto pair = expected_value(FamilySpec::parse("C:5,2"), Measure::Sdepth, Mod::Pair);
  REQUIRE(pair.has_value());
  CHECK(pair->lo == 3);  // ceil((5+2)/3)

  auto p44d = expected_value(FamilySpec::parse("P:4,4"), Measure::Depth, Mod::Quotient);
  REQUIRE(p44d.has_value());
  CHECK(p44d->form == Expectation::Form::Exact);
  CHECK(p44d->lo == 4);

  auto p54s = expected_value(FamilySpec::parse("P:5,4"), Measure::Sdepth, Mod::Quotient);
  REQUIRE(p54s.has_value());
  CHECK(p54s->lo == 4);

  auto big = expected_value(FamilySpec::parse("P:5,5"), Measure::Depth, Mod::Quotient);
  REQUIRE(big.has_value());
  CHECK(big->form == Expectation::Form::UpperBound);
  CHECK(big->lo == 4);

  // Wrapped-grid depth bound splits on the layer count mod 3.
  auto c54 = expected_value(FamilySpec::parse("C:5,4"), Measure::Depth, Mod::Quotient);
  REQUIRE(c54.has_value());
  CHECK(c54->form == Expectation::Form::UpperBound);
  CHECK(c54->lo == 2 + (2 - 1) * 2);  // ceil(4/3) + (ceil(4/3)-1)*ceil(5/3)

  CHECK_FALSE(
      expected_value(FamilySpec::parse("Cdiamond:6"), Measure::Depth, Mod::Quotient)
          .has_value());
  CHECK_FALSE(
      expected_value(FamilySpec::parse("C:5,2"), Measure::Sdepth, Mod::Ideal)
          .has_value());
}

TEST_CASE("verdict logic") {
  Expectation exact = Expectation::exact(3, "");
  CHECK(judge(exact, 3, 3, true) == Verdict::Pass);
  CHECK(judge(exact, 2, 2, true) == Verdict::Fail);
  CHECK(judge(exact, 2, 4, false) == Verdict::Inconclusive);
  CHECK(judge(exact, 4, 5, false) == Verdict::Fail);

  Expectation range = Expectation::range(2, 3, "");
  CHECK(judge(range, 2, 2, true) == Verdict::Pass);
  CHECK(judge(range, 3, 3, true) == Verdict::Pass);
  CHECK(judge(range, 4, 4, true) == Verdict::Fail);
  CHECK(judge(range, 2, 4, false) == Verdict::Inconclusive);

  Expectation upper = Expectation::upper_bound(3, "");
  CHECK(judge(upper, 2, 2, true) == Verdict::Pass);
  CHECK(judge(upper, 4, 4, true) == Verdict::Fail);
  CHECK(judge(upper, 2, 4, false) == Verdict::Inconclusive);

  Expectation strict = Expectation::strict_lower_bound(2, "");
  CHECK(judge(strict, 3, 5, false) == Verdict::Pass);
  CHECK(judge(strict, 1, 2, false) == Verdict::Fail);
  CHECK(judge(strict, 1, 5, false) == Verdict::Inconclusive);
}

TEST_CASE("suites run clean at a reduced size") {
  SuiteLimits limits;
  limits.max_vars = 9;
  limits.budget = Duration{60 * 1000};
  for (const char* suite : {"m1", "m2", "m3", "aux", "pairs", "conjecture", "bounds"}) {
    Report report = run_suite(suite, limits);
    CHECK_FALSE(report.any_fail());
    CHECK_FALSE(report.any_inconclusive());
    CHECK(!report.rows.empty());
  }
  CHECK_THROWS(run_suite("nope", limits));
  CHECK_THROWS(run_suite("stretch", limits));  // opt-in required
}

TEST_CASE("identity suite replays the displayed colon and sum forms") {
  SuiteLimits limits;
  limits.max_vars = 15;
  Report report = colon_identity_checks(limits);
  CHECK_FALSE(report.any_fail());
  // Both strip tiers are present: the two-layer rows and the three-layer rows.
  CHECK(report.rows.size() >= 15);
}

TEST_CASE("suites are deterministic") {
  SuiteLimits limits;
  limits.max_vars = 8;
  Report a = run_suite("m1", limits);
  Report b = run_suite("m1", limits);
  CHECK(report_to_json(a, false) == report_to_json(b, false));
}
