#include "support.hpp"

#include "oscgauss/analysis.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/rules.hpp"

#include <doctest.h>

#include <cmath>

using namespace oscgauss;

TEST_SUITE("analysis") {
  TEST_CASE("first breakdown of the 2-point rule") {
    BreakdownOptions bo;
    bo.refine_tol = 1e-30;
    const BreakdownScan scan = breakdown_scan(2, 5.0, 7.0, 0.01, bo);
    REQUIRE(scan.records.size() == 1);
    const BreakdownRecord& r = scan.records[0];
    PrecisionScope scope(256);
    // mpmath root of the closed-form norm at 60 digits.
    CHECK(abs(r.omega_star - Real("5.929959080771442342937680882004447777242")).to_double() < 1e-29);
    CHECK(r.bracket_lo <= r.omega_star.to_double());
    CHECK(r.bracket_hi >= r.omega_star.to_double());
    CHECK((r.refined_hi - r.refined_lo).to_double() <= 1e-30);
    CHECK(scan.samples.size() >= 200);
  }

  TEST_CASE("breakdown scan arguments") {
    CHECK_THROWS_AS(breakdown_scan(3, 1, 2, 0.01), InvalidArgument);
    CHECK_THROWS_AS(breakdown_scan(2, 2, 1, 0.01), InvalidArgument);
    CHECK_THROWS_AS(breakdown_scan(2, 1, 2, 0.1), InvalidArgument);
  }

  TEST_CASE("scans are independent of the worker count") {
    BreakdownOptions one, four;
    four.jobs = 4;
    const BreakdownScan a = breakdown_scan(4, 3, 9, 0.02, one);
    const BreakdownScan b = breakdown_scan(4, 3, 9, 0.02, four);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(a.records[i].omega_star == b.records[i].omega_star);
  }

  TEST_CASE("log grid") {
    const auto g = log_grid(10, 1000, 4);
    CHECK(g.size() == 9);
    CHECK(g.front() == 10.0);
    CHECK(g.back() == doctest::Approx(1000.0));
    CHECK(g[4] == doctest::Approx(100.0));
  }

  TEST_CASE("rule family names") {
    CHECK(parse_rule_family("gauss-osc") == RuleFamily::GaussOscillatory);
    CHECK(parse_rule_family("superinterp-filon") == RuleFamily::SuperinterpolationFilon);
    CHECK(rule_family_name(RuleFamily::Superinterpolation) == "superinterp");
    CHECK_THROWS_AS(parse_rule_family("simpson"), InvalidArgument);
  }

  TEST_CASE("short asymptotic sweep") {
    const auto grid = log_grid(100, 1000, 5);
    const OrderFit fit = asymptotic_order(RuleFamily::GaussOscillatory, 2, Integrand::cos(), grid);
    CHECK(fit.fittable);
    CHECK(fit.slope == doctest::Approx(-3.0).epsilon(0.1));
    CHECK(fit.omegas.size() == grid.size());
    CHECK(fit.method == "gauss-osc");
  }

  TEST_CASE("2-point node distance to superinterpolation nodes stays within C / omega^2") {
    // The constant oscillates with cos(2 omega).
    for (double w : {100.0, 200.0, 400.0, 800.0}) {
      const auto d = superinterp_distance(2, Real(w));
      REQUIRE(d.size() == 2);
      CHECK(d[0] * w * w < 2.0);
      CHECK(d[0] * w * w > 0.5);
      CHECK(d[0] == doctest::Approx(d[1]));
    }
  }

  TEST_CASE("derivative identity converges at second order") {
    const FiniteDifferenceCheck c = check_derivative_identity(3, Real(5), 1e-4);
    CHECK(c.ratio == doctest::Approx(4.0).epsilon(0.05));
    CHECK(c.residual_h < 1e-5);
  }

  TEST_CASE("coefficient identities flag a vanishing beta") {
    // beta_2 vanishes at the first breakdown frequency.
    const CoeffRecurrenceCheck near = check_coeff_recurrences(1, Real("5.93"), 1e-5);
    CHECK(near.near_breakdown);
    const CoeffRecurrenceCheck far = check_coeff_recurrences(1, Real(2), 1e-4);
    CHECK_FALSE(far.near_breakdown);
    CHECK(far.first.ratio == doctest::Approx(4.0).epsilon(0.05));
  }

  TEST_CASE("limit product") {
    const QuadratureRule s = superinterpolation_rule(2, Real(30));
    PrecisionScope scope(256);
    for (const auto& x : s.nodes) CHECK(abs_d(laguerre_product(2, Real(30), x)) < 1e-70);
    const std::vector<Complex> samples{Complex(Real("-0.5")), Complex(0), Complex(Real("0.7"))};
    CHECK(limit_defect(2, Real(1000), samples) < limit_defect(2, Real(100), samples));
  }
}
