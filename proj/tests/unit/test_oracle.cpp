#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/oracle.hpp"

#include <doctest.h>

using namespace oscgauss;

TEST_SUITE("oracle") {
  // mpmath quad over panels at 60 digits.
  TEST_CASE("frozen integrals") {
    struct Case {
      Integrand f;
      int omega;
      const char* re;
      const char* im;
    };
    const Case cases[] = {
        {Integrand::sin(), 30, "0", "-0.009850454612050175073717483260991524968302"},
        {Integrand::exp(), 100, "-0.01542303836120655678440051601455617779829", "-0.02042219374389332446463430546380619105873"},
        {Integrand::runge(1.0), 3, "0.2947688532435849771407598513098321548754", "0"},
    };
    for (const auto& c : cases) {
      const ReferenceValue ref = reference_integral(c.f, Real(c.omega), 1e-35);
      PrecisionScope scope(256);
      CAPTURE(c.f.name());
      CHECK(test::gap(ref.value, test::lit(c.re, c.im)) < 1e-35);
      CHECK(ref.est_error <= 1e-35);
    }
  }

  TEST_CASE("cos at a small frequency") {
    PrecisionScope scope(256);
    const ReferenceValue ref = reference_integral(Integrand::cos(), Real("0.5"), 1e-35);
    CHECK(test::gap(ref.value, test::lit("1.623847734944442287841058117858800991301")) < 1e-35);
    CHECK_FALSE(ref.method_b.has_value());
    CHECK(ref.method_b_name == "none");
  }

  TEST_CASE("both routes report at large frequency for entire integrands") {
    const ReferenceValue ref = reference_integral(Integrand::cos(), Real(80), 1e-30);
    REQUIRE(ref.method_b.has_value());
    CHECK(ref.method_b_name == "steepest-descent");
    CHECK(abs_d(*ref.method_b - ref.method_a) <= 1e-30);
    CHECK(ref.laguerre_points >= 8);
    const ReferenceValue runge = reference_integral(Integrand::runge(1.0), Real(80), 1e-30);
    CHECK_FALSE(runge.method_b.has_value());
  }

  TEST_CASE("tolerance below working precision is rejected") {
    CHECK_THROWS_AS(reference_integral(Integrand::sin(), Real(1), 1e-100), InvalidArgument);
  }

  TEST_CASE("Laguerre polynomials") {
    PrecisionScope scope(256);
    // L_3(x) = (-x^3 + 9x^2 - 18x + 6) / 6
    const Complex x(Real(2), Real(1));
    const Complex expected = (-(x * x * x) + Real(9) * x * x - Real(18) * x + Complex(6)) / Real(6);
    CHECK(test::gap(laguerre_eval(3, x), expected) < 1e-75);
  }
}
