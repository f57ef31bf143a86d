#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/moments.hpp"

#include <doctest.h>

using namespace oscgauss;

namespace {

struct Frozen {
  int m;
  const char* omega;
  const char* re;
  const char* im;
};

// mpmath quad at 60 digits.
const Frozen kMoments[] = {
    {1, "2", "0", "0.8707955499599832346955781624566346111171"},
    {0, "100", "-0.0101273128221951758731311522091957086413", "0"},
    {5, "0.5", "0", "0.1382746239517622036237924113007540762342"},
    {7, "10", "0", "0.05458181702198080449206619689877785639636"},
    {40, "50", "0.01273643502121287679979845736595844286318", "0"},
    {3, "0.25", "0", "0.09925775862979746967079598380154487241043"},
};

}  // namespace

TEST_SUITE("moments") {
  TEST_CASE("frozen reference moments") {
    for (const auto& f : kMoments) {
      PrecisionScope scope(256);
      const Real w{std::string_view(f.omega)};
      const MomentTable t = moment_table(w, f.m);
      CAPTURE(f.m);
      CAPTURE(f.omega);
      CHECK(test::gap(t[static_cast<std::size_t>(f.m)], test::lit(f.re, f.im)) < 1e-38);
      CHECK(test::gap(moment_closed_form(f.m, w, 256), test::lit(f.re, f.im)) < 1e-38);
    }
  }

  TEST_CASE("omega = 0 gives Legendre moments") {
    const MomentTable t = moment_table(Real(0), 6);
    CHECK(test::gap(t[2], Complex(Real(2) / Real(3))) < 1e-75);
    CHECK(t[3].is_zero());
    CHECK(t.certified_digits >= 77);
  }

  TEST_CASE("series branch below the switch matches the closed form") {
    PrecisionScope scope(256);
    for (int m : {0, 1, 4, 9}) {
      const Real w("0.2");
      CHECK(test::gap(moment_series(m, w, 256), moment_closed_form(m, w, 256)) < 1e-70);
    }
  }

  TEST_CASE("tables are reproducible at higher precision") {
    const MomentTable a = moment_table(Real(37), 60, 256);
    const MomentTable b = moment_table(Real(37), 60, 512);
    PrecisionScope scope(512);
    for (std::size_t m = 0; m <= 60; ++m) CHECK(test::gap(a[m], b[m]) < 1e-70);
    CHECK(a.certified_digits > 70);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(moment_table(Real(-1), 3), InvalidArgument);
    CHECK_THROWS_AS(moment_table(Real(1), -1), InvalidArgument);
    CHECK_THROWS_AS(moment_table(Real(1), 3, 32), InvalidArgument);
    CHECK_THROWS_AS(moment_closed_form(2, Real(0), 256), InvalidArgument);
  }
}
