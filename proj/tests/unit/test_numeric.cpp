#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/linalg.hpp"
#include "oscgauss/matching.hpp"
#include "oscgauss/parallel.hpp"
#include "oscgauss/real.hpp"

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <stdexcept>

using namespace oscgauss;

TEST_SUITE("numeric") {
  TEST_CASE("precision scope controls new values") {
    PrecisionScope outer(128);
    CHECK(working_precision() == 128);
    {
      PrecisionScope inner(512);
      CHECK(Real(1).precision() == 512);
    }
    CHECK(working_precision() == 128);
    CHECK(digits10_for_bits(256) == 77);
  }

  TEST_CASE("decimal parsing is exact to working precision") {
    PrecisionScope scope(256);
    const Real tenth("0.1");
    CHECK(abs(tenth * 10 - Real(1)).to_double() < 1e-75);
    CHECK_THROWS_AS(Real(std::string_view("zero point one")), std::invalid_argument);
  }

  TEST_CASE("elementary functions at 256 bits") {
    PrecisionScope scope(256);
    const Real p = pi();
    CHECK(abs(sin(p)).to_double() < 1e-75);
    CHECK(abs(Real("3.141592653589793238462643383279502884197169399375105820974944") - p).to_double() < 1e-59);
    CHECK(abs(exp(log(Real(7))) - Real(7)).to_double() < 1e-74);
    CHECK(factorial(20).to_double() == doctest::Approx(2432902008176640000.0));
  }

  TEST_CASE("complex arithmetic") {
    PrecisionScope scope(256);
    const Complex z(Real(3), Real(4));
    CHECK(abs(z).to_double() == doctest::Approx(5.0));
    CHECK(test::gap(z * conj(z), Complex(Real(25))) < 1e-70);
    CHECK(test::gap(mul_i(z), Complex(Real(-4), Real(3))) == 0.0);
    CHECK(test::gap(expi(pi()), Complex(Real(-1))) < 1e-75);
    CHECK(test::gap(z / z, Complex(1)) < 1e-75);
  }

  TEST_CASE("full-pivot LU solves and flags singular matrices") {
    PrecisionScope scope(256);
    ComplexMatrix a(2, 2);
    a(0, 0) = Complex(Real(0), Real(1));
    a(0, 1) = Complex(2);
    a(1, 0) = Complex(3);
    a(1, 1) = Complex(Real(4), Real(-1));
    const std::vector<Complex> rhs{Complex(1), Complex(2)};
    const FullPivLu lu(a);
    const auto x = lu.solve(rhs);
    for (int i = 0; i < 2; ++i) {
      const Complex back = a(i, 0) * x[0] + a(i, 1) * x[1];
      CHECK(test::gap(back, rhs[static_cast<std::size_t>(i)]) < 1e-70);
    }
    ComplexMatrix s(2, 2);
    s(0, 0) = Complex(1);
    s(0, 1) = Complex(2);
    s(1, 0) = Complex(2);
    s(1, 1) = Complex(4);
    CHECK(FullPivLu(s).singular());
  }

  TEST_CASE("assignment finds the minimum-cost matching") {
    const std::vector<std::vector<double>> cost{{4, 1, 3}, {2, 0, 5}, {3, 2, 2}};
    const auto assignment = min_cost_assignment(cost);
    double total = 0;
    for (std::size_t i = 0; i < assignment.size(); ++i) total += cost[i][static_cast<std::size_t>(assignment[i])];
    CHECK(total == 5.0);
  }

  TEST_CASE("parallel_for visits each index once and propagates exceptions") {
    std::vector<int> hits(100, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 7) throw NumericalFailure("boom"); }),
                    NumericalFailure);
  }
}
