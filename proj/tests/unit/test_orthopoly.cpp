#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/orthopoly.hpp"

#include <doctest.h>

#include <vector>

using namespace oscgauss;

namespace {

struct FrozenPoly {
  int n;
  int omega;
  std::vector<std::pair<const char*, const char*>> coeffs;
};

// mpmath Hankel solve at 60 digits.
const FrozenPoly kPolys[] = {
    {2, 3, {{"-0.76048414075963529711897184119056101", "0"}, {"0", "-0.63407320406091109311460452697162106"}}},
    {3, 10,
     {{"0", "-0.67233475102924180109206057979166887"},
      {"-0.8258090374450689955161398049052353", "0"},
      {"0", "0.4944143844037966173807880498964337"}}},
    {4, 7,
     {{"0.99104487764359601487133441905263781", "0"},
      {"0", "1.1203947724074573966551010772851691"},
      {"-2.1541992110539334223153168524459545", "0"},
      {"0", "-1.1488622793182996561056347766686793"}}},
};

}  // namespace

TEST_SUITE("orthopoly") {
  TEST_CASE("frozen coefficients") {
    for (const auto& f : kPolys) {
      const MonicPolynomial p = orthogonal_polynomial(f.n, Real(f.omega));
      PrecisionScope scope(256);
      for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        CAPTURE(f.n);
        CAPTURE(k);
        CHECK(test::gap(p.coeffs[k], test::lit(f.coeffs[k].first, f.coeffs[k].second)) < 1e-33);
      }
      CHECK(symmetry_defect(p) == 0.0);
    }
  }

  TEST_CASE("n = 1 at multiples of pi does not exist") {
    PrecisionScope scope(256);
    CHECK_THROWS_AS(orthogonal_polynomial(1, pi()), NonExistent);
    CHECK_THROWS_AS(orthogonal_polynomial(1, 3 * pi()), NonExistent);
    try {
      orthogonal_polynomial(1, 2 * pi());
    } catch (const NonExistent& e) {
      CHECK(e.degree() == 1);
      CHECK(e.breakdown_distance() < 1e-70);
    }
  }

  TEST_CASE("a coarser resolution widens the non-existence window") {
    PrecisionScope scope(256);
    const Real near = pi() + Real(1e-9);
    CHECK_NOTHROW(orthogonal_polynomial(1, near));
    ExistenceOptions eo;
    eo.omega_resolution = 1e-6;
    CHECK_THROWS_AS(orthogonal_polynomial(1, near, 256, eo), NonExistent);
  }

  TEST_CASE("pairing and norms") {
    const Real w(3);
    const MonicPolynomial p2 = orthogonal_polynomial(2, w);
    const MonicPolynomial p1 = orthogonal_polynomial(1, w);
    const MomentTable t = moment_table(w, 4);
    PrecisionScope scope(256);
    CHECK(abs_d(pairing(p1, p2, t)) < 1e-70);
    CHECK(test::gap(pairing(p2, p2, t), norm_sq(2, w)) < 1e-70);
    const auto full = p2.full_coefficients();
    CHECK(orthogonality_residual(full, t, 2) < 1e-70);
  }

  TEST_CASE("recurrence coefficients rebuild p_3 from p_2 and p_1") {
    const Real w(4);
    const RecurrenceCoeffs rc = recurrence_coeffs(3, w);
    REQUIRE(rc.defined_up_to == 3);
    const auto p1 = orthogonal_polynomial(1, w).full_coefficients();
    const auto p2 = orthogonal_polynomial(2, w).full_coefficients();
    const auto p3 = orthogonal_polynomial(3, w).full_coefficients();
    PrecisionScope scope(256);
    // p_3 = (x - alpha_2) p_2 - beta_2 p_1
    std::vector<Complex> rebuilt(4, Complex(0));
    for (std::size_t i = 0; i < 3; ++i) {
      rebuilt[i + 1] += p2[i];
      rebuilt[i] -= rc.alpha[2] * p2[i];
    }
    for (std::size_t i = 0; i < 2; ++i) rebuilt[i] -= rc.beta[1] * p1[i];
    for (std::size_t i = 0; i < 4; ++i) CHECK(test::gap(rebuilt[i], p3[i]) < 1e-65);
  }

  TEST_CASE("Horner evaluation with derivative") {
    PrecisionScope scope(256);
    const std::vector<Complex> c{Complex(1), Complex(0), Complex(1)};  // 1 + x^2
    const auto [v, d] = poly_eval_with_derivative(c, Complex(Real(0), Real(2)));
    CHECK(test::gap(v, Complex(-3)) == 0.0);
    CHECK(test::gap(d, Complex(Real(0), Real(4))) == 0.0);
  }

  TEST_CASE("argument validation") {
    CHECK_THROWS_AS(orthogonal_polynomial(0, Real(1)), InvalidArgument);
    CHECK_THROWS_AS(orthogonal_polynomial(2, Real(-1)), InvalidArgument);
    CHECK_THROWS_AS(norm_sq(-1, Real(1)), InvalidArgument);
  }
}
