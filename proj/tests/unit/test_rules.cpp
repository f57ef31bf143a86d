#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/integrand.hpp"
#include "oscgauss/rules.hpp"

#include <doctest.h>

using namespace oscgauss;

TEST_SUITE("rules") {
  TEST_CASE("2-point rule at omega = 3 matches frozen roots") {
    const QuadratureRule r = gauss_oscillatory(2, Real(3));
    PrecisionScope scope(256);
    CHECK(r.kind == RuleKind::GaussOscillatory);
    CHECK(test::gap(r.nodes[0], test::lit("-0.81238656668646229353185414727090861", "0.31703660203045554655730226348581053")) < 1e-33);
    CHECK(test::gap(r.nodes[1], test::lit("0.81238656668646229353185414727090861", "0.31703660203045554655730226348581053")) < 1e-33);
  }

  TEST_CASE("Gauss rules integrate oscillatory cubics exactly") {
    const Real w(7);
    const QuadratureRule r = gauss_oscillatory(2, w);
    const MomentTable t = moment_table(w, 3);
    PrecisionScope scope(256);
    for (int k = 0; k < 4; ++k) CHECK(test::gap(apply_rule(r, Integrand::monomial(k)), t[static_cast<std::size_t>(k)]) < 1e-70);
  }

  TEST_CASE("classical rules") {
    PrecisionScope scope(256);
    const QuadratureRule gl = gauss_legendre(3, 256);
    CHECK(test::gap(gl.nodes[2], Complex(sqrt(Real(3) / Real(5)))) < 1e-75);
    CHECK(test::gap(gl.weights[1], Complex(Real(8) / Real(9))) < 1e-75);
    const QuadratureRule lag = gauss_laguerre(4, 256);
    Complex moment(0);
    for (std::size_t j = 0; j < 4; ++j) moment += lag.weights[j] * pow(lag.nodes[j], 7);
    CHECK(test::gap(moment, Complex(factorial(7))) < 1e-70);
  }

  TEST_CASE("superinterpolation rules") {
    const QuadratureRule sd = superinterpolation_rule(3, Real(40));
    const QuadratureRule filon = superinterpolation_rule(3, Real(40), 256, SuperinterpolationWeights::Filon);
    PrecisionScope scope(256);
    CHECK(sd.n_points == 6);
    for (std::size_t j = 0; j < 6; ++j) CHECK(test::gap(sd.weights[j], filon.weights[j]) < 1e-60);
    const Complex v = apply_rule(sd, Integrand::exp());
    CHECK(test::gap(v, steepest_descent_eval(Integrand::exp(), Real(40), 3, 256)) < 1e-70);
  }

  TEST_CASE("interpolatory weights reject coincident nodes") {
    PrecisionScope scope(256);
    const std::vector<Complex> nodes{Complex(Real("0.5")), Complex(Real("0.5"))};
    CHECK_THROWS_AS(interpolatory_weights(nodes, moment_table(Real(1), 1)), InvalidArgument);
  }

  TEST_CASE("gauss_oscillatory reports non-existence") {
    PrecisionScope scope(256);
    CHECK_THROWS_AS(gauss_oscillatory(1, pi()), NonExistent);
    CHECK_THROWS_AS(gauss_oscillatory(0, Real(1)), InvalidArgument);
  }

  TEST_CASE("integrand registry") {
    CHECK(Integrand::parse("sin").kind() == Integrand::Kind::Sin);
    CHECK(Integrand::parse("x^3").power() == 3);
    CHECK(Integrand::parse("monomial:4").power() == 4);
    CHECK(Integrand::parse("runge:2").parameter() == 2.0);
    CHECK_FALSE(Integrand::parse("runge:2").entire());
    CHECK(Integrand::parse("one").kind() == Integrand::Kind::One);
    CHECK_THROWS_AS(Integrand::parse("tan"), InvalidArgument);
    PrecisionScope scope(256);
    CHECK_THROWS_AS(Integrand::runge(1.0)(Complex(Real(0), Real(1))), InvalidArgument);
    CHECK(abs_d(Integrand::runge(1.0)(Complex(Real(1))) - Complex(Real("0.5"))) < 1e-75);
  }
}
