#include "support.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/roots.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace oscgauss;

namespace {

// Sorted by (re, im).
std::vector<Complex> sorted_roots(const RootSet& rs) {
  std::vector<Complex> r = rs.roots;
  std::sort(r.begin(), r.end(), [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return r;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("frozen roots of p_3 at omega = 10") {
    const RootSet rs = polynomial_roots(orthogonal_polynomial(3, Real(10)));
    const auto r = sorted_roots(rs);
    PrecisionScope scope(256);
    CHECK(test::gap(r[0], test::lit("-0.97770831461111875379596477865221411", "0.10076777668852962914595843635337003")) < 1e-33);
    CHECK(test::gap(r[1], test::lit("0", "-0.69594993778085587567270492260317376")) < 1e-33);
    CHECK(test::gap(r[2], test::lit("0.97770831461111875379596477865221411", "0.10076777668852962914595843635337003")) < 1e-33);
  }

  TEST_CASE("frozen roots of p_4 at omega = 7") {
    const auto r = sorted_roots(polynomial_roots(orthogonal_polynomial(4, Real(7))));
    PrecisionScope scope(256);
    CHECK(test::gap(r[0], test::lit("-0.97983095494223285102890312669316889", "0.082493241174997151982690625145456304")) < 1e-33);
    CHECK(test::gap(r[1], test::lit("-0.88487076636945512734852920352652744", "0.49193789848415267607012676318888333")) < 1e-33);
  }

  TEST_CASE("roots of an explicit polynomial") {
    PrecisionScope scope(256);
    // (x - 1)(x - 2)(x + i) = x^3 + (i - 3) x^2 + (2 - 3i) x + 2i
    const std::vector<Complex> c{Complex(Real(0), Real(2)), Complex(Real(2), Real(-3)), Complex(Real(-3), Real(1)),
                                 Complex(1)};
    const auto r = sorted_roots(polynomial_roots(c, 256));
    CHECK(test::gap(r[0], Complex(Real(0), Real(-1))) < 1e-70);
    CHECK(test::gap(r[1], Complex(1)) < 1e-70);
    CHECK(test::gap(r[2], Complex(2)) < 1e-70);
  }

  TEST_CASE("seeds are honoured") {
    const MonicPolynomial p = orthogonal_polynomial(2, Real(3));
    const RootSet cold = polynomial_roots(p);
    const RootSet warm = polynomial_roots(p, cold.roots);
    CHECK(warm.iterations <= cold.iterations);
    for (double r : warm.residuals) CHECK(r < 1e-70);
  }

  TEST_CASE("continuation on a short grid") {
    std::vector<Real> grid;
    {
      PrecisionScope scope(256);
      grid = linear_grid(Real("0.01"), Real(8), 400);
    }
    const Trajectory t = continue_roots(2, grid);
    CHECK(t.paths.size() == 2);
    CHECK(t.omegas.size() == 400);
    CHECK(std::all_of(t.exists.begin(), t.exists.end(), [](bool b) { return b; }));
    REQUIRE(t.cusp_candidates.size() == 1);
    CHECK(std::fabs(grid[static_cast<std::size_t>(t.cusp_candidates[0])].to_double() - 5.92996) < 0.03);
    CHECK(std::isnan(t.speeds[0].front()) == false);
    // Roots of p_2 are a mirror pair x, -conj(x) at every grid point.
    PrecisionScope scope(256);
    for (std::size_t i = 0; i < grid.size(); i += 37) CHECK(test::gap(t.paths[0][i], -conj(t.paths[1][i])) < 1e-60);
  }

  TEST_CASE("linear grid endpoints") {
    PrecisionScope scope(256);
    const auto g = linear_grid(Real(1), Real(2), 11);
    CHECK(g.front() == Real(1));
    CHECK(g.back() == Real(2));
    CHECK(abs(g[5] - Real("1.5")).to_double() < 1e-75);
    CHECK(linear_grid(Real(1), Real(2), 1).size() == 1);
    CHECK_THROWS_AS(linear_grid(Real(1), Real(2), 0), InvalidArgument);
    CHECK_THROWS_AS(linear_grid(Real(2), Real(1), 3), InvalidArgument);
  }
}
