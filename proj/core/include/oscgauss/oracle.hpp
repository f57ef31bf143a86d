#pragma once

#include "oscgauss/complex.hpp"
#include "oscgauss/integrand.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oscgauss {

struct ReferenceValue {
  Complex value;
  /// Estimated absolute error; never larger than the requested tolerance.
  double est_error = 0.0;
  /// Composite Gauss-Legendre value (always computed).
  Complex method_a;
  std::string method_a_name = "composite-gauss-legendre-30";
  /// Steepest-descent value, when that route applies and converged.
  std::optional<Complex> method_b;
  /// "steepest-descent" when method_b is set, else "none".
  std::string method_b_name = "none";
  /// |S_{2N} - S_N| for each panel doubling, in order.
  std::vector<double> refinement_history;
  /// Panels used by the composite rule.
  long panels = 0;
  /// Laguerre points per endpoint used by the steepest-descent route.
  int laguerre_points = 0;
};

/// \int_{-1}^{1} f(x) e^{i omega x} dx to absolute tolerance `tol`.
/// Method A: composite 30-point Gauss-Legendre on panels no wider than
/// min(2, pi/omega), doubled until successive sums agree to tol/2.
/// Method B (omega >= 5, entire f): steepest descent with 8..128 Laguerre
/// points per endpoint. When both are available they must agree to tol.
/// Throws NumericalFailure when the tolerance is not reached.
ReferenceValue reference_integral(const Integrand& f, const Real& omega, double tol,
                                  long precision_bits = kDefaultPrecisionBits);

/// Laguerre polynomial L_n(z) by the three-term recurrence.
Complex laguerre_eval(int n, const Complex& z);

/// Frequency above which the steepest-descent route is attempted.
inline constexpr double kSteepestDescentMinOmega = 5.0;

}  // namespace oscgauss
