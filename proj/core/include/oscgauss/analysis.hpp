#pragma once

#include "oscgauss/complex.hpp"
#include "oscgauss/integrand.hpp"
#include "oscgauss/oracle.hpp"
#include "oscgauss/orthopoly.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oscgauss {

// ---------------------------------------------------------------- breakdowns

struct BreakdownRecord {
  int n = 0;
  Real omega_star;
  /// |(p_n, p_n)| at omega_star.
  double residual = 0.0;
  /// Grid cell of the scan that contained the sign change.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  /// Bracket after refinement; its width is at most the refinement tolerance.
  Real refined_lo;
  Real refined_hi;
};

/// (p_n, p_n) sampled along a grid.
struct NormSample {
  double omega = 0.0;
  Complex norm;
  bool exists = true;
};

struct BreakdownScan {
  std::vector<BreakdownRecord> records;
  std::vector<NormSample> samples;
  /// max over samples of |Im (p_n,p_n)| / |(p_n,p_n)|.
  double max_relative_imag = 0.0;
};

struct BreakdownOptions {
  long precision_bits = kDefaultPrecisionBits;
  /// Refined bracket width.
  double refine_tol = 1e-10;
  int jobs = 1;
};

/// Zeros of Re (p_n, p_n)(omega) for even n on [lo, hi]: samples every
/// `step` (at most 0.05), brackets sign changes and refines each by the
/// Illinois variant of regula falsi.
BreakdownScan breakdown_scan(int n, double omega_lo, double omega_hi, double step, const BreakdownOptions& options = {});

// ---------------------------------------------------------- asymptotic order

enum class RuleFamily { GaussOscillatory, Superinterpolation, SuperinterpolationFilon };

std::string_view rule_family_name(RuleFamily family);
/// gauss-osc, superinterp, superinterp-filon (long forms accepted).
RuleFamily parse_rule_family(std::string_view text);

struct OrderFit {
  std::string method;
  std::string integrand;
  int n_points = 0;
  std::vector<double> omegas;
  std::vector<double> errors;
  std::vector<Complex> approximations;
  std::vector<Complex> references;
  /// Oracle error estimates.
  std::vector<double> reference_errors;
  /// Points entering the fit (error at least 10x the oracle error).
  std::vector<bool> used;
  bool fittable = false;
  double slope = 0.0;
  double intercept = 0.0;
  /// 95% confidence half-width of the slope (Student t).
  double slope_ci = 0.0;
};

struct OrderOptions {
  long precision_bits = kDefaultPrecisionBits;
  double oracle_tol = 1e-30;
  int jobs = 1;
  /// Reference values matching the grid; computed when absent.
  const std::vector<ReferenceValue>* references = nullptr;
};

/// n-per-decade log-spaced grid from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int per_decade);

/// Reference integrals on a grid, evaluated in parallel in grid order.
std::vector<ReferenceValue> reference_values(const Integrand& f, std::span<const double> omegas, double tol,
                                             long precision_bits = kDefaultPrecisionBits, int jobs = 1);

/// Errors of a rule family against the oracle along a log-spaced grid and the
/// least-squares slope of log|error| against log omega.
OrderFit asymptotic_order(RuleFamily family, int n_points, const Integrand& f, std::span<const double> omegas,
                          const OrderOptions& options = {});

// ---------------------------------------------------- superinterpolation gap

/// Distances |x_j - s_l| between Gaussian nodes and superinterpolation nodes
/// under the optimal one-to-one matching, in superinterpolation-node order.
std::vector<double> superinterp_distance(int n_total, const Real& omega, long precision_bits = kDefaultPrecisionBits);

// ----------------------------------------------------------- identity checks

/// Central differences at h and h/2 of an identity that should vanish.
struct FiniteDifferenceCheck {
  double residual_h = 0.0;
  double residual_h2 = 0.0;
  /// residual_h / residual_h2, about 4 for second-order convergence.
  double ratio = 0.0;
};

/// dp_n/domega = -i beta_n p_{n-1}: max coefficient deviation of the central
/// difference of p_n from the right-hand side.
FiniteDifferenceCheck check_derivative_identity(int n, const Real& omega, double h,
                                                long precision_bits = kDefaultPrecisionBits);

struct CoeffRecurrenceCheck {
  /// beta_{k+1} - beta_k + i alpha_k' (beta_0 = 0).
  FiniteDifferenceCheck first;
  /// alpha_{k+1} - alpha_k + i beta_{k+1}' / beta_{k+1}.
  FiniteDifferenceCheck second;
  Complex beta_next;
  /// Newton estimate |beta_{k+1} / beta_{k+1}'| of the distance to a zero of
  /// beta_{k+1}.
  double breakdown_distance = 0.0;
  /// The second identity divides by a near-zero beta_{k+1}.
  bool near_breakdown = false;
};

inline constexpr double kNearBreakdownDistance = 0.25;

CoeffRecurrenceCheck check_coeff_recurrences(int k, const Real& omega, double h,
                                             long precision_bits = kDefaultPrecisionBits);

// ------------------------------------------------------------- limit defect

/// Monic product (n!)^2 (i/omega)^{2n} L_n(-i omega (x+1)) L_n(-i omega (x-1)).
Complex laguerre_product(int n_half, const Real& omega, const Complex& x);

/// max over samples of |p_{2n}(x) - product(x)| / max(|p_{2n}(x)|, omega^{-2n}).
double limit_defect(int n_total, const Real& omega, std::span<const Complex> samples,
                    long precision_bits = kDefaultPrecisionBits);

}  // namespace oscgauss
