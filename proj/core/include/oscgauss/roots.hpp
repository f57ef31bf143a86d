#pragma once

#include "oscgauss/complex.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/orthopoly.hpp"

#include <span>
#include <vector>

namespace oscgauss {

struct RootSet {
  std::vector<Complex> roots;
  /// |p(x_j)| / max(1, |p'(x_j)|) per root.
  std::vector<double> residuals;
  int iterations = 0;
};

/// Aberth-Ehrlich did not converge; carries the best iterates.
class RootFindingError : public NumericalFailure {
 public:
  RootFindingError(const std::string& what, RootSet best) : NumericalFailure(what), best_(std::move(best)) {}
  const RootSet& best() const noexcept { return best_; }

 private:
  RootSet best_;
};

/// All roots of a monic polynomial by Aberth-Ehrlich simultaneous iteration
/// at the polynomial's precision. Seeds initialize the iteration (for
/// continuation); without seeds the Gauss-Legendre nodes of matching degree
/// are used, with a circle start as fallback.
RootSet polynomial_roots(const MonicPolynomial& p, std::span<const Complex> seeds = {});
/// Same for a full monic coefficient list c_0..c_{n-1}, 1.
RootSet polynomial_roots(std::span<const Complex> full_coeffs, long precision_bits, std::span<const Complex> seeds = {});

/// Root paths x_j(omega) on a frequency grid.
struct Trajectory {
  int n = 0;
  std::vector<Real> omegas;
  /// paths[j][i] is root j at omegas[i]; entries at non-existent grid points
  /// repeat nothing and must be skipped using `exists`.
  std::vector<std::vector<Complex>> paths;
  std::vector<bool> exists;
  /// speeds[j][i] = |dx_j/domega| by central differences; NaN where undefined.
  std::vector<std::vector<double>> speeds;
  /// Grid indices where all roots nearly stop (cusp candidates).
  std::vector<int> cusp_candidates;
  /// Grid steps (index of the later point) whose matching stayed ambiguous
  /// after local refinement.
  std::vector<int> ambiguous_steps;
};

struct ContinuationOptions {
  /// Cusp candidates: local minima of max_j |x_j'| below this fraction of
  /// the median of that quantity over the trajectory.
  double speed_threshold = 1e-2;
  /// Bisection depth for resolving matching ambiguities.
  int max_refine_depth = 4;
  /// Passed to the Hankel solves.
  ExistenceOptions existence = {};
};

/// Traces the roots of p_n^omega along an ascending grid. Each step is seeded
/// with the previous roots and matched by minimum-cost bipartite assignment.
Trajectory continue_roots(int n, std::span<const Real> omega_grid, long precision_bits = kDefaultPrecisionBits,
                          const ContinuationOptions& options = {});

/// Ascending grid of `count` evenly spaced points on [lo, hi].
std::vector<Real> linear_grid(const Real& lo, const Real& hi, int count);

}  // namespace oscgauss
