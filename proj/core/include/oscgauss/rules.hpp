#pragma once

#include "oscgauss/complex.hpp"
#include "oscgauss/integrand.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/orthopoly.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace oscgauss {

enum class RuleKind { GaussOscillatory, GaussLegendre, GaussLaguerre, Superinterpolation };

std::string_view rule_kind_name(RuleKind kind);

/// Nodes and weights. For oscillatory rules the weight function
/// e^{i omega x} is absorbed into the weights:
///   \int_{-1}^{1} f(x) e^{i omega x} dx ~ sum_j w_j f(x_j).
/// Legendre rules integrate over [-1, 1] with weight 1, Laguerre rules over
/// [0, inf) with weight e^{-x}.
struct QuadratureRule {
  RuleKind kind = RuleKind::GaussOscillatory;
  int n_points = 0;
  std::optional<Real> omega;
  std::vector<Complex> nodes;
  std::vector<Complex> weights;
  long precision_bits = kDefaultPrecisionBits;
};

/// n-point complex Gaussian rule for e^{i omega x}: nodes are the roots of
/// p_n^omega, weights solve the moment equations. Exact for polynomials of
/// degree <= 2n - 1. Throws NonExistent when p_n^omega does not exist and
/// NumericalFailure when root finding or the exactness check fails.
QuadratureRule gauss_oscillatory(int n_points, const Real& omega, long precision_bits = kDefaultPrecisionBits,
                                 const ExistenceOptions& options = {});

/// Classical Gauss-Legendre rule, nodes ascending.
QuadratureRule gauss_legendre(int n_points, long precision_bits = kDefaultPrecisionBits);
/// Classical Gauss-Laguerre rule, nodes ascending.
QuadratureRule gauss_laguerre(int n_points, long precision_bits = kDefaultPrecisionBits);

enum class SuperinterpolationWeights {
  /// i e^{-i omega} eta_j / omega at -1 + i xi_j / omega and
  /// -i e^{i omega} eta_j / omega at 1 + i xi_j / omega.
  SteepestDescent,
  /// Interpolatory weights from the moments (Filon type).
  Filon,
};

/// 2 n_half nodes, n_half near each endpoint: the left group
/// -1 + i xi_j / omega first, then the right group 1 + i xi_j / omega, with
/// xi_j, eta_j the Gauss-Laguerre nodes and weights. Requires omega > 0.
QuadratureRule superinterpolation_rule(int n_half, const Real& omega, long precision_bits = kDefaultPrecisionBits,
                                       SuperinterpolationWeights weights = SuperinterpolationWeights::SteepestDescent);

struct InterpolatoryWeights {
  std::vector<Complex> weights;
  /// max_k |sum_j w_j x_j^k - mu_k| / max(1, |mu_k|).
  double residual = 0.0;
  /// Infinity-norm condition estimate of the transposed Vandermonde system.
  double condition_estimate = 1.0;
};

/// Weights making sum_j w_j x_j^k = mu_k for k < nodes.size(). Throws
/// InvalidArgument on coincident nodes and NumericalFailure when the
/// Vandermonde system is singular at the table precision.
InterpolatoryWeights interpolatory_weights(std::span<const Complex> nodes, const MomentTable& table);

/// sum_j w_j f(x_j) at the rule's precision.
Complex apply_rule(const QuadratureRule& rule, const Integrand& f);

/// The endpoint-contribution formula evaluated directly with an n_half-point
/// Gauss-Laguerre rule along each steepest-descent path:
///   (i e^{-i omega}/omega) sum eta_j f(-1 + i xi_j/omega)
/// - (i e^{ i omega}/omega) sum eta_j f( 1 + i xi_j/omega).
/// Exact in the limit only for entire f.
Complex steepest_descent_eval(const Integrand& f, const Real& omega, int n_half,
                              long precision_bits = kDefaultPrecisionBits);

}  // namespace oscgauss
