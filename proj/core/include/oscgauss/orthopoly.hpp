#pragma once

#include "oscgauss/complex.hpp"
#include "oscgauss/moments.hpp"

#include <optional>
#include <span>
#include <vector>

namespace oscgauss {

/// Monic polynomial p(x) = x^n + sum_{k<n} a_k x^k orthogonal with respect to
/// the weight e^{i omega x} on [-1, 1].
struct MonicPolynomial {
  int degree = 0;
  /// a_0 .. a_{n-1}; the leading coefficient 1 is implicit.
  std::vector<Complex> coeffs;
  Real omega;
  long precision_bits = kDefaultPrecisionBits;
  /// ||H||_inf ||H^{-1}||_inf of the Hankel moment matrix.
  double condition_estimate = 1.0;
  /// Precision (bits) at which the Hankel system was finally solved.
  long solve_bits = kDefaultPrecisionBits;
  /// Relative orthogonality residual max_j |(p, x^j)| / sum_k |a_k mu_{k+j}|.
  double orthogonality_residual = 0.0;

  /// Coefficients a_0 .. a_{n-1}, 1.
  std::vector<Complex> full_coefficients() const;
};

struct ExistenceOptions {
  /// Frequencies closer than this to a singular Hankel matrix are treated as
  /// breakdown points. Zero selects a few units in the last place of omega
  /// at the requested precision.
  double omega_resolution = 0.0;
  /// Number of precision doublings allowed before giving up.
  int max_escalations = 4;
};

/// Solves the n x n Hankel system sum_k mu_{j+k} a_k = -mu_{n+j}. The solve
/// starts 64 bits above the requested precision and escalates until the
/// coefficients are accurate at the requested precision. Throws NonExistent
/// when the Hankel matrix is singular within the frequency resolution, or
/// when escalation is exhausted.
MonicPolynomial orthogonal_polynomial(int n, const Real& omega, long precision_bits = kDefaultPrecisionBits,
                                      const ExistenceOptions& options = {});

/// (p, q) = sum_{j,k} p_j q_k mu_{j+k} for full coefficient lists.
Complex pairing(std::span<const Complex> p, std::span<const Complex> q, const MomentTable& table);
Complex pairing(const MonicPolynomial& p, const MonicPolynomial& q, const MomentTable& table);

/// (p_n, p_n). Not positive and may vanish.
Complex norm_sq(int n, const Real& omega, long precision_bits = kDefaultPrecisionBits);

/// Three-term recurrence coefficients of p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1}.
struct RecurrenceCoeffs {
  Real omega;
  /// alpha_0 .. alpha_{K}, with K = defined_up_to, or K - 1 when the norm of
  /// p_{defined_up_to} vanished.
  std::vector<Complex> alpha;
  /// beta_1 .. beta_{defined_up_to}; beta[k-1] holds beta_k.
  std::vector<Complex> beta;
  /// Largest index reached before a vanishing norm stopped the sequence.
  int defined_up_to = 0;
  /// True when (p_{defined_up_to}, p_{defined_up_to}) vanished.
  bool norm_vanished = false;
};

/// alpha_k = (x p_k, p_k)/(p_k, p_k), beta_k = (p_k, p_k)/(p_{k-1}, p_{k-1}),
/// for k = 0..k_max, with each p_k built from its own Hankel solve.
RecurrenceCoeffs recurrence_coeffs(int k_max, const Real& omega, long precision_bits = kDefaultPrecisionBits);

/// Horner evaluation.
Complex poly_eval(const MonicPolynomial& p, const Complex& z);
Complex poly_eval(std::span<const Complex> full_coeffs, const Complex& z);
/// Value and derivative by Horner.
std::pair<Complex, Complex> poly_eval_with_derivative(std::span<const Complex> full_coeffs, const Complex& z);

/// Largest violation of the reflection symmetry p(z) = (-1)^n conj(p(-conj z)):
/// max over k of |Im a_k| for n+k even and |Re a_k| for n+k odd.
double symmetry_defect(const MonicPolynomial& p);

/// Max over j < count of |(p, x^j)| using the given moment table.
double orthogonality_residual(std::span<const Complex> full_coeffs, const MomentTable& table, int count);

}  // namespace oscgauss
