#pragma once

#include "oscgauss/complex.hpp"

#include <vector>

namespace oscgauss {

/// Complex moments mu_m = \int_{-1}^{1} x^m e^{i omega x} dx, m = 0..m_max.
struct MomentTable {
  Real omega;
  int m_max = 0;
  std::vector<Complex> values;
  long precision_bits = kDefaultPrecisionBits;
  /// Estimated correct decimal digits, from the disagreement of two
  /// independent evaluation routes.
  double certified_digits = 0.0;

  const Complex& operator[](std::size_t m) const { return values[m]; }
  std::size_t size() const noexcept { return values.size(); }
};

/// Below this frequency moments are summed from their Taylor series in omega.
inline constexpr double kSmallOmegaThreshold = 0.25;
/// Extra indices past m_max at which the backward recurrence is seeded.
inline constexpr int kBackwardGuard = 10;

/// mu_m from the incomplete-Gamma closed form
///   mu_m = (-1)^m (i w)^{-1-m} (Gamma(1+m,-i w) - Gamma(1+m,i w)),
/// with Gamma(1+m,z) = m! e^{-z} sum_{k<=m} z^k/k!. The sum cancels heavily
/// when m >> omega, so it is evaluated with enough guard bits to keep the
/// result accurate at `precision_bits`. Requires omega > 0.
Complex moment_closed_form(int m, const Real& omega, long precision_bits);

/// mu_m from the Taylor series in omega: sum over k with m+k even of
/// 2 (i w)^k / (k! (m+k+1)). Used for small omega.
Complex moment_series(int m, const Real& omega, long precision_bits);

/// Moments 0..m_max. Forward recurrence below ceil(omega), backward
/// recurrence (seeded by the closed form at m_max + kBackwardGuard) from
/// there on; Taylor series when omega < kSmallOmegaThreshold; exact Legendre
/// moments at omega = 0.
MomentTable moment_table(const Real& omega, int m_max, long precision_bits = kDefaultPrecisionBits);

}  // namespace oscgauss
