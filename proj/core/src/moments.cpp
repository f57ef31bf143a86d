#include "oscgauss/moments.hpp"

#include "oscgauss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace oscgauss {
namespace {

constexpr long kGuardBits = 32;

void check_precision(long bits) {
  if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw InvalidArgument("precision_bits must lie in [64, 65536], got " + std::to_string(bits));
  }
}

// i^m * x for real x.
Complex times_i_power(int m, Real x) {
  switch (m % 4) {
    case 0: return {std::move(x), Real(0)};
    case 1: return {Real(0), std::move(x)};
    case 2: return {-x, Real(0)};
    default: return {Real(0), -x};
  }
}

// log2 of sum_{k=0}^{m} m!/k! w^{k-m-1}, the magnitude of the two cancelling
// incomplete-Gamma terms relative to w^0.
double cancellation_log2(int m, double w) {
  const double lw = std::log(w);
  const double lm = std::lgamma(m + 1.0);
  double peak = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= m; ++k) {
    peak = std::max(peak, lm - std::lgamma(k + 1.0) + (k - m - 1) * lw);
  }
  return (peak + std::log(m + 1.0)) / std::log(2.0);
}

double relative_gap(const Complex& a, const Complex& b) {
  const Real scale = max(abs(a), abs(b));
  if (scale.is_zero()) return 0.0;
  return (abs(a - b) / scale).to_double();
}

}  // namespace

Complex moment_closed_form(int m, const Real& omega, long precision_bits) {
  check_precision(precision_bits);
  if (m < 0) throw InvalidArgument("moment index must be nonnegative");
  if (omega.sign() <= 0) throw InvalidArgument("moment_closed_form requires omega > 0");

  const double w = omega.to_double();
  const double loss = std::max(0.0, cancellation_log2(m, w) + std::log2(std::max(w, m + 1.0)));
  const long work = precision_bits + kGuardBits + static_cast<long>(std::ceil(loss));

  Complex result;
  {
    PrecisionScope scope(work);
    const Real wv = omega;
    // S = sum_k (i w)^k / k!; the difference of the two Gamma terms is
    // m! (X - conj X) with X = e^{i w} conj(S), and the prefactor collapses to
    // mu_m = i^m 2 m! Im(X) / w^{m+1}.
    Complex s(0);
    Complex term(1);
    for (int k = 0; k <= m; ++k) {
      if (k > 0) term = mul_i(term) * wv / Real(k);
      s += term;
    }
    const Complex x = expi(wv) * conj(s);
    const Real magnitude = 2 * factorial(static_cast<unsigned long>(m)) * x.imag() / pow(wv, m + 1);
    result = times_i_power(m, magnitude);
  }
  return result.rounded(precision_bits);
}

Complex moment_series(int m, const Real& omega, long precision_bits) {
  check_precision(precision_bits);
  if (m < 0) throw InvalidArgument("moment index must be nonnegative");
  if (omega.sign() < 0) throw InvalidArgument("omega must be nonnegative");

  Complex result;
  {
    PrecisionScope scope(precision_bits + kGuardBits);
    const Real tol = epsilon_for_bits(precision_bits + kGuardBits);
    const Real w = omega;
    // Terms with k = m (mod 2); i^k = i^{m mod 2} (-1)^{floor(k/2)}.
    Real sum(0);
    Real power = (m % 2 == 0) ? Real(1) : w;  // w^k / k!
    for (int k = m % 2;; k += 2) {
      if (k > m % 2) power = power * w * w / Real((k - 1) * k);
      Real term = 2 * power / Real(m + k + 1);
      if ((k / 2) % 2 == 1) term = -term;
      sum += term;
      if (power.is_zero() || abs(term) <= tol * abs(sum)) break;
    }
    result = (m % 2 == 0) ? Complex(sum, Real(0)) : Complex(Real(0), sum);
  }
  return result.rounded(precision_bits);
}

MomentTable moment_table(const Real& omega, int m_max, long precision_bits) {
  check_precision(precision_bits);
  if (m_max < 0) throw InvalidArgument("m_max must be nonnegative");
  if (omega.sign() < 0) throw InvalidArgument("omega must be nonnegative");

  MomentTable table;
  table.m_max = m_max;
  table.precision_bits = precision_bits;
  table.values.resize(static_cast<std::size_t>(m_max) + 1);
  const int full_digits = digits10_for_bits(precision_bits);

  {
    PrecisionScope scope(precision_bits);
    table.omega = omega;
  }

  if (omega.is_zero()) {
    PrecisionScope scope(precision_bits);
    for (int m = 0; m <= m_max; ++m) {
      table.values[static_cast<std::size_t>(m)] = (m % 2 == 0) ? Complex(Real(2) / Real(m + 1)) : Complex(0);
    }
    table.certified_digits = full_digits;
    return table;
  }

  if (omega < Real(kSmallOmegaThreshold)) {
    for (int m = 0; m <= m_max; ++m) table.values[static_cast<std::size_t>(m)] = moment_series(m, omega, precision_bits);
    table.certified_digits = full_digits;
    return table;
  }

  const long work = precision_bits + kGuardBits;
  double gap = 0.0;
  {
    PrecisionScope scope(work);
    const Real w = omega;
    const Complex a_even(Real(0), 2 * sin(w));  // e^{iw} - e^{-iw}
    const Complex a_odd(2 * cos(w), Real(0));   // e^{iw} + e^{-iw}
    auto boundary = [&](int m) -> const Complex& { return (m % 2 == 0) ? a_even : a_odd; };
    const Complex iw(Real(0), w);

    const double wd = w.to_double();
    const long crossover = static_cast<long>(std::ceil(wd));  // forward for m < crossover

    std::vector<Complex> mu(static_cast<std::size_t>(m_max) + 1);
    mu[0] = Complex(2 * sin(w) / w);
    const int forward_end = static_cast<int>(std::min<long>(m_max, crossover - 1));
    for (int m = 1; m <= forward_end; ++m) {
      // mu_m = (A_m - m mu_{m-1}) / (i w)
      mu[static_cast<std::size_t>(m)] = -mul_i(boundary(m) - mu[static_cast<std::size_t>(m - 1)] * Real(m)) / w;
    }

    if (m_max >= crossover) {
      const int c = static_cast<int>(crossover);
      const int seed_index = m_max + kBackwardGuard;
      Complex current = moment_closed_form(seed_index, omega, work);
      for (int m = seed_index; m > c; --m) {
        // mu_{m-1} = (A_m - i w mu_m) / m
        current = (boundary(m) - iw * current) / Real(m);
        if (m - 1 <= m_max) mu[static_cast<std::size_t>(m - 1)] = current;
      }
      // Crossover band: run each direction one step into the other's range.
      const Complex backward_prev = (boundary(c) - iw * mu[static_cast<std::size_t>(c)]) / Real(c);
      const Complex forward_next = -mul_i(boundary(c) - mu[static_cast<std::size_t>(c - 1)] * Real(c)) / w;
      gap = std::max(relative_gap(backward_prev, mu[static_cast<std::size_t>(c - 1)]),
                     relative_gap(forward_next, mu[static_cast<std::size_t>(c)]));
    } else {
      gap = relative_gap(mu[static_cast<std::size_t>(m_max)], moment_closed_form(m_max, omega, work));
    }

    for (int m = 0; m <= m_max; ++m) {
      table.values[static_cast<std::size_t>(m)] = mu[static_cast<std::size_t>(m)].rounded(precision_bits);
    }
  }

  const double digits = gap > 0.0 ? -std::log10(gap) : static_cast<double>(full_digits);
  table.certified_digits = std::clamp(digits, 0.0, static_cast<double>(full_digits));
  return table;
}

}  // namespace oscgauss
