#include "oscgauss/orthopoly.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

namespace oscgauss {
namespace {

constexpr long kSolveGuardBits = 64;

void check_precision(long bits) {
  if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw InvalidArgument("precision_bits must lie in [64, 65536], got " + std::to_string(bits));
  }
}

double log10_row_sum_max(const ComplexMatrix& m) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < m.rows(); ++i) {
    Real row(0);
    for (int j = 0; j < m.cols(); ++j) row += abs(m(i, j));
    best = std::max(best, log10_abs(row));
  }
  return best;
}

std::string describe(int n, const Real& omega) {
  std::ostringstream os;
  os << "non-existent: monic orthogonal polynomial of degree " << n << " at omega = " << omega.to_string(17);
  return os.str();
}

}  // namespace

std::vector<Complex> MonicPolynomial::full_coefficients() const {
  std::vector<Complex> full = coeffs;
  PrecisionScope scope(precision_bits);
  full.emplace_back(1);
  return full;
}

MonicPolynomial orthogonal_polynomial(int n, const Real& omega, long precision_bits, const ExistenceOptions& options) {
  check_precision(precision_bits);
  if (n < 1) throw InvalidArgument("orthogonal_polynomial requires n >= 1");
  if (omega.sign() < 0) throw InvalidArgument("omega must be nonnegative");

  const int target_digits = digits10_for_bits(precision_bits);
  const double omega_d = std::fabs(omega.to_double());
  const double log10_resolution =
      options.omega_resolution > 0.0
          ? std::log10(options.omega_resolution)
          : std::log10(4.0 * std::max(omega_d, 1.0)) - static_cast<double>(precision_bits) * std::log10(2.0);

  long work = precision_bits + kSolveGuardBits;
  for (int attempt = 0;; ++attempt) {
    PrecisionScope scope(work);
    const MomentTable table = moment_table(omega, 2 * n, work);

    ComplexMatrix hankel(n, n);
    std::vector<Complex> rhs(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) hankel(j, k) = table[static_cast<std::size_t>(j + k)];
      rhs[static_cast<std::size_t>(j)] = -table[static_cast<std::size_t>(n + j)];
    }
    const double log10_norm = log10_row_sum_max(hankel);
    const FullPivLu lu(hankel);
    if (lu.singular()) throw NonExistent(describe(n, omega) + " (singular Hankel matrix)", n, 0.0, 0.0);

    const ComplexMatrix inv = lu.inverse();
    const double log10_inv_norm = log10_row_sum_max(inv);
    const double log10_cond = log10_norm + log10_inv_norm;
    const double singular_proxy = std::pow(10.0, -log10_inv_norm);

    // d/dw det H = det H * tr(H^{-1} H') with H'_{jk} = i mu_{j+k+1}; the
    // Newton step |det / det'| estimates the distance to a singular matrix.
    Complex trace(0);
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) trace += inv(j, k) * mul_i(table[static_cast<std::size_t>(j + k + 1)]);
    }
    const double log10_distance = -log10_abs(trace);
    if (log10_distance <= log10_resolution) {
      throw NonExistent(describe(n, omega) + " (frequency within resolution of a Hankel breakdown)", n,
                        singular_proxy, std::pow(10.0, log10_distance));
    }

    const double certified = std::min(table.certified_digits, static_cast<double>(digits10_for_bits(work))) - log10_cond;
    if (certified < target_digits + 2) {
      if (attempt >= options.max_escalations) {
        throw NonExistent(describe(n, omega) + " (Hankel matrix numerically singular after precision escalation)", n,
                          singular_proxy, std::pow(10.0, log10_distance));
      }
      const long needed = precision_bits + kSolveGuardBits + static_cast<long>(std::ceil(log10_cond * 3.33));
      work = std::min(std::max(2 * work, needed), kMaxPrecisionBits);
      continue;
    }

    const std::vector<Complex> coeffs = lu.solve(rhs);
    std::vector<Complex> full = coeffs;
    full.emplace_back(1);

    MonicPolynomial p;
    p.degree = n;
    p.precision_bits = precision_bits;
    p.condition_estimate = std::pow(10.0, log10_cond);
    p.solve_bits = work;
    {
      // Relative residual of the orthogonality conditions.
      double worst = 0.0;
      for (int j = 0; j < n; ++j) {
        Complex s(0);
        Real scale(0);
        for (int k = 0; k <= n; ++k) {
          const Complex t = full[static_cast<std::size_t>(k)] * table[static_cast<std::size_t>(j + k)];
          s += t;
          scale += abs(t);
        }
        if (!scale.is_zero()) worst = std::max(worst, (abs(s) / scale).to_double());
      }
      p.orthogonality_residual = worst;
    }
    PrecisionScope out(precision_bits);
    p.omega = omega.rounded(std::max(precision_bits, omega.precision()));
    p.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) p.coeffs.push_back(c.rounded(precision_bits));
    return p;
  }
}

Complex pairing(std::span<const Complex> p, std::span<const Complex> q, const MomentTable& table) {
  if (p.empty() || q.empty()) throw InvalidArgument("pairing: empty coefficient list");
  const std::size_t need = (p.size() - 1) + (q.size() - 1);
  if (table.values.size() <= need) {
    throw InvalidArgument("pairing: moment table too short (need m_max >= " + std::to_string(need) + ")");
  }
  Complex sum(0);
  for (std::size_t j = 0; j < p.size(); ++j) {
    Complex inner(0);
    for (std::size_t k = 0; k < q.size(); ++k) inner += q[k] * table[j + k];
    sum += p[j] * inner;
  }
  return sum;
}

Complex pairing(const MonicPolynomial& p, const MonicPolynomial& q, const MomentTable& table) {
  const auto pf = p.full_coefficients();
  const auto qf = q.full_coefficients();
  return pairing(pf, qf, table);
}

Complex norm_sq(int n, const Real& omega, long precision_bits) {
  check_precision(precision_bits);
  if (n < 0) throw InvalidArgument("norm_sq requires n >= 0");
  const long work = precision_bits + kSolveGuardBits;
  Complex value;
  {
    PrecisionScope scope(work);
    const MomentTable table = moment_table(omega, 2 * n, work);
    if (n == 0) {
      value = table[0];
    } else {
      const auto full = orthogonal_polynomial(n, omega, work).full_coefficients();
      value = pairing(full, full, table);
    }
  }
  return value.rounded(precision_bits);
}

RecurrenceCoeffs recurrence_coeffs(int k_max, const Real& omega, long precision_bits) {
  check_precision(precision_bits);
  if (k_max < 0) throw InvalidArgument("recurrence_coeffs requires k_max >= 0");

  RecurrenceCoeffs rc;
  const long work = precision_bits + kSolveGuardBits;
  const double log10_vanish = -0.5 * digits10_for_bits(precision_bits);

  PrecisionScope scope(work);
  rc.omega = omega;
  const MomentTable table = moment_table(omega, 2 * k_max + 1, work);

  Complex previous_norm;
  for (int k = 0; k <= k_max; ++k) {
    std::vector<Complex> full;
    if (k == 0) {
      full = {Complex(1)};
    } else {
      try {
        full = orthogonal_polynomial(k, omega, work).full_coefficients();
      } catch (const NonExistent&) {
        rc.defined_up_to = k - 1;
        break;
      }
    }
    const Complex nk = pairing(full, full, table);
    if (k > 0) {
      rc.beta.push_back((nk / previous_norm).rounded(precision_bits));
      const double scale = std::max(0.0, log10_abs(previous_norm));
      if (log10_abs(nk) < log10_vanish + scale) {
        rc.defined_up_to = k;
        rc.norm_vanished = true;
        return rc;
      }
    } else if (log10_abs(nk) < log10_vanish) {
      rc.defined_up_to = 0;
      rc.norm_vanished = true;
      return rc;
    }
    std::vector<Complex> shifted(full.size() + 1);
    shifted[0] = Complex(0);
    for (std::size_t i = 0; i < full.size(); ++i) shifted[i + 1] = full[i];
    rc.alpha.push_back((pairing(shifted, full, table) / nk).rounded(precision_bits));
    previous_norm = nk;
    rc.defined_up_to = k;
  }
  return rc;
}

Complex poly_eval(std::span<const Complex> full_coeffs, const Complex& z) {
  if (full_coeffs.empty()) return Complex(0);
  Complex acc = full_coeffs.back();
  for (std::size_t i = full_coeffs.size() - 1; i-- > 0;) acc = acc * z + full_coeffs[i];
  return acc;
}

Complex poly_eval(const MonicPolynomial& p, const Complex& z) {
  Complex acc(1);
  for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * z + p.coeffs[i];
  return acc;
}

std::pair<Complex, Complex> poly_eval_with_derivative(std::span<const Complex> full_coeffs, const Complex& z) {
  if (full_coeffs.empty()) return {Complex(0), Complex(0)};
  Complex value = full_coeffs.back();
  Complex deriv(0);
  for (std::size_t i = full_coeffs.size() - 1; i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + full_coeffs[i];
  }
  return {value, deriv};
}

double symmetry_defect(const MonicPolynomial& p) {
  double worst = 0.0;
  for (int k = 0; k < static_cast<int>(p.coeffs.size()); ++k) {
    const Complex& a = p.coeffs[static_cast<std::size_t>(k)];
    const Real& off = ((p.degree + k) % 2 == 0) ? a.imag() : a.real();
    worst = std::max(worst, abs(off).to_double());
  }
  return worst;
}

double orthogonality_residual(std::span<const Complex> full_coeffs, const MomentTable& table, int count) {
  double worst = 0.0;
  for (int j = 0; j < count; ++j) {
    Complex s(0);
    for (std::size_t k = 0; k < full_coeffs.size(); ++k) s += full_coeffs[k] * table[static_cast<std::size_t>(j) + k];
    worst = std::max(worst, abs(s).to_double());
  }
  return worst;
}

}  // namespace oscgauss
