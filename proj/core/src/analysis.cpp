#include "oscgauss/analysis.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/matching.hpp"
#include "oscgauss/parallel.hpp"
#include "oscgauss/rules.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace oscgauss {
namespace {

constexpr int kMaxRefineIterations = 400;

Real real_norm(int n, const Real& omega, long bits) { return norm_sq(n, omega, bits).real(); }

BreakdownRecord refine(int n, double lo, double hi, const BreakdownOptions& options) {
  const long bits = options.precision_bits;
  PrecisionScope scope(bits);
  Real a(lo), b(hi);
  Real fa = real_norm(n, a, bits);
  Real fb = real_norm(n, b, bits);
  const Real tol(options.refine_tol);
  int retained = 0;  // -1: a kept twice in a row, +1: b kept twice
  for (int it = 0; it < kMaxRefineIterations && b - a > tol; ++it) {
    Real c = (a * fb - b * fa) / (fb - fa);
    if (!(a < c && c < b)) c = (a + b) / 2;
    const Real fc = real_norm(n, c, bits);
    if (fc.is_zero()) {
      a = c;
      b = c;
      fa = fc;
      fb = fc;
      break;
    }
    if (fc.sign() == fb.sign()) {
      b = c;
      fb = fc;
      if (retained == -1) fa = fa / 2;
      retained = -1;
    } else {
      a = c;
      fa = fc;
      if (retained == 1) fb = fb / 2;
      retained = 1;
    }
  }
  BreakdownRecord r;
  r.n = n;
  r.bracket_lo = lo;
  r.bracket_hi = hi;
  r.refined_lo = a;
  r.refined_hi = b;
  // The halved values of the Illinois step are not true function values.
  const Real ta = abs(real_norm(n, a, bits));
  const Real tb = abs(real_norm(n, b, bits));
  r.omega_star = ta <= tb ? a : b;
  r.residual = abs_d(norm_sq(n, r.omega_star, bits));
  return r;
}

double student_t_975(int dof) {
  boost::math::students_t dist(dof);
  return boost::math::quantile(boost::math::complement(dist, 0.025));
}

}  // namespace

BreakdownScan breakdown_scan(int n, double omega_lo, double omega_hi, double step, const BreakdownOptions& options) {
  if (n < 2 || n % 2 != 0) throw InvalidArgument("breakdown_scan requires an even degree n >= 2");
  if (!(step > 0.0) || step > 0.05) throw InvalidArgument("breakdown_scan requires 0 < step <= 0.05");
  if (!(omega_lo >= 0.0) || !(omega_lo < omega_hi)) throw InvalidArgument("breakdown_scan requires 0 <= lo < hi");
  if (!(options.refine_tol > 0.0)) throw InvalidArgument("refine_tol must be positive");

  const long count = static_cast<long>(std::ceil((omega_hi - omega_lo) / step - 1e-9)) + 1;
  BreakdownScan scan;
  scan.samples.resize(static_cast<std::size_t>(count));
  parallel_for(static_cast<std::size_t>(count), options.jobs, [&](std::size_t i) {
    PrecisionScope scope(options.precision_bits);
    NormSample& s = scan.samples[i];
    s.omega = std::min(omega_lo + static_cast<double>(i) * step, omega_hi);
    try {
      s.norm = norm_sq(n, Real(s.omega), options.precision_bits);
    } catch (const NonExistent&) {
      s.exists = false;
    }
  });

  for (const auto& s : scan.samples) {
    if (!s.exists) continue;
    const double mag = abs_d(s.norm);
    if (mag > 0.0) scan.max_relative_imag = std::max(scan.max_relative_imag, abs_d(Complex(s.norm.imag())) / mag);
  }

  std::vector<std::pair<double, double>> brackets;
  for (std::size_t i = 1; i < scan.samples.size(); ++i) {
    const auto& l = scan.samples[i - 1];
    const auto& r = scan.samples[i];
    if (!l.exists || !r.exists) continue;
    const int sl = l.norm.real().sign();
    const int sr = r.norm.real().sign();
    if (sl == 0 && i > 1) continue;  // counted with the previous cell
    if (sl * sr <= 0 && (sl != 0 || sr != 0)) brackets.emplace_back(l.omega, r.omega);
  }
  scan.records.resize(brackets.size());
  parallel_for(brackets.size(), options.jobs,
               [&](std::size_t i) { scan.records[i] = refine(n, brackets[i].first, brackets[i].second, options); });
  return scan;
}

std::string_view rule_family_name(RuleFamily family) {
  switch (family) {
    case RuleFamily::GaussOscillatory: return "gauss-osc";
    case RuleFamily::Superinterpolation: return "superinterp";
    case RuleFamily::SuperinterpolationFilon: return "superinterp-filon";
  }
  return "?";
}

RuleFamily parse_rule_family(std::string_view text) {
  if (text == "gauss-osc" || text == "gauss-oscillatory") return RuleFamily::GaussOscillatory;
  if (text == "superinterp" || text == "superinterpolation") return RuleFamily::Superinterpolation;
  if (text == "superinterp-filon" || text == "superinterpolation-filon") return RuleFamily::SuperinterpolationFilon;
  throw InvalidArgument("unknown rule family '" + std::string(text) + "'");
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(lo < hi)) throw InvalidArgument("log grid requires 0 < lo < hi");
  if (per_decade < 1) throw InvalidArgument("log grid requires at least one point per decade");
  const double decades = std::log10(hi / lo);
  const int steps = std::max(1, static_cast<int>(std::lround(decades * per_decade)));
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) {
    grid.push_back(i == steps ? hi : lo * std::pow(10.0, decades * i / steps));
  }
  return grid;
}

std::vector<ReferenceValue> reference_values(const Integrand& f, std::span<const double> omegas, double tol,
                                             long precision_bits, int jobs) {
  std::vector<ReferenceValue> out(omegas.size());
  parallel_for(omegas.size(), jobs, [&](std::size_t i) {
    PrecisionScope scope(precision_bits);
    out[i] = reference_integral(f, Real(omegas[i]), tol, precision_bits);
  });
  return out;
}

OrderFit asymptotic_order(RuleFamily family, int n_points, const Integrand& f, std::span<const double> omegas,
                          const OrderOptions& options) {
  if (omegas.size() < 3) throw InvalidArgument("asymptotic_order needs at least three frequencies");
  if (family != RuleFamily::GaussOscillatory && n_points % 2 != 0) {
    throw InvalidArgument("superinterpolation rules have an even number of points");
  }
  if (options.references && options.references->size() != omegas.size()) {
    throw InvalidArgument("reference values do not match the frequency grid");
  }
  std::vector<ReferenceValue> computed;
  if (!options.references) computed = reference_values(f, omegas, options.oracle_tol, options.precision_bits, options.jobs);
  const std::vector<ReferenceValue>& refs = options.references ? *options.references : computed;

  OrderFit fit;
  fit.method = std::string(rule_family_name(family));
  fit.integrand = f.name();
  fit.n_points = n_points;
  fit.omegas.assign(omegas.begin(), omegas.end());
  const std::size_t m = omegas.size();
  fit.approximations.resize(m);
  fit.errors.resize(m);
  parallel_for(m, options.jobs, [&](std::size_t i) {
    PrecisionScope scope(options.precision_bits);
    const Real w(omegas[i]);
    QuadratureRule rule;
    switch (family) {
      case RuleFamily::GaussOscillatory: rule = gauss_oscillatory(n_points, w, options.precision_bits); break;
      case RuleFamily::Superinterpolation: rule = superinterpolation_rule(n_points / 2, w, options.precision_bits); break;
      case RuleFamily::SuperinterpolationFilon:
        rule = superinterpolation_rule(n_points / 2, w, options.precision_bits, SuperinterpolationWeights::Filon);
        break;
    }
    fit.approximations[i] = apply_rule(rule, f);
    fit.errors[i] = abs_d(fit.approximations[i] - refs[i].value);
  });

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < m; ++i) {
    fit.references.push_back(refs[i].value);
    fit.reference_errors.push_back(refs[i].est_error);
    const bool use = fit.errors[i] > 0.0 && fit.errors[i] >= 10.0 * refs[i].est_error;
    fit.used.push_back(use);
    if (use) {
      xs.push_back(std::log10(omegas[i]));
      ys.push_back(std::log10(fit.errors[i]));
    }
  }
  if (xs.size() < 3) return fit;

  const double k = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
    ssr += r * r;
  }
  const int dof = static_cast<int>(xs.size()) - 2;
  fit.slope_ci = student_t_975(dof) * std::sqrt(ssr / dof / sxx);
  fit.fittable = true;
  return fit;
}

std::vector<double> superinterp_distance(int n_total, const Real& omega, long precision_bits) {
  if (n_total < 2 || n_total % 2 != 0) throw InvalidArgument("superinterp_distance requires an even total >= 2");
  if (omega.sign() <= 0) throw InvalidArgument("superinterp_distance requires omega > 0");
  const QuadratureRule gauss = gauss_oscillatory(n_total, omega, precision_bits);
  const QuadratureRule super = superinterpolation_rule(n_total / 2, omega, precision_bits);
  PrecisionScope scope(precision_bits);
  const auto n = static_cast<std::size_t>(n_total);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n));
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t j = 0; j < n; ++j) cost[l][j] = abs_d(super.nodes[l] - gauss.nodes[j]);
  }
  const std::vector<int> assignment = min_cost_assignment(cost);
  std::vector<double> out;
  for (std::size_t l = 0; l < n; ++l) out.push_back(cost[l][static_cast<std::size_t>(assignment[l])]);
  return out;
}

FiniteDifferenceCheck check_derivative_identity(int n, const Real& omega, double h, long precision_bits) {
  if (n < 1) throw InvalidArgument("check_derivative_identity requires n >= 1");
  if (!(h > 0.0)) throw InvalidArgument("step h must be positive");
  if (omega.to_double() - h < 0.0) throw InvalidArgument("omega - h must be nonnegative");
  PrecisionScope scope(precision_bits + 32);
  const Real w = omega;

  const Complex beta = norm_sq(n, w, precision_bits) / norm_sq(n - 1, w, precision_bits);
  const std::vector<Complex> lower =
      n == 1 ? std::vector<Complex>{Complex(1)} : orthogonal_polynomial(n - 1, w, precision_bits).full_coefficients();

  auto residual = [&](const Real& step) {
    const MonicPolynomial plus = orthogonal_polynomial(n, w + step, precision_bits);
    const MonicPolynomial minus = orthogonal_polynomial(n, w - step, precision_bits);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(k);
      const Complex derivative = (plus.coeffs[i] - minus.coeffs[i]) / (2 * step);
      const Complex rhs = -mul_i(beta * lower[i]);
      worst = std::max(worst, abs_d(derivative - rhs));
    }
    return worst;
  };
  FiniteDifferenceCheck c;
  c.residual_h = residual(Real(h));
  c.residual_h2 = residual(Real(h) / 2);
  c.ratio = c.residual_h2 > 0.0 ? c.residual_h / c.residual_h2 : std::numeric_limits<double>::infinity();
  return c;
}

CoeffRecurrenceCheck check_coeff_recurrences(int k, const Real& omega, double h, long precision_bits) {
  if (k < 0) throw InvalidArgument("check_coeff_recurrences requires k >= 0");
  if (!(h > 0.0)) throw InvalidArgument("step h must be positive");
  if (omega.to_double() - h < 0.0) throw InvalidArgument("omega - h must be nonnegative");
  PrecisionScope scope(precision_bits + 32);
  const Real w = omega;
  const auto ku = static_cast<std::size_t>(k);

  auto coefficients = [&](const Real& at, bool need_next_alpha) {
    RecurrenceCoeffs rc = recurrence_coeffs(k + 1, at, precision_bits);
    if (rc.beta.size() < ku + 1 || rc.alpha.size() < ku + (need_next_alpha ? 2 : 1)) {
      throw NonExistent("recurrence coefficients stop before index " + std::to_string(k + 1) + " at omega = " +
                            at.to_string(17),
                        k + 1, 0.0, 0.0);
    }
    return rc;
  };

  const RecurrenceCoeffs centre = coefficients(w, true);
  const Complex& beta_next = centre.beta[ku];
  const Complex beta_k = k == 0 ? Complex(0) : centre.beta[ku - 1];
  const Complex& alpha_k = centre.alpha[ku];
  const Complex& alpha_next = centre.alpha[ku + 1];

  Complex beta_slope;
  auto residuals = [&](const Real& step) -> std::pair<double, double> {
    const RecurrenceCoeffs plus = coefficients(w + step, false);
    const RecurrenceCoeffs minus = coefficients(w - step, false);
    const Complex d_alpha = (plus.alpha[ku] - minus.alpha[ku]) / (2 * step);
    const Complex d_beta = (plus.beta[ku] - minus.beta[ku]) / (2 * step);
    const double first = abs_d(beta_next - beta_k + mul_i(d_alpha));
    const double second = abs_d(alpha_next - alpha_k + mul_i(d_beta) / beta_next);
    beta_slope = d_beta;
    return {first, second};
  };
  auto ratio = [](double a, double b) { return b > 0.0 ? a / b : std::numeric_limits<double>::infinity(); };

  CoeffRecurrenceCheck c;
  const auto [f1, s1] = residuals(Real(h));
  const auto [f2, s2] = residuals(Real(h) / 2);
  c.first = {f1, f2, ratio(f1, f2)};
  c.second = {s1, s2, ratio(s1, s2)};
  c.beta_next = beta_next.rounded(precision_bits);
  const double slope = abs_d(beta_slope);
  c.breakdown_distance = slope > 0.0 ? abs_d(beta_next) / slope : std::numeric_limits<double>::infinity();
  c.near_breakdown = c.breakdown_distance < kNearBreakdownDistance;
  return c;
}

Complex laguerre_product(int n_half, const Real& omega, const Complex& x) {
  if (n_half < 1) throw InvalidArgument("laguerre_product requires n_half >= 1");
  const Complex scale = mul_i(Complex(Real(1))) / omega;  // i / omega
  const Complex minus_iw(Real(0), -omega);
  const Complex left = laguerre_eval(n_half, minus_iw * (x + Real(1)));
  const Complex right = laguerre_eval(n_half, minus_iw * (x - Real(1)));
  const Real f = factorial(static_cast<unsigned long>(n_half));
  return pow(scale, 2L * n_half) * left * right * (f * f);
}

double limit_defect(int n_total, const Real& omega, std::span<const Complex> samples, long precision_bits) {
  if (n_total < 2 || n_total % 2 != 0) throw InvalidArgument("limit_defect requires an even total >= 2");
  if (omega.sign() <= 0) throw InvalidArgument("limit_defect requires omega > 0");
  if (samples.empty()) throw InvalidArgument("limit_defect requires sample points");
  const MonicPolynomial p = orthogonal_polynomial(n_total, omega, precision_bits);
  PrecisionScope scope(precision_bits);
  const Real floor_value = pow(Real(1) / omega, n_total);
  double worst = 0.0;
  for (const auto& x : samples) {
    const Complex value = poly_eval(p, x);
    const Complex limit = laguerre_product(n_total / 2, omega, x);
    const Real denom = max(abs(value), floor_value);
    worst = std::max(worst, (abs(value - limit) / denom).to_double());
  }
  return worst;
}

}  // namespace oscgauss
