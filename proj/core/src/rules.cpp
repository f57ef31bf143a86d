#include "oscgauss/rules.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/linalg.hpp"
#include "oscgauss/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace oscgauss {
namespace {

constexpr long kRuleGuardBits = 64;
constexpr int kMaxNewtonIterations = 100;

void check_points(int n) {
  if (n < 1) throw InvalidArgument("a rule needs at least one point");
}

void check_precision(long bits) {
  if (bits < kMinPrecisionBits || bits > kMaxPrecisionBits) {
    throw InvalidArgument("precision_bits must lie in [64, 65536], got " + std::to_string(bits));
  }
}

// P_n(x) and P_n'(x) by the three-term recurrence.
std::pair<Real, Real> legendre_with_derivative(int n, const Real& x) {
  Real p0(1);
  Real p1 = x;
  for (int k = 2; k <= n; ++k) {
    Real p2 = (Real(2 * k - 1) * x * p1 - Real(k - 1) * p0) / Real(k);
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  if (n == 0) return {Real(1), Real(0)};
  const Real deriv = Real(n) * (x * p1 - p0) / (x * x - Real(1));
  return {p1, deriv};
}

// L_n(x) and L_{n-1}(x).
std::pair<Real, Real> laguerre_pair(int n, const Real& x) {
  Real prev(0);
  Real cur(1);
  for (int k = 1; k <= n; ++k) {
    Real next = ((Real(2 * k - 1) - x) * cur - Real(k - 1) * prev) / Real(k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {cur, prev};
}

template <class Step>
Real newton(Real x, long bits, Step step) {
  const Real tol = epsilon_for_bits(bits - 8);
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const Real dx = step(x);
    x -= dx;
    if (abs(dx) <= tol * max(Real(1), abs(x))) {
      x -= step(x);
      return x;
    }
  }
  throw NumericalFailure("Newton iteration for a classical Gauss node did not converge");
}

void sort_by_node(std::vector<Complex>& nodes, std::vector<Complex>& weights) {
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].real() != nodes[b].real()) return nodes[a].real() < nodes[b].real();
    return nodes[a].imag() < nodes[b].imag();
  });
  std::vector<Complex> n2, w2;
  for (std::size_t i : order) {
    n2.push_back(std::move(nodes[i]));
    w2.push_back(std::move(weights[i]));
  }
  nodes = std::move(n2);
  weights = std::move(w2);
}

}  // namespace

std::string_view rule_kind_name(RuleKind kind) {
  switch (kind) {
    case RuleKind::GaussOscillatory: return "gauss-osc";
    case RuleKind::GaussLegendre: return "gauss-legendre";
    case RuleKind::GaussLaguerre: return "gauss-laguerre";
    case RuleKind::Superinterpolation: return "superinterp";
  }
  return "?";
}

QuadratureRule gauss_legendre(int n_points, long precision_bits) {
  check_points(n_points);
  check_precision(precision_bits);
  QuadratureRule rule;
  rule.kind = RuleKind::GaussLegendre;
  rule.n_points = n_points;
  rule.precision_bits = precision_bits;
  const long work = precision_bits + 32;
  PrecisionScope scope(work);
  const int half = (n_points + 1) / 2;
  std::vector<Complex> nodes(static_cast<std::size_t>(n_points)), weights(static_cast<std::size_t>(n_points));
  for (int i = 0; i < half; ++i) {
    const double guess = std::cos(std::numbers::pi * (i + 0.75) / (n_points + 0.5));
    Real x = newton(Real(guess), work, [&](const Real& t) {
      const auto [p, dp] = legendre_with_derivative(n_points, t);
      return p / dp;
    });
    if (2 * i + 1 == n_points) x = Real(0);
    const auto [p, dp] = legendre_with_derivative(n_points, x);
    const Real w = Real(2) / ((Real(1) - x * x) * dp * dp);
    // Ascending: the i-th largest node and its mirror.
    nodes[static_cast<std::size_t>(n_points - 1 - i)] = Complex(x).rounded(precision_bits);
    weights[static_cast<std::size_t>(n_points - 1 - i)] = Complex(w).rounded(precision_bits);
    nodes[static_cast<std::size_t>(i)] = Complex(-x).rounded(precision_bits);
    weights[static_cast<std::size_t>(i)] = Complex(w).rounded(precision_bits);
  }
  rule.nodes = std::move(nodes);
  rule.weights = std::move(weights);
  return rule;
}

QuadratureRule gauss_laguerre(int n_points, long precision_bits) {
  check_points(n_points);
  check_precision(precision_bits);
  QuadratureRule rule;
  rule.kind = RuleKind::GaussLaguerre;
  rule.n_points = n_points;
  rule.precision_bits = precision_bits;
  const long work = precision_bits + 32;
  PrecisionScope scope(work);
  const int n = n_points;

  auto step = [&](const Real& x) {
    const auto [ln, lm] = laguerre_pair(n, x);
    const Real dl = Real(n) * (ln - lm) / x;
    return ln / dl;
  };
  auto step_d = [&](double x) {
    double prev = 0.0, cur = 1.0;
    for (int k = 1; k <= n; ++k) {
      const double next = ((2.0 * k - 1.0 - x) * cur - (k - 1.0) * prev) / k;
      prev = cur;
      cur = next;
    }
    return cur / (n * (cur - prev) / x);
  };

  std::vector<double> guesses;
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += ((1.0 + 2.55 * ai) / (1.9 * ai)) * (z - guesses[static_cast<std::size_t>(i - 2)]);
    }
    for (int it = 0; it < 50; ++it) {
      const double dz = step_d(z);
      z -= dz;
      if (std::fabs(dz) <= 1e-14 * std::max(1.0, z)) break;
    }
    guesses.push_back(z);
  }

  for (int i = 0; i < n; ++i) {
    const Real x = newton(Real(guesses[static_cast<std::size_t>(i)]), work, step);
    const Real l_next = laguerre_pair(n + 1, x).first;
    const Real w = x / (Real((n + 1) * (n + 1)) * l_next * l_next);
    rule.nodes.push_back(Complex(x).rounded(precision_bits));
    rule.weights.push_back(Complex(w).rounded(precision_bits));
  }
  sort_by_node(rule.nodes, rule.weights);
  for (std::size_t i = 1; i < rule.nodes.size(); ++i) {
    if (!(rule.nodes[i - 1].real() < rule.nodes[i].real())) {
      throw NumericalFailure("Gauss-Laguerre nodes did not separate");
    }
  }
  return rule;
}

InterpolatoryWeights interpolatory_weights(std::span<const Complex> nodes, const MomentTable& table) {
  const int n = static_cast<int>(nodes.size());
  if (n < 1) throw InvalidArgument("interpolatory_weights requires at least one node");
  if (static_cast<int>(table.size()) < n) throw InvalidArgument("moment table too short for the node count");
  const long work = table.precision_bits + kRuleGuardBits;
  PrecisionScope scope(work);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      if ((nodes[static_cast<std::size_t>(j)] - nodes[static_cast<std::size_t>(k)]).is_zero()) {
        throw InvalidArgument("interpolatory_weights: coincident nodes");
      }
    }
  }
  ComplexMatrix v(n, n);
  for (int j = 0; j < n; ++j) {
    Complex power(1);
    for (int k = 0; k < n; ++k) {
      v(k, j) = power;
      power *= nodes[static_cast<std::size_t>(j)];
    }
  }
  std::vector<Complex> rhs(table.values.begin(), table.values.begin() + n);
  const FullPivLu lu(v);
  const double log10_cond = lu.log10_condition();
  if (lu.singular() || log10_cond >= digits10_for_bits(work) - 4) {
    throw NumericalFailure("interpolatory_weights: Vandermonde system is numerically singular");
  }
  InterpolatoryWeights out;
  out.weights = lu.solve(rhs);
  out.condition_estimate = std::pow(10.0, log10_cond);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    Complex s(0);
    for (int j = 0; j < n; ++j) s += v(k, j) * out.weights[static_cast<std::size_t>(j)];
    const Real err = abs(s - rhs[static_cast<std::size_t>(k)]) / max(Real(1), abs(rhs[static_cast<std::size_t>(k)]));
    worst = std::max(worst, err.to_double());
  }
  out.residual = worst;
  for (auto& w : out.weights) w = w.rounded(table.precision_bits);
  return out;
}

QuadratureRule gauss_oscillatory(int n_points, const Real& omega, long precision_bits,
                                 const ExistenceOptions& options) {
  check_points(n_points);
  check_precision(precision_bits);
  if (omega.sign() < 0) throw InvalidArgument("omega must be nonnegative");
  const long work = precision_bits + kRuleGuardBits;
  ExistenceOptions opts = options;
  if (opts.omega_resolution <= 0.0) {
    // Judge existence at the requested precision, not the internal one.
    opts.omega_resolution = 4.0 * std::max(std::fabs(omega.to_double()), 1.0) * std::ldexp(1.0, -static_cast<int>(precision_bits));
  }

  QuadratureRule rule;
  rule.kind = RuleKind::GaussOscillatory;
  rule.n_points = n_points;
  rule.precision_bits = precision_bits;

  PrecisionScope scope(work);
  const MonicPolynomial p = orthogonal_polynomial(n_points, omega, work, opts);
  RootSet roots = polynomial_roots(p);
  std::vector<Complex> nodes = std::move(roots.roots);
  const MomentTable table = moment_table(omega, 2 * n_points, work);
  InterpolatoryWeights iw = interpolatory_weights(nodes, table);

  // Gaussian exactness up to degree 2n - 1.
  const Real tol = Real(10) * pow(Real(10), -(digits10_for_bits(precision_bits) / 2));
  for (int k = 0; k < 2 * n_points; ++k) {
    Complex s(0);
    for (int j = 0; j < n_points; ++j) s += iw.weights[static_cast<std::size_t>(j)] * pow(nodes[static_cast<std::size_t>(j)], k);
    const Complex& mu = table[static_cast<std::size_t>(k)];
    if (abs(s - mu) > tol * max(Real(1), abs(mu))) {
      throw NumericalFailure("gauss_oscillatory: exactness check failed at degree " + std::to_string(k));
    }
  }
  sort_by_node(nodes, iw.weights);
  {
    PrecisionScope out(precision_bits);
    rule.omega = omega.rounded(std::max(precision_bits, omega.precision()));
  }
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    rule.nodes.push_back(nodes[j].rounded(precision_bits));
    rule.weights.push_back(iw.weights[j].rounded(precision_bits));
  }
  return rule;
}

QuadratureRule superinterpolation_rule(int n_half, const Real& omega, long precision_bits,
                                       SuperinterpolationWeights weights) {
  check_points(n_half);
  check_precision(precision_bits);
  if (omega.sign() <= 0) throw InvalidArgument("superinterpolation requires omega > 0");
  const long work = precision_bits + kRuleGuardBits;
  const QuadratureRule lag = gauss_laguerre(n_half, work);

  QuadratureRule rule;
  rule.kind = RuleKind::Superinterpolation;
  rule.n_points = 2 * n_half;
  rule.precision_bits = precision_bits;

  PrecisionScope scope(work);
  const Real w = omega;
  std::vector<Complex> nodes;
  for (int side = -1; side <= 1; side += 2) {
    for (const auto& xi : lag.nodes) nodes.emplace_back(Real(side), xi.real() / w);
  }
  std::vector<Complex> wts;
  if (weights == SuperinterpolationWeights::SteepestDescent) {
    const Complex left = mul_i(expi(-w)) / w;
    const Complex right = -mul_i(expi(w)) / w;
    for (const auto& eta : lag.weights) wts.push_back(left * eta);
    for (const auto& eta : lag.weights) wts.push_back(right * eta);
  } else {
    const MomentTable table = moment_table(omega, 2 * n_half - 1, work);
    wts = interpolatory_weights(nodes, table).weights;
  }
  {
    PrecisionScope out(precision_bits);
    rule.omega = omega.rounded(std::max(precision_bits, omega.precision()));
  }
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    rule.nodes.push_back(nodes[j].rounded(precision_bits));
    rule.weights.push_back(wts[j].rounded(precision_bits));
  }
  return rule;
}

Complex apply_rule(const QuadratureRule& rule, const Integrand& f) {
  PrecisionScope scope(rule.precision_bits);
  Complex sum(0);
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) sum += rule.weights[j] * f(rule.nodes[j]);
  return sum;
}

Complex steepest_descent_eval(const Integrand& f, const Real& omega, int n_half, long precision_bits) {
  check_points(n_half);
  check_precision(precision_bits);
  if (omega.sign() <= 0) throw InvalidArgument("steepest descent requires omega > 0");
  const long work = precision_bits + 32;
  const QuadratureRule lag = gauss_laguerre(n_half, work);
  Complex result;
  {
    PrecisionScope scope(work);
    const Real w = omega;
    Complex left(0), right(0);
    for (std::size_t j = 0; j < lag.nodes.size(); ++j) {
      const Real t = lag.nodes[j].real() / w;
      left += lag.weights[j] * f(Complex(Real(-1), t));
      right += lag.weights[j] * f(Complex(Real(1), t));
    }
    result = (mul_i(expi(-w)) * left - mul_i(expi(w)) * right) / w;
  }
  return result.rounded(precision_bits);
}

}  // namespace oscgauss
