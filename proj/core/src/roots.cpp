#include "oscgauss/roots.hpp"

#include "oscgauss/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace oscgauss {
namespace {

constexpr long kRootGuardBits = 32;
constexpr int kMaxAberthIterations = 400;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<Complex> legendre_seeds(int n) {
  std::vector<Complex> seeds;
  seeds.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double x = -std::cos(std::numbers::pi * (k + 0.75) / (n + 0.5));
    // A small lift off the real axis; the roots sit in the upper half plane.
    seeds.emplace_back(Real(x), Real(0.01 + 1e-3 * k / n));
  }
  return seeds;
}

std::vector<Complex> circle_seeds(std::span<const Complex> full) {
  const int n = static_cast<int>(full.size()) - 1;
  double radius = 0.0;
  for (int k = 0; k < n; ++k) {
    const double a = abs_d(full[static_cast<std::size_t>(k)]);
    if (a > 0.0) radius = std::max(radius, std::pow(a, 1.0 / (n - k)));
  }
  radius = std::max(2.0 * radius, 1e-3);
  std::vector<Complex> seeds;
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * std::numbers::pi * k / n + 0.4;
    seeds.emplace_back(Real(radius * std::cos(t)), Real(radius * std::sin(t)));
  }
  return seeds;
}

// Aberth-Ehrlich with per-root freezing once |p(z)| is below its rounding
// error bound.
bool aberth(std::span<const Complex> full, std::vector<Complex>& z, int& iterations) {
  const int n = static_cast<int>(z.size());
  std::vector<Real> magnitude(full.size());
  for (std::size_t k = 0; k < full.size(); ++k) magnitude[k] = abs(full[k]);
  const Real eps = epsilon_for_bits(working_precision());
  std::vector<bool> done(static_cast<std::size_t>(n), false);

  for (iterations = 1; iterations <= kMaxAberthIterations; ++iterations) {
    bool all_done = true;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      if (done[static_cast<std::size_t>(k)]) continue;
      const auto [value, deriv] = poly_eval_with_derivative(full, zk);
      const Real az = abs(zk);
      Real bound = magnitude.back();
      for (std::size_t i = full.size() - 1; i-- > 0;) bound = bound * az + magnitude[i];
      if (abs(value) <= Real(8 * (n + 1)) * eps * bound) {
        done[static_cast<std::size_t>(k)] = true;
        continue;
      }
      all_done = false;
      Complex repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        const Complex d = zk - z[static_cast<std::size_t>(j)];
        if (!d.is_zero()) repulsion += Complex(1) / d;
      }
      Complex step;
      if (deriv.is_zero()) {
        step = Complex(Real(1e-3), Real(1e-3)) * (Real(1) + az);
      } else {
        const Complex ratio = value / deriv;
        const Complex denom = Complex(1) - ratio * repulsion;
        step = denom.is_zero() ? ratio : ratio / denom;
      }
      zk -= step;
    }
    if (all_done) return true;
  }
  return false;
}

RootSet finish(std::span<const Complex> full, std::vector<Complex> z, int iterations, long bits) {
  RootSet out;
  out.iterations = iterations;
  for (auto& root : z) {
    const auto [value, deriv] = poly_eval_with_derivative(full, root);
    out.residuals.push_back((abs(value) / max(Real(1), abs(deriv))).to_double());
    out.roots.push_back(root.rounded(bits));
  }
  return out;
}

double distance(const Complex& a, const Complex& b) { return abs_d(a - b); }

std::vector<Complex> roots_at(int n, const Real& omega, long bits, const ExistenceOptions& opts,
                              std::span<const Complex> seeds) {
  const MonicPolynomial p = orthogonal_polynomial(n, omega, bits, opts);
  return polynomial_roots(p, seeds).roots;
}

struct Matcher {
  int n;
  long bits;
  const ContinuationOptions& options;
  bool ambiguous_left = false;

  // Reorders `next` (roots at omega_b) to follow `prev` (roots at omega_a).
  std::vector<Complex> match(const std::vector<Complex>& prev, std::vector<Complex> next, const Real& omega_a,
                             const Real& omega_b, int depth) {
    std::vector<std::vector<double>> cost(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        cost[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] =
            distance(prev[static_cast<std::size_t>(j)], next[static_cast<std::size_t>(k)]);
      }
    }
    const std::vector<int> assignment = min_cost_assignment(cost);
    bool ambiguous = false;
    for (int j = 0; j < n && !ambiguous; ++j) {
      const auto& row = cost[static_cast<std::size_t>(j)];
      const double chosen = row[static_cast<std::size_t>(assignment[static_cast<std::size_t>(j)])];
      if (chosen <= 1e-30) continue;
      for (int k = 0; k < n; ++k) {
        if (k != assignment[static_cast<std::size_t>(j)] && row[static_cast<std::size_t>(k)] < 1.1 * chosen) {
          ambiguous = true;
          break;
        }
      }
    }
    if (ambiguous && depth < options.max_refine_depth) {
      PrecisionScope scope(bits);
      const Real omega_mid = (omega_a + omega_b) / 2;
      try {
        std::vector<Complex> mid = roots_at(n, omega_mid, bits, options.existence, prev);
        mid = match(prev, std::move(mid), omega_a, omega_mid, depth + 1);
        return match(mid, std::move(next), omega_mid, omega_b, depth + 1);
      } catch (const Error&) {
        // fall through: keep the unrefined assignment and flag it
      }
    }
    if (ambiguous) ambiguous_left = true;
    std::vector<Complex> ordered(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      ordered[static_cast<std::size_t>(j)] = std::move(next[static_cast<std::size_t>(assignment[static_cast<std::size_t>(j)])]);
    }
    return ordered;
  }
};

}  // namespace

RootSet polynomial_roots(std::span<const Complex> full, long precision_bits, std::span<const Complex> seeds) {
  if (full.size() < 2) throw InvalidArgument("polynomial_roots requires degree >= 1");
  const int n = static_cast<int>(full.size()) - 1;
  if (!seeds.empty() && static_cast<int>(seeds.size()) != n) {
    throw InvalidArgument("polynomial_roots: expected " + std::to_string(n) + " seeds");
  }
  PrecisionScope scope(precision_bits + kRootGuardBits);
  std::vector<Complex> coeffs(full.begin(), full.end());

  std::vector<std::vector<Complex>> starts;
  if (!seeds.empty()) starts.emplace_back(seeds.begin(), seeds.end());
  starts.push_back(legendre_seeds(n));
  starts.push_back(circle_seeds(coeffs));

  RootSet best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (auto& start : starts) {
    std::vector<Complex> z;
    for (const auto& s : start) z.push_back(s.rounded(precision_bits + kRootGuardBits));
    int iterations = 0;
    const bool converged = aberth(coeffs, z, iterations);
    RootSet candidate = finish(coeffs, std::move(z), iterations, precision_bits);
    if (converged) return candidate;
    const double worst = *std::max_element(candidate.residuals.begin(), candidate.residuals.end());
    if (!(worst >= best_residual)) {
      best_residual = worst;
      best = std::move(candidate);
    }
  }
  throw RootFindingError("Aberth-Ehrlich iteration did not converge for degree " + std::to_string(n), std::move(best));
}

RootSet polynomial_roots(const MonicPolynomial& p, std::span<const Complex> seeds) {
  const auto full = p.full_coefficients();
  return polynomial_roots(full, p.precision_bits, seeds);
}

std::vector<Real> linear_grid(const Real& lo, const Real& hi, int count) {
  if (count < 1) throw InvalidArgument("grid needs at least one point");
  if (hi < lo) throw InvalidArgument("grid bounds must be ascending");
  std::vector<Real> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid.push_back(count == 1 ? lo : lo + (hi - lo) * Real(i) / Real(count - 1));
  }
  return grid;
}

Trajectory continue_roots(int n, std::span<const Real> omega_grid, long precision_bits,
                          const ContinuationOptions& options) {
  if (n < 1) throw InvalidArgument("continue_roots requires n >= 1");
  if (omega_grid.empty()) throw InvalidArgument("continue_roots requires a nonempty grid");
  for (std::size_t i = 1; i < omega_grid.size(); ++i) {
    if (!(omega_grid[i - 1] < omega_grid[i])) throw InvalidArgument("omega grid must be strictly ascending");
  }

  const std::size_t count = omega_grid.size();
  Trajectory t;
  t.n = n;
  t.omegas.assign(omega_grid.begin(), omega_grid.end());
  t.exists.assign(count, false);
  t.paths.assign(static_cast<std::size_t>(n), std::vector<Complex>(count));
  t.speeds.assign(static_cast<std::size_t>(n), std::vector<double>(count, kNaN));

  Matcher matcher{n, precision_bits, options};
  std::vector<Complex> prev;
  int prev_index = -1;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> roots;
    try {
      roots = roots_at(n, omega_grid[i], precision_bits, options.existence, prev);
    } catch (const NonExistent&) {
      continue;
    }
    if (!prev.empty()) {
      matcher.ambiguous_left = false;
      roots = matcher.match(prev, std::move(roots), omega_grid[static_cast<std::size_t>(prev_index)], omega_grid[i], 0);
      if (matcher.ambiguous_left) t.ambiguous_steps.push_back(static_cast<int>(i));
    }
    t.exists[i] = true;
    for (int j = 0; j < n; ++j) t.paths[static_cast<std::size_t>(j)][i] = roots[static_cast<std::size_t>(j)];
    prev = std::move(roots);
    prev_index = static_cast<int>(i);
  }

  // Central differences where both neighbours exist, one-sided at the ends
  // of each existing run.
  std::vector<double> w(count);
  for (std::size_t i = 0; i < count; ++i) w[i] = omega_grid[i].to_double();
  std::vector<double> peak(count, kNaN);
  for (std::size_t i = 0; i < count; ++i) {
    if (!t.exists[i]) continue;
    const bool left = i > 0 && t.exists[i - 1];
    const bool right = i + 1 < count && t.exists[i + 1];
    if (!left && !right) continue;
    const std::size_t a = left ? i - 1 : i;
    const std::size_t b = right ? i + 1 : i;
    double fastest = 0.0;
    for (int j = 0; j < n; ++j) {
      const auto& path = t.paths[static_cast<std::size_t>(j)];
      const double s = distance(path[b], path[a]) / (w[b] - w[a]);
      t.speeds[static_cast<std::size_t>(j)][i] = s;
      fastest = std::max(fastest, s);
    }
    peak[i] = fastest;
  }

  std::vector<double> finite;
  for (double s : peak) {
    if (std::isfinite(s)) finite.push_back(s);
  }
  if (finite.size() >= 3) {
    std::nth_element(finite.begin(), finite.begin() + static_cast<long>(finite.size() / 2), finite.end());
    const double median = finite[finite.size() / 2];
    for (std::size_t i = 1; i + 1 < count; ++i) {
      if (!std::isfinite(peak[i]) || !std::isfinite(peak[i - 1]) || !std::isfinite(peak[i + 1])) continue;
      if (peak[i] <= peak[i - 1] && peak[i] <= peak[i + 1] && peak[i] < options.speed_threshold * median) {
        t.cusp_candidates.push_back(static_cast<int>(i));
      }
    }
  }
  return t;
}

}  // namespace oscgauss
