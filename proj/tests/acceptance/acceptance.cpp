// Acceptance criteria for oscgauss. Prints one PASS/FAIL line per criterion.
//
//   acceptance [criterion ...]     (default: all)
//
// Exit status is 0 iff every selected criterion passes.

#include "oscgauss/analysis.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/roots.hpp"
#include "oscgauss/rules.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <string>
#include <vector>

using namespace oscgauss;

namespace {

constexpr long kBits = 256;

struct Verdict {
  bool passed = false;
  std::string detail;
};

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", x);
  return buffer;
}

std::string fixed(double x, int digits) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, x);
  return buffer;
}

// Smallest total distance between two node sets under a greedy nearest match.
double set_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  std::vector<bool> taken(b.size(), false);
  for (const auto& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (taken[j]) continue;
      const double d = abs_d(x - b[j]);
      if (d < best) {
        best = d;
        at = j;
      }
    }
    taken[at] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

double reflection_defect(const std::vector<Complex>& nodes) {
  std::vector<Complex> mirrored;
  for (const auto& x : nodes) mirrored.push_back(-conj(x));
  return set_distance(nodes, mirrored);
}

Verdict legendre_limit() {
  double worst = 0.0;
  for (int n : {2, 4, 8, 16}) {
    const QuadratureRule osc = gauss_oscillatory(n, Real(1e-6), kBits);
    const QuadratureRule gl = gauss_legendre(n, kBits);
    PrecisionScope scope(kBits);
    worst = std::max(worst, set_distance(osc.nodes, gl.nodes));
  }
  return {worst <= 1e-4, "max node distance " + sci(worst) + " (tol 1e-4)"};
}

Verdict n1_closed_form() {
  double worst = 0.0;
  for (double w : {0.5, 1.0, 2.0, 3.0}) {
    const MonicPolynomial p = orthogonal_polynomial(1, Real(w), kBits);
    PrecisionScope scope(kBits);
    const Real x(w);
    const Complex a0(Real(0), Real(1) / tan(x) - Real(1) / x);
    worst = std::max(worst, abs_d(p.coeffs[0] - a0));
  }
  int missing = 0;
  for (int k : {1, 2}) {
    PrecisionScope scope(kBits);
    try {
      orthogonal_polynomial(1, pi() * Real(k), kBits);
    } catch (const NonExistent&) {
      ++missing;
    }
  }
  return {worst <= 1e-20 && missing == 2,
          "max |a_0 - (i/tan w - i/w)| " + sci(worst) + " (tol 1e-20); NonExistent at pi, 2 pi: " +
              std::to_string(missing) + "/2"};
}

Verdict n2_closed_form() {
  double coeff = 0.0, roots = 0.0;
  for (double w : {0.5, 3.0, 10.0}) {
    const MonicPolynomial p = orthogonal_polynomial(2, Real(w), kBits);
    const RootSet rs = polynomial_roots(p);
    PrecisionScope scope(kBits);
    const Real x(w);
    const Real c2 = cos(2 * x), s2 = sin(2 * x);
    const Real w2 = x * x, w4 = w2 * w2;
    const Real den = Real(-1) + 2 * w2 + c2;
    const Complex a0((Real(2) + 3 * w2 - 2 * w4 + (Real(-2) + w2) * c2 - 4 * x * s2) / (w2 * den));
    const Complex a1(Real(0), -2 * (Real(-2) + 2 * w2 + 2 * c2 + x * s2) / (x * den));
    coeff = std::max({coeff, abs_d(p.coeffs[0] - a0), abs_d(p.coeffs[1] - a1)});

    const Complex lead(Real(0), Real(-2) + 2 * w2 + 2 * c2 + x * s2);
    const Real disc = Real(-3) + 6 * w2 - 12 * w4 + 4 * w4 * w2 + (Real(4) - 6 * w2) * c2 - cos(4 * x) + 4 * w2 * x * s2;
    const Complex root = sqrt(Complex(disc));
    const Real scale = x * den;
    const std::vector<Complex> explicit_roots{(lead + root) / scale, (lead - root) / scale};
    roots = std::max(roots, set_distance(rs.roots, explicit_roots));
  }
  return {coeff <= 1e-20 && roots <= 1e-20,
          "max coefficient deviation " + sci(coeff) + ", max root deviation " + sci(roots) + " (tol 1e-20)"};
}

Verdict breakdown_value() {
  BreakdownOptions bo;
  bo.precision_bits = kBits;
  bo.refine_tol = 1e-12;
  const BreakdownScan first = breakdown_scan(2, 0.1, 7.0, 0.01, bo);
  const double stated = 5.92966;
  bool first_ok = false;
  std::string detail;
  if (first.records.size() == 1) {
    const double found = first.records[0].omega_star.to_double();
    first_ok = std::fabs(found - stated) <= 1e-4;
    detail = "first zero " + fixed(found, 10) + " vs 5.92966 +- 1e-4 (off by " + sci(std::fabs(found - stated)) + ")";
  } else {
    detail = std::to_string(first.records.size()) + " zeros on [0.1, 7], expected 1";
  }

  const BreakdownScan tail = breakdown_scan(2, 25.0, 45.0, 0.01, bo);
  std::vector<double> ks, ds;
  for (const auto& r : tail.records) {
    const double wk = r.omega_star.to_double();
    const double k = std::round(wk / std::numbers::pi);
    ks.push_back(k);
    ds.push_back(wk - (k * std::numbers::pi - 2.0 / (k * std::numbers::pi)));
  }
  bool tail_ok = ks.size() == 7 && ks.front() == 8 && ks.back() == 14;
  double c = 0.0, worst = 0.0;
  if (tail_ok) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      num += ds[i] * std::pow(ks[i], -3);
      den += std::pow(ks[i], -6);
    }
    c = num / den;
    // |d_k| <= |C| k^-3 with a single C, up to higher-order terms.
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double model = c * std::pow(ks[i], -3);
      worst = std::max(worst, std::fabs(ds[i] - model) / std::fabs(model));
    }
    tail_ok = worst <= 0.1;
  }
  detail += "; k = 8..14: " + std::to_string(ks.size()) + " zeros, C = " + fixed(c, 6) +
            ", max relative deviation from C k^-3 " + sci(worst);
  return {first_ok && tail_ok, detail};
}

struct SinSweep {
  std::vector<double> grid = log_grid(10.0, 1e4, 20);
  std::vector<ReferenceValue> refs;
};

SinSweep& sin_sweep() {
  static SinSweep sweep = [] {
    SinSweep s;
    s.refs = reference_values(Integrand::sin(), s.grid, 1e-30, kBits, 1);
    return s;
  }();
  return sweep;
}

Verdict sweep_slope(int points, double lo, double hi) {
  SinSweep& s = sin_sweep();
  OrderOptions oo;
  oo.precision_bits = kBits;
  oo.references = &s.refs;
  const OrderFit fit = asymptotic_order(RuleFamily::GaussOscillatory, points, Integrand::sin(), s.grid, oo);
  const int used = static_cast<int>(std::count(fit.used.begin(), fit.used.end(), true));
  return {fit.fittable && fit.slope >= lo && fit.slope <= hi,
          "slope " + fixed(fit.slope, 4) + " +- " + fixed(fit.slope_ci, 4) + " from " + std::to_string(used) +
              " points, band [" + fixed(lo, 1) + ", " + fixed(hi, 1) + "]"};
}

Verdict superinterp_scaling() {
  const auto d100 = superinterp_distance(16, Real(100), kBits);
  const auto d200 = superinterp_distance(16, Real(200), kBits);
  double worst = 1.0;
  for (std::size_t l = 0; l < d100.size(); ++l) {
    const double a = d100[l] * 1e4, b = d200[l] * 4e4;
    worst = std::max(worst, std::max(a, b) / std::min(a, b));
  }
  return {d100.size() == 16 && worst < 2.0, "max per-node ratio of distance x omega^2 " + fixed(worst, 4) + " (< 2)"};
}

Verdict identities() {
  int checked = 0, failed = 0, flagged = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  auto record = [&](double ratio) {
    ++checked;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (ratio < 3.5 || ratio > 4.5) ++failed;
  };
  for (double w : {2.0, 7.0, 15.0}) {
    for (int n = 1; n <= 6; ++n) record(check_derivative_identity(n, Real(w), 1e-4, kBits).ratio);
    for (int k = 0; k < 6; ++k) {
      const CoeffRecurrenceCheck c = check_coeff_recurrences(k, Real(w), 1e-4, kBits);
      record(c.first.ratio);
      if (c.near_breakdown) {
        ++flagged;
      } else {
        record(c.second.ratio);
      }
    }
  }
  return {failed == 0, std::to_string(checked) + " Richardson ratios in [" + fixed(lo, 3) + ", " + fixed(hi, 3) +
                           "], " + std::to_string(failed) + " outside [3.5, 4.5], " + std::to_string(flagged) +
                           " near-breakdown cases skipped"};
}

Verdict exactness() {
  double worst = 0.0;
  for (int n : {2, 4, 6, 8}) {
    for (double w : {0.5, 3.0, 10.0, 50.0}) {
      const QuadratureRule rule = gauss_oscillatory(n, Real(w), kBits);
      const MomentTable t = moment_table(Real(w), 2 * n - 1, kBits);
      PrecisionScope scope(kBits);
      for (int k = 0; k < 2 * n; ++k) {
        worst = std::max(worst, abs_d(apply_rule(rule, Integrand::monomial(k)) - t[static_cast<std::size_t>(k)]));
      }
    }
  }
  return {worst <= 1e-20, "max |Q[x^k] - mu_k| " + sci(worst) + " (tol 1e-20)"};
}

Verdict nonexistence_bracket() {
  BreakdownOptions bo;
  bo.precision_bits = kBits;
  const BreakdownScan scan = breakdown_scan(2, 0.1, 20.0, 0.01, bo);
  int nonexistent = 0;
  double residual = 0.0;
  for (const auto& r : scan.records) {
    ExistenceOptions eo;
    eo.omega_resolution = std::max((r.refined_hi - r.refined_lo).to_double(), bo.refine_tol);
    try {
      orthogonal_polynomial(3, r.omega_star, kBits, eo);
    } catch (const NonExistent&) {
      ++nonexistent;
    }
    const MonicPolynomial p = orthogonal_polynomial(2, r.omega_star, kBits);
    const MomentTable t = moment_table(r.omega_star, 4, kBits);
    PrecisionScope scope(kBits);
    residual = std::max(residual, orthogonality_residual(p.full_coefficients(), t, 3));
  }
  const int total = static_cast<int>(scan.records.size());
  return {total > 0 && nonexistent == total && residual <= 1e-10,
          std::to_string(nonexistent) + "/" + std::to_string(total) + " brackets report NonExistent for degree 3; "
              "max |(p_2, x^j)|, j < 3: " + sci(residual) + " (tol 1e-10)"};
}

Verdict symmetry() {
  double coeffs = 0.0, nodes = 0.0;
  int built = 0;
  for (double w : {0.5, 3.0, 10.0, 40.0, 100.0, 200.0}) {
    for (int n = 1; n <= 16; ++n) {
      coeffs = std::max(coeffs, symmetry_defect(orthogonal_polynomial(n, Real(w), kBits)));
      const QuadratureRule rule = gauss_oscillatory(n, Real(w), kBits);
      PrecisionScope scope(kBits);
      nodes = std::max(nodes, reflection_defect(rule.nodes));
      ++built;
    }
  }
  return {coeffs <= 1e-20 && nodes <= 1e-20, std::to_string(built) + " polynomials: max symmetry defect " + sci(coeffs) +
                                                 ", max node reflection defect " + sci(nodes) + " (tol 1e-20)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"legendre_limit", legendre_limit},
      {"n1_closed_form", n1_closed_form},
      {"n2_closed_form", n2_closed_form},
      {"breakdown_value", breakdown_value},
      {"sin_sweep_2pt", [] { return sweep_slope(2, -3.2, -2.8); }},
      {"sin_sweep_4pt", [] { return sweep_slope(4, -5.3, -4.7); }},
      {"superinterp_scaling", superinterp_scaling},
      {"identities", identities},
      {"exactness", exactness},
      {"nonexistence_bracket", nonexistence_bracket},
      {"symmetry", symmetry},
  };

  std::vector<std::string> selected(argv + 1, argv + argc);
  if (selected.empty()) selected.push_back("all");
  for (const auto& name : selected) {
    if (name == "all") continue;
    if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == name; })) {
      std::fprintf(stderr, "unknown criterion '%s'\n", name.c_str());
      return 2;
    }
  }

  bool all_passed = true;
  for (const auto& [name, run] : criteria) {
    if (std::find(selected.begin(), selected.end(), "all") == selected.end() &&
        std::find(selected.begin(), selected.end(), name) == selected.end()) {
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1fs]\n", v.passed ? "PASS" : "FAIL", name.c_str(), v.detail.c_str(), seconds);
    std::fflush(stdout);
    all_passed = all_passed && v.passed;
  }
  return all_passed ? 0 : 1;
}
