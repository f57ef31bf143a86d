#include "oscgauss/checks.hpp"

#include "oscgauss/analysis.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/oracle.hpp"
#include "oscgauss/roots.hpp"
#include "oscgauss/rules.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <utility>

namespace oscgauss {
namespace {

using Outcome = std::pair<bool, std::string>;

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3e", x);
  return buffer;
}

std::string num(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%g", x);
  return buffer;
}

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, const std::function<Outcome()>& fn) {
    try {
      auto [ok, detail] = fn();
      out_.push_back({suite_, name, ok, std::move(detail)});
    } catch (const std::exception& e) {
      out_.push_back({suite_, name, false, std::string("exception: ") + e.what()});
    }
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

// 10^{-(digits(bits) - slack)}: agreement expected from working-precision
// arithmetic.
double working_tol(long bits, int slack = 10) { return std::pow(10.0, -(digits10_for_bits(bits) - slack)); }

double agreement_digits(const Complex& a, const Complex& b) {
  const double scale = std::max(abs_d(a), abs_d(b));
  const double gap = abs_d(a - b);
  if (gap == 0.0 || scale == 0.0) return std::numeric_limits<double>::infinity();
  return -std::log10(gap / scale);
}

// max over x of the distance from -conj(x) to the nearest member of the set.
double reflection_defect(const std::vector<Complex>& nodes) {
  double worst = 0.0;
  for (const auto& x : nodes) {
    const Complex mirror = -conj(x);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& y : nodes) best = std::min(best, abs_d(y - mirror));
    worst = std::max(worst, best);
  }
  return worst;
}

std::vector<Complex> monic_legendre(int n) {
  std::vector<Complex> prev{Complex(1)};
  std::vector<Complex> cur{Complex(0), Complex(1)};
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const Real beta = Real(k * k) / Real(4 * k * k - 1);
    std::vector<Complex> next(static_cast<std::size_t>(k) + 2, Complex(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i] * beta;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// The closed form -16 (2 w^3 cos w + w^2 (w^2 - 3) sin w + sin^3 w) /
// (w^5 (2 w^2 - 1 + cos 2w)) of (p_2, p_2).
Real norm2_closed_form(const Real& w) {
  const Real s = sin(w);
  const Real num = 2 * pow(w, 3) * cos(w) + w * w * (w * w - Real(3)) * s + s * s * s;
  const Real den = pow(w, 5) * (2 * w * w - Real(1) + cos(2 * w));
  return Real(-16) * num / den;
}

void moments_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  r.check("Legendre moments at omega = 0", [&]() -> Outcome {
    const MomentTable t = moment_table(Real(0), 12, bits);
    PrecisionScope scope(bits);
    double worst = 0.0;
    for (int m = 0; m <= 12; ++m) {
      const Complex expected = m % 2 == 0 ? Complex(Real(2) / Real(m + 1)) : Complex(0);
      worst = std::max(worst, abs_d(t[static_cast<std::size_t>(m)] - expected));
    }
    return {worst <= working_tol(bits), "max deviation " + sci(worst)};
  });
  for (double w : {0.5, 2.0, 10.0, 50.0, 100.0}) {
    r.check("parity and |mu_m| <= 2, omega = " + num(w), [&]() -> Outcome {
      const MomentTable t = moment_table(Real(w), 40, bits);
      const double threshold = std::pow(10.0, -t.certified_digits);
      double parity = 0.0, largest = 0.0;
      for (int m = 0; m <= 40; ++m) {
        const Complex& mu = t[static_cast<std::size_t>(m)];
        parity = std::max(parity, abs_d(Complex(m % 2 == 0 ? mu.imag() : mu.real())));
        largest = std::max(largest, abs_d(mu));
      }
      return {parity <= threshold && largest <= 2.0, "parity violation " + sci(parity) + ", max |mu| " + sci(largest)};
    });
    r.check("recurrence table vs closed form, omega = " + num(w), [&]() -> Outcome {
      const MomentTable t = moment_table(Real(w), 40, bits);
      double digits = std::numeric_limits<double>::infinity();
      for (int m = 0; m <= 40; ++m) {
        digits = std::min(digits, agreement_digits(t[static_cast<std::size_t>(m)], moment_closed_form(m, Real(w), bits)));
      }
      return {digits >= t.certified_digits - 2,
              "min agreement " + num(std::floor(digits)) + " digits, certified " + num(std::floor(t.certified_digits))};
    });
  }
  r.check("series and recurrence agree at the small-omega switch", [&]() -> Outcome {
    const Real w(kSmallOmegaThreshold);
    const MomentTable t = moment_table(w, 20, bits);
    double digits = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= 20; ++m) {
      digits = std::min(digits, agreement_digits(t[static_cast<std::size_t>(m)], moment_series(m, w, bits)));
    }
    return {digits >= t.certified_digits - 2, "min agreement " + num(std::floor(digits)) + " digits"};
  });
  r.check("moments match the oracle for m <= 10", [&]() -> Outcome {
    double worst = 0.0;
    for (double w : {0.5, 2.0, 10.0, 50.0}) {
      const MomentTable t = moment_table(Real(w), 10, bits);
      for (int m = 0; m <= 10; ++m) {
        const ReferenceValue ref = reference_integral(Integrand::monomial(m), Real(w), 1e-30, bits);
        worst = std::max(worst, abs_d(ref.value - t[static_cast<std::size_t>(m)]));
      }
    }
    return {worst <= 1e-30, "max deviation " + sci(worst)};
  });
}

void orthogonality_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  for (double w : {0.5, 3.0, 10.0, 40.0, 100.0}) {
    r.check("orthogonality residual n = 1..16, omega = " + num(w), [&]() -> Outcome {
      double worst = 0.0;
      long max_solve = bits;
      for (int n = 1; n <= 16; ++n) {
        const MonicPolynomial p = orthogonal_polynomial(n, Real(w), bits);
        max_solve = std::max(max_solve, p.solve_bits);
        const MomentTable t = moment_table(Real(w), 2 * n, bits);
        const auto full = p.full_coefficients();
        PrecisionScope scope(bits);
        for (int j = 0; j < n; ++j) {
          Complex s(0);
          Real scale(0);
          for (std::size_t k = 0; k < full.size(); ++k) {
            const Complex term = full[k] * t[static_cast<std::size_t>(j) + k];
            s += term;
            scale += abs(term);
          }
          worst = std::max(worst, (abs(s) / scale).to_double());
        }
      }
      return {worst <= working_tol(bits, 5),
              "max relative residual " + sci(worst) + ", largest solve " + std::to_string(max_solve) + " bits"};
    });
  }
  r.check("monic Legendre polynomials at omega = 0", [&]() -> Outcome {
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
      const MonicPolynomial p = orthogonal_polynomial(n, Real(0), bits);
      PrecisionScope scope(bits);
      const auto legendre = monic_legendre(n);
      for (int k = 0; k < n; ++k) {
        worst = std::max(worst, abs_d(p.coeffs[static_cast<std::size_t>(k)] - legendre[static_cast<std::size_t>(k)]));
      }
    }
    return {worst <= working_tol(bits), "max coefficient deviation " + sci(worst)};
  });
  for (double w : {0.5, 3.0, 10.0}) {
    r.check("alpha_k imaginary, beta_k real and norm ratios, omega = " + num(w), [&]() -> Outcome {
      const RecurrenceCoeffs rc = recurrence_coeffs(6, Real(w), bits);
      double re_alpha = 0.0, im_beta = 0.0, ratio = 0.0;
      PrecisionScope scope(bits + 64);
      for (const auto& a : rc.alpha) re_alpha = std::max(re_alpha, abs_d(Complex(a.real())) / std::max(1.0, abs_d(a)));
      for (std::size_t k = 0; k < rc.beta.size(); ++k) {
        const Complex& b = rc.beta[k];
        im_beta = std::max(im_beta, abs_d(Complex(b.imag())) / std::max(1.0, abs_d(b)));
        const int kk = static_cast<int>(k) + 1;
        const Complex expected = norm_sq(kk, Real(w), bits) / norm_sq(kk - 1, Real(w), bits);
        ratio = std::max(ratio, abs_d(b - expected) / std::max(1.0, abs_d(expected)));
      }
      const double tol = working_tol(bits);
      return {rc.defined_up_to == 6 && re_alpha <= tol && im_beta <= tol && ratio <= tol,
              "max |Re alpha| " + sci(re_alpha) + ", max |Im beta| " + sci(im_beta) + ", norm-ratio gap " + sci(ratio)};
    });
  }
}

void symmetry_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  for (double w : {0.5, 3.0, 10.0, 40.0, 100.0, 200.0}) {
    r.check("coefficient symmetry n = 1..16, omega = " + num(w), [&]() -> Outcome {
      double worst = 0.0;
      for (int n = 1; n <= 16; ++n) worst = std::max(worst, symmetry_defect(orthogonal_polynomial(n, Real(w), bits)));
      return {worst <= 1e-20, "max symmetry defect " + sci(worst)};
    });
    r.check("node sets invariant under z -> -conj(z), omega = " + num(w), [&]() -> Outcome {
      double worst = 0.0;
      for (int n : {2, 3, 4, 8, 16}) {
        PrecisionScope scope(bits);
        worst = std::max(worst, reflection_defect(gauss_oscillatory(n, Real(w), bits).nodes));
      }
      return {worst <= 1e-20, "max reflection defect " + sci(worst)};
    });
  }
}

void identities_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  const double h = 1e-4;
  auto in_band = [](double ratio) { return ratio >= 3.5 && ratio <= 4.5; };
  for (double w : {2.0, 7.0, 15.0}) {
    for (int n = 1; n <= 6; ++n) {
      r.check("dp_n/domega = -i beta_n p_{n-1}, n = " + std::to_string(n) + ", omega = " + num(w), [&]() -> Outcome {
        const FiniteDifferenceCheck c = check_derivative_identity(n, Real(w), h, bits);
        return {in_band(c.ratio), "residual " + sci(c.residual_h) + ", Richardson ratio " + num(c.ratio)};
      });
    }
    for (int k = 0; k <= 5; ++k) {
      r.check("deformation equations, k = " + std::to_string(k) + ", omega = " + num(w), [&]() -> Outcome {
        const CoeffRecurrenceCheck c = check_coeff_recurrences(k, Real(w), h, bits);
        const bool second_ok = in_band(c.second.ratio) || c.near_breakdown;
        std::string detail = "ratios " + num(c.first.ratio) + ", " + num(c.second.ratio) + "; residuals " +
                             sci(c.first.residual_h) + ", " + sci(c.second.residual_h);
        if (c.near_breakdown) detail += "; beta_{k+1} near a zero (flagged)";
        return {in_band(c.first.ratio) && second_ok, detail};
      });
    }
  }
  r.check("n = 1 coefficient derivative matches the closed form", [&]() -> Outcome {
    double worst = 0.0;
    for (double w : {0.5, 1.0, 2.0, 3.0}) {
      PrecisionScope scope(bits);
      const Real x(w);
      auto central = [&](const Real& step) {
        return (orthogonal_polynomial(1, x + step, bits).coeffs[0] - orthogonal_polynomial(1, x - step, bits).coeffs[0]) /
               (2 * step);
      };
      const Complex diff = (central(Real(h / 2)) * Real(4) - central(Real(h))) / Real(3);
      const Real s = sin(x);
      const Complex exact(Real(0), -(Real(1) / (s * s) - Real(1) / (x * x)));
      worst = std::max(worst, abs_d(diff - exact) / std::max(1.0, abs_d(exact)));
    }
    return {worst <= 1e-8, "max relative deviation " + sci(worst) + " (Richardson, h = 1e-4)"};
  });
}

void exactness_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  for (int n : {2, 4, 6, 8}) {
    for (double w : {0.5, 3.0, 10.0, 50.0}) {
      r.check(std::to_string(n) + "-point rule exact through degree " + std::to_string(2 * n - 1) + ", omega = " + num(w),
              [&]() -> Outcome {
                const QuadratureRule rule = gauss_oscillatory(n, Real(w), bits);
                const MomentTable t = moment_table(Real(w), 2 * n - 1, bits);
                double worst = 0.0;
                for (int k = 0; k < 2 * n; ++k) {
                  const Complex q = apply_rule(rule, Integrand::monomial(k));
                  const Complex& mu = t[static_cast<std::size_t>(k)];
                  worst = std::max(worst, abs_d(q - mu) / std::max(1.0, abs_d(mu)));
                }
                return {worst <= 1e-20, "max error " + sci(worst)};
              });
    }
  }
}

void breakdown_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  BreakdownOptions bo;
  bo.precision_bits = bits;
  bo.jobs = o.jobs;
  std::optional<BreakdownScan> scan;
  r.check("scan of (p_2, p_2) on [0.1, 20] matches the closed-form norm", [&]() -> Outcome {
    scan = breakdown_scan(2, 0.1, 20.0, 0.01, bo);
    PrecisionScope scope(bits);
    double worst = 0.0;
    int closed_changes = 0;
    int prev_sign = 0;
    for (const auto& s : scan->samples) {
      const Real closed = norm2_closed_form(Real(s.omega));
      worst = std::max(worst, abs_d(s.norm - Complex(closed)) / std::max(1e-300, abs_d(Complex(closed))));
      const int sign = closed.sign();
      if (prev_sign != 0 && sign != 0 && sign != prev_sign) ++closed_changes;
      if (sign != 0) prev_sign = sign;
    }
    const bool ok = worst <= working_tol(bits, 20) && static_cast<int>(scan->records.size()) == closed_changes;
    return {ok, std::to_string(scan->records.size()) + " zeros (closed form " + std::to_string(closed_changes) +
                    "), max relative deviation " + sci(worst)};
  });
  r.check("(p_2, p_2) real along the scan", [&]() -> Outcome {
    if (!scan) return {false, "scan unavailable"};
    return {scan->max_relative_imag <= working_tol(bits), "max |Im|/|.| " + sci(scan->max_relative_imag)};
  });
  r.check("degree 3 non-existent inside each refined bracket", [&]() -> Outcome {
    if (!scan || scan->records.empty()) return {false, "no breakdown records"};
    int hits = 0;
    for (const auto& rec : scan->records) {
      ExistenceOptions eo;
      eo.omega_resolution = std::max((rec.refined_hi - rec.refined_lo).to_double(), bo.refine_tol);
      try {
        orthogonal_polynomial(3, rec.omega_star, bits, eo);
      } catch (const NonExistent&) {
        ++hits;
      }
    }
    return {hits == static_cast<int>(scan->records.size()),
            std::to_string(hits) + " of " + std::to_string(scan->records.size()) + " reported NonExistent"};
  });
  r.check("p_2 satisfies the degree-3 orthogonality conditions at omega*", [&]() -> Outcome {
    if (!scan || scan->records.empty()) return {false, "no breakdown records"};
    double worst = 0.0;
    for (const auto& rec : scan->records) {
      const MonicPolynomial p = orthogonal_polynomial(2, rec.omega_star, bits);
      const MomentTable t = moment_table(rec.omega_star, 4, bits);
      PrecisionScope scope(bits);
      worst = std::max(worst, orthogonality_residual(p.full_coefficients(), t, 3));
    }
    return {worst <= 1e-10, "max residual " + sci(worst)};
  });
  r.check("recurrence coefficients stop at a tightly refined omega*", [&]() -> Outcome {
    BreakdownOptions tight = bo;
    tight.refine_tol = 1e-50;
    const BreakdownScan s = breakdown_scan(2, 5.5, 6.5, 0.01, tight);
    if (s.records.size() != 1) return {false, std::to_string(s.records.size()) + " zeros on [5.5, 6.5]"};
    const RecurrenceCoeffs rc = recurrence_coeffs(3, s.records[0].omega_star, bits);
    const bool ok = rc.norm_vanished && rc.defined_up_to == 2 && rc.alpha.size() == 2;
    return {ok, "defined up to k = " + std::to_string(rc.defined_up_to) + ", |beta_2| " +
                    sci(rc.beta.size() >= 2 ? abs_d(rc.beta[1]) : -1.0)};
  });
  r.check("no zero of (p_2, p_2) on [0.1, 5]", [&]() -> Outcome {
    const BreakdownScan s = breakdown_scan(2, 0.1, 5.0, 0.01, bo);
    return {s.records.empty(), std::to_string(s.records.size()) + " records"};
  });
  r.check("omega_k - (k pi - 2/(k pi)) = C k^-3 for k = 8..14", [&]() -> Outcome {
    const BreakdownScan s = breakdown_scan(2, 25.0, 45.0, 0.01, bo);
    if (s.records.size() != 7) return {false, std::to_string(s.records.size()) + " zeros, expected 7"};
    std::vector<double> ks, ds;
    for (const auto& rec : s.records) {
      const double wk = rec.omega_star.to_double();
      const double k = std::round(wk / std::numbers::pi);
      ks.push_back(k);
      ds.push_back(wk - (k * std::numbers::pi - 2.0 / (k * std::numbers::pi)));
    }
    double num_c = 0.0, den_c = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      num_c += ds[i] * std::pow(ks[i], -3);
      den_c += std::pow(ks[i], -6);
    }
    const double c = num_c / den_c;
    double worst = 0.0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const double model = c * std::pow(ks[i], -3);
      worst = std::max(worst, std::fabs(ds[i] - model) / std::fabs(model));
    }
    return {ks.front() == 8 && ks.back() == 14 && worst <= 0.1,
            "C = " + num(c) + ", max relative model residual " + sci(worst)};
  });
}

void roots_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  r.check("p_1 root at omega = pi/2 is 2i/pi", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const RootSet rs = polynomial_roots(orthogonal_polynomial(1, pi() / 2, bits));
    const double gap = abs_d(rs.roots[0] - Complex(Real(0), Real(2) / pi()));
    return {gap <= working_tol(bits), "deviation " + sci(gap)};
  });
  r.check("p_2 roots at omega = 1e-8 are +-1/sqrt(3)", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const RootSet rs = polynomial_roots(orthogonal_polynomial(2, Real(1e-8), bits));
    const Real g = Real(1) / sqrt(Real(3));
    const double gap = std::max(std::min(abs_d(rs.roots[0] - g), abs_d(rs.roots[0] + g)),
                                std::min(abs_d(rs.roots[1] - g), abs_d(rs.roots[1] + g)));
    return {gap <= 1e-6, "deviation " + sci(gap)};
  });
  r.check("p_2 roots at omega = 100 near +-1 + i/100", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const RootSet rs = polynomial_roots(orthogonal_polynomial(2, Real(100), bits));
    double gap = 0.0;
    for (const auto& x : rs.roots) {
      gap = std::max(gap, std::min(abs_d(x - Complex(Real(1), Real(0.01))), abs_d(x - Complex(Real(-1), Real(0.01)))));
    }
    return {gap <= 1e-2, "deviation " + sci(gap)};
  });
  r.check("root residuals and root-set symmetry", [&]() -> Outcome {
    double residual = 0.0, reflect = 0.0;
    for (int n : {2, 3, 4, 8, 16}) {
      for (double w : {0.5, 10.0, 100.0}) {
        const RootSet rs = polynomial_roots(orthogonal_polynomial(n, Real(w), bits));
        for (double v : rs.residuals) residual = std::max(residual, v);
        PrecisionScope scope(bits);
        reflect = std::max(reflect, reflection_defect(rs.roots));
      }
    }
    return {residual <= working_tol(bits) && reflect <= 1e-20,
            "max residual " + sci(residual) + ", max reflection defect " + sci(reflect)};
  });

  const std::vector<Real> grid = [&] {
    PrecisionScope scope(bits);
    return linear_grid(Real(0.01), Real(20), 2000);
  }();
  std::optional<Trajectory> t2;
  r.check("n = 2 trajectory starts at the Gauss-Legendre nodes", [&]() -> Outcome {
    t2 = continue_roots(2, grid, bits);
    const QuadratureRule gl = gauss_legendre(2, bits);
    PrecisionScope scope(bits);
    double gap = 0.0;
    for (const auto& path : t2->paths) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& x : gl.nodes) best = std::min(best, abs_d(path[0] - x));
      gap = std::max(gap, best);
    }
    return {gap <= 10 * grid[0].to_double(), "deviation " + sci(gap) + " at omega = 0.01"};
  });
  r.check("n = 2 cusp candidates coincide with zeros of (p_2, p_2)", [&]() -> Outcome {
    if (!t2) return {false, "trajectory unavailable"};
    BreakdownOptions bo;
    bo.precision_bits = bits;
    bo.jobs = o.jobs;
    const BreakdownScan scan = breakdown_scan(2, 0.01, 20.0, 0.01, bo);
    const double cell = (grid[1] - grid[0]).to_double();
    auto near = [&](double a, double b) { return std::fabs(a - b) <= cell; };
    int matched_cusps = 0, matched_zeros = 0;
    for (int c : t2->cusp_candidates) {
      const double wc = grid[static_cast<std::size_t>(c)].to_double();
      for (const auto& rec : scan.records) {
        if (near(wc, rec.omega_star.to_double())) {
          ++matched_cusps;
          break;
        }
      }
    }
    for (const auto& rec : scan.records) {
      for (int c : t2->cusp_candidates) {
        if (near(grid[static_cast<std::size_t>(c)].to_double(), rec.omega_star.to_double())) {
          ++matched_zeros;
          break;
        }
      }
    }
    const bool ok = matched_cusps == static_cast<int>(t2->cusp_candidates.size()) &&
                    matched_zeros == static_cast<int>(scan.records.size()) && !scan.records.empty();
    return {ok, std::to_string(t2->cusp_candidates.size()) + " cusps, " + std::to_string(scan.records.size()) +
                    " zeros, " + std::to_string(matched_cusps) + "/" + std::to_string(matched_zeros) + " matched"};
  });
  r.check("n = 2 trajectory symmetric under z -> -conj(z)", [&]() -> Outcome {
    if (!t2) return {false, "trajectory unavailable"};
    PrecisionScope scope(bits);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (!t2->exists[i]) continue;
      worst = std::max(worst, reflection_defect({t2->paths[0][i], t2->paths[1][i]}));
    }
    return {worst <= 1e-20, "max reflection defect " + sci(worst)};
  });
  r.check("n = 3: one path on the imaginary axis, two paths follow n = 2 at cusps", [&]() -> Outcome {
    if (!t2) return {false, "trajectory unavailable"};
    const Trajectory t3 = continue_roots(3, grid, bits);
    PrecisionScope scope(bits);
    int axis_paths = 0;
    std::size_t axis = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      double re = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (t3.exists[i]) re = std::max(re, abs_d(Complex(t3.paths[j][i].real())));
      }
      if (re <= 1e-20) {
        ++axis_paths;
        axis = j;
      }
    }
    double gap = 0.0;
    for (int c : t2->cusp_candidates) {
      const auto i = static_cast<std::size_t>(c);
      if (!t3.exists[i]) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == axis) continue;
        gap = std::max(gap, std::min(abs_d(t3.paths[j][i] - t2->paths[0][i]), abs_d(t3.paths[j][i] - t2->paths[1][i])));
      }
    }
    return {axis_paths == 1 && gap <= 1e-3,
            std::to_string(axis_paths) + " imaginary-axis path(s), max gap to n = 2 at cusps " + sci(gap)};
  });
  r.check("halving the grid spacing leaves the n = 4 paths unchanged", [&]() -> Outcome {
    std::vector<Real> coarse, fine;
    {
      PrecisionScope scope(bits);
      fine = linear_grid(Real(0.01), Real(10), 1001);
      for (std::size_t i = 0; i < fine.size(); i += 2) coarse.push_back(fine[i]);
    }
    const Trajectory a = continue_roots(4, coarse, bits);
    const Trajectory b = continue_roots(4, fine, bits);
    const double spacing = (fine[1] - fine[0]).to_double();
    double worst = 0.0;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
      if (!a.exists[i] || !b.exists[2 * i]) continue;
      for (std::size_t j = 0; j < 4; ++j) {
        const double gap = abs_d(a.paths[j][i] - b.paths[j][2 * i]);
        const double speed = std::isfinite(b.speeds[j][2 * i]) ? b.speeds[j][2 * i] : 0.0;
        worst = std::max(worst, gap - speed * spacing);
      }
    }
    return {worst <= working_tol(bits), "max excess over speed x spacing " + sci(std::max(worst, 0.0))};
  });
  r.check("n = 1 root diverges approaching omega = pi", [&]() -> Outcome {
    std::vector<Real> g;
    {
      PrecisionScope scope(bits);
      const Real p = pi();
      for (int e = 1; e <= 12; ++e) g.push_back(p - pow(Real(10), -e));
    }
    const Trajectory t = continue_roots(1, g, bits);
    double last = 0.0, first = 0.0;
    bool growing = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!t.exists[i]) continue;
      const double m = abs_d(t.paths[0][i]);
      if (i == 0) first = m;
      if (m < last) growing = false;
      last = m;
    }
    return {growing && last > 1e10 * first, "|root| from " + sci(first) + " to " + sci(last)};
  });
}

void rules_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  const double tol = working_tol(bits);
  r.check("Gauss-Legendre invariants and small cases", [&]() -> Outcome {
    PrecisionScope scope(bits);
    double worst = 0.0;
    bool shape = true;
    for (int n = 1; n <= 30; ++n) {
      const QuadratureRule g = gauss_legendre(n, bits);
      Real sum(0);
      for (std::size_t j = 0; j < g.nodes.size(); ++j) {
        shape = shape && abs(g.nodes[j].real()) < Real(1) && g.weights[j].real().sign() > 0;
        sum += g.weights[j].real();
      }
      worst = std::max(worst, abs_d(Complex(sum - Real(2))));
    }
    const QuadratureRule g1 = gauss_legendre(1, bits), g2 = gauss_legendre(2, bits), g5 = gauss_legendre(5, bits);
    worst = std::max({worst, abs_d(g1.nodes[0]), abs_d(g1.weights[0] - Complex(2)),
                      abs_d(g2.nodes[1] - Complex(Real(1) / sqrt(Real(3)))), abs_d(g2.weights[0] - Complex(1))});
    const double x8 = abs_d(apply_rule(g5, Integrand::monomial(8)) - Complex(Real(2) / Real(9)));
    return {shape && worst <= tol && x8 <= 1e-30, "max deviation " + sci(worst) + ", x^8 error " + sci(x8)};
  });
  r.check("Gauss-Laguerre invariants and small cases", [&]() -> Outcome {
    PrecisionScope scope(bits);
    double worst = 0.0;
    bool shape = true;
    for (int n : {1, 2, 3, 4, 8, 16, 32, 64}) {
      const QuadratureRule g = gauss_laguerre(n, bits);
      Real sum(0);
      for (std::size_t j = 0; j < g.nodes.size(); ++j) {
        shape = shape && g.nodes[j].real().sign() > 0 && g.weights[j].real().sign() > 0;
        sum += g.weights[j].real();
      }
      worst = std::max(worst, abs_d(Complex(sum - Real(1))));
    }
    const QuadratureRule g1 = gauss_laguerre(1, bits), g2 = gauss_laguerre(2, bits);
    const Real s2 = sqrt(Real(2));
    worst = std::max({worst, abs_d(g1.nodes[0] - Complex(1)), abs_d(g1.weights[0] - Complex(1)),
                      abs_d(g2.nodes[0] - Complex(Real(2) - s2)), abs_d(g2.nodes[1] - Complex(Real(2) + s2)),
                      abs_d(g2.weights[0] - Complex((Real(2) + s2) / 4)), abs_d(g2.weights[1] - Complex((Real(2) - s2) / 4))});
    return {shape && worst <= tol, "max deviation " + sci(worst)};
  });
  r.check("superinterpolation nodes", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const QuadratureRule a = superinterpolation_rule(1, Real(10), bits);
    const QuadratureRule b = superinterpolation_rule(2, Real(100), bits);
    const Real s2 = sqrt(Real(2));
    double worst = std::max(abs_d(a.nodes[0] - Complex(Real(-1), Real(1) / 10)), abs_d(a.nodes[1] - Complex(Real(1), Real(1) / 10)));
    const Real lo = (Real(2) - s2) / 100, hi = (Real(2) + s2) / 100;
    worst = std::max({worst, abs_d(b.nodes[0] - Complex(Real(-1), lo)), abs_d(b.nodes[1] - Complex(Real(-1), hi)),
                      abs_d(b.nodes[2] - Complex(Real(1), lo)), abs_d(b.nodes[3] - Complex(Real(1), hi))});
    bool rejected = false;
    try {
      superinterpolation_rule(1, Real(0), bits);
    } catch (const InvalidArgument&) {
      rejected = true;
    }
    return {worst <= tol && rejected, "max node deviation " + sci(worst) + (rejected ? "" : "; omega = 0 accepted")};
  });
  r.check("superinterpolation rule equals steepest-descent evaluation", [&]() -> Outcome {
    double worst = 0.0;
    for (const auto& f : {Integrand::one(), Integrand::monomial(3), Integrand::sin(), Integrand::cos(), Integrand::exp(),
                          Integrand::runge(2.0)}) {
      for (double w : {7.0, 20.0, 100.0}) {
        for (int nh : {1, 4}) {
          const Complex a = apply_rule(superinterpolation_rule(nh, Real(w), bits), f);
          const Complex b = steepest_descent_eval(f, Real(w), nh, bits);
          worst = std::max(worst, abs_d(a - b) / std::max(1.0, abs_d(b)));
        }
      }
    }
    return {worst <= tol, "max deviation " + sci(worst)};
  });
  r.check("weight sums equal mu_0", [&]() -> Outcome {
    double worst = 0.0;
    for (double w : {0.5, 3.0, 20.0, 50.0}) {
      PrecisionScope scope(bits);
      const Complex mu0(2 * sin(Real(w)) / Real(w));
      for (const QuadratureRule& rule : {gauss_oscillatory(2, Real(w), bits), gauss_oscillatory(5, Real(w), bits),
                                         superinterpolation_rule(1, Real(w), bits),
                                         superinterpolation_rule(3, Real(w), bits, SuperinterpolationWeights::Filon)}) {
        Complex sum(0);
        for (const auto& wt : rule.weights) sum += wt;
        worst = std::max(worst, abs_d(sum - mu0));
      }
    }
    return {worst <= tol, "max deviation " + sci(worst)};
  });
  r.check("interpolatory weights small cases", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const Real half_pi = pi() / 2;
    const std::vector<Complex> one{Complex(Real(0), Real(2) / pi())};
    const InterpolatoryWeights a = interpolatory_weights(one, moment_table(half_pi, 0, bits));
    const Real g = Real(1) / sqrt(Real(3));
    const std::vector<Complex> two{Complex(-g), Complex(g)};
    const InterpolatoryWeights b = interpolatory_weights(two, moment_table(Real(0), 1, bits));
    const double worst = std::max({abs_d(a.weights[0] - Complex(Real(4) / pi())), abs_d(b.weights[0] - Complex(1)),
                                   abs_d(b.weights[1] - Complex(1))});
    bool coincident = false;
    try {
      const std::vector<Complex> same{Complex(g), Complex(g)};
      interpolatory_weights(same, moment_table(Real(1), 1, bits));
    } catch (const InvalidArgument&) {
      coincident = true;
    }
    return {worst <= tol && coincident, "max deviation " + sci(worst) + (coincident ? "" : "; coincident nodes accepted")};
  });
  r.check("n = 1 rule non-existent at omega = pi and 2 pi", [&]() -> Outcome {
    int hits = 0;
    for (int k : {1, 2}) {
      PrecisionScope scope(bits);
      try {
        gauss_oscillatory(1, pi() * Real(k), bits);
      } catch (const NonExistent&) {
        ++hits;
      }
    }
    return {hits == 2, std::to_string(hits) + " of 2 reported NonExistent"};
  });
  r.check("nodes approach Gauss-Legendre linearly as omega -> 0", [&]() -> Outcome {
    double spread = 0.0;
    std::string detail;
    for (int n : {2, 4, 8}) {
      const QuadratureRule gl = gauss_legendre(n, bits);
      std::vector<double> cs;
      for (double w : {1e-3, 5e-4, 2.5e-4}) {
        const QuadratureRule g = gauss_oscillatory(n, Real(w), bits);
        PrecisionScope scope(bits);
        double dev = 0.0;
        for (std::size_t j = 0; j < g.nodes.size(); ++j) dev = std::max(dev, abs_d(g.nodes[j] - gl.nodes[j]));
        cs.push_back(dev / w);
      }
      const auto [lo, hi] = std::minmax_element(cs.begin(), cs.end());
      spread = std::max(spread, *hi / *lo);
      detail += "n=" + std::to_string(n) + " C=" + num(*hi) + " ";
    }
    return {spread <= 1.5, detail + "max C ratio " + num(spread)};
  });
  r.check("16-point nodes within C/omega^2 of superinterpolation nodes, omega = 50, 100, 200", [&]() -> Outcome {
    std::vector<std::vector<double>> scaled;
    for (double w : {50.0, 100.0, 200.0}) {
      auto d = superinterp_distance(16, Real(w), bits);
      for (auto& x : d) x *= w * w;
      scaled.push_back(std::move(d));
    }
    double worst = 1.0, largest = 0.0;
    for (std::size_t l = 0; l < scaled[0].size(); ++l) {
      double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
      for (const auto& s : scaled) {
        lo = std::min(lo, s[l]);
        hi = std::max(hi, s[l]);
      }
      worst = std::max(worst, hi / lo);
      largest = std::max(largest, hi);
    }
    return {worst <= 2.0, "max C " + num(largest) + ", max ratio across frequencies " + num(worst)};
  });
}

void oracle_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  r.check("oracle matches moment tables for m <= 12", [&]() -> Outcome {
    double worst = 0.0;
    for (double w : {0.0, 0.5, 2.0, 10.0, 50.0, 200.0}) {
      const MomentTable t = moment_table(Real(w), 12, bits);
      for (int m = 0; m <= 12; ++m) {
        const ReferenceValue ref = reference_integral(Integrand::monomial(m), Real(w), 1e-30, bits);
        worst = std::max(worst, abs_d(ref.value - t[static_cast<std::size_t>(m)]));
      }
    }
    return {worst <= 1e-30, "max deviation " + sci(worst)};
  });
  r.check("oracle small cases", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const double a = abs_d(reference_integral(Integrand::one(), Real(2), 1e-30, bits).value - Complex(sin(Real(2))));
    const double b = abs_d(reference_integral(Integrand::monomial(4), Real(0), 1e-30, bits).value - Complex(Real(2) / Real(5)));
    return {a <= 1e-30 && b <= 1e-30, "deviations " + sci(a) + ", " + sci(b)};
  });
  r.check("composite and steepest-descent routes agree for sin at omega = 30", [&]() -> Outcome {
    const ReferenceValue ref = reference_integral(Integrand::sin(), Real(30), 1e-30, bits);
    if (!ref.method_b) return {false, "steepest-descent route unavailable"};
    const double gap = abs_d(*ref.method_b - ref.method_a);
    return {gap <= 1e-25, "gap " + sci(gap)};
  });
  r.check("panel refinement differences shrink tenfold", [&]() -> Outcome {
    const ReferenceValue ref = reference_integral(Integrand::runge(1.0), Real(3), 1e-60, bits);
    const auto& h = ref.refinement_history;
    bool ok = h.size() >= 2;
    const double noise = working_tol(bits);
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i - 1] > noise && h[i] > h[i - 1] / 10) ok = false;
    }
    std::string detail = std::to_string(h.size()) + " doublings:";
    for (double d : h) detail += " " + sci(d);
    return {ok, detail};
  });
  r.check("Laguerre polynomial values", [&]() -> Outcome {
    PrecisionScope scope(bits);
    const double a = abs_d(laguerre_eval(0, Complex(Real(3), Real(1))) - Complex(1));
    const double b = abs_d(laguerre_eval(1, Complex(1)));
    const double c = abs_d(laguerre_eval(2, Complex(Real(2) - sqrt(Real(2)))));
    const double worst = std::max({a, b, c});
    return {worst <= working_tol(bits), "max deviation " + sci(worst)};
  });
}

void asymptotics_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  const std::vector<double> grid = log_grid(10.0, 1e4, 20);
  std::vector<ReferenceValue> refs;
  r.check("oracle values for sin on [10, 1e4]", [&]() -> Outcome {
    refs = reference_values(Integrand::sin(), grid, 1e-30, bits, o.jobs);
    double worst = 0.0;
    for (const auto& ref : refs) worst = std::max(worst, ref.est_error);
    return {true, std::to_string(refs.size()) + " values, max est_error " + sci(worst)};
  });
  struct Case {
    RuleFamily family;
    int points;
    double lo, hi;
  };
  for (const Case& c : {Case{RuleFamily::GaussOscillatory, 2, -3.2, -2.8}, Case{RuleFamily::GaussOscillatory, 4, -5.3, -4.7},
                        Case{RuleFamily::Superinterpolation, 2, -3.2, -2.8}}) {
    const std::string name =
        std::string(rule_family_name(c.family)) + " " + std::to_string(c.points) + "-point slope on [10, 1e4]";
    r.check(name, [&]() -> Outcome {
      if (refs.size() != grid.size()) return {false, "oracle values unavailable"};
      OrderOptions oo;
      oo.precision_bits = bits;
      oo.jobs = o.jobs;
      oo.references = &refs;
      const OrderFit fit = asymptotic_order(c.family, c.points, Integrand::sin(), grid, oo);
      if (!fit.fittable) return {false, "unfittable"};
      // 2n points: order 2n + 1.
      const double gaussian_bound = -(c.points + 1) + 0.3;
      const bool ok = fit.slope >= c.lo && fit.slope <= c.hi && fit.slope <= gaussian_bound;
      return {ok, "slope " + num(fit.slope) + " +- " + num(fit.slope_ci) + ", band [" + num(c.lo) + ", " + num(c.hi) + "]"};
    });
  }
}

void limits_suite(Recorder& r, const CheckOptions& o) {
  const long bits = o.precision_bits;
  std::vector<Complex> samples;
  {
    PrecisionScope scope(bits);
    for (int i = 0; i <= 20; ++i) samples.emplace_back(Real(-1) + Real(i) / Real(10));
  }
  for (int n : {2, 4}) {
    r.check(std::to_string(n) + "-point limit defect shrinks at least 5x from omega = 100 to 1000", [&]() -> Outcome {
      const double a = limit_defect(n, Real(100), samples, bits);
      const double b = limit_defect(n, Real(1000), samples, bits);
      return {a >= 5 * b, "defects " + sci(a) + ", " + sci(b) + ", ratio " + num(a / b)};
    });
  }
  r.check("Laguerre product vanishes at the superinterpolation nodes", [&]() -> Outcome {
    double worst = 0.0;
    for (int nh : {1, 2, 4}) {
      const QuadratureRule s = superinterpolation_rule(nh, Real(50), bits);
      PrecisionScope scope(bits);
      for (const auto& x : s.nodes) {
        const Complex off = x + Complex(Real(0), Real(1) / Real(500));
        worst = std::max(worst, abs_d(laguerre_product(nh, Real(50), x)) /
                                    abs_d(laguerre_product(nh, Real(50), off)));
      }
    }
    return {worst <= working_tol(bits), "max relative value " + sci(worst)};
  });
}

using SuiteFn = void (*)(Recorder&, const CheckOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"moments", moments_suite},       {"orthogonality", orthogonality_suite},
      {"symmetry", symmetry_suite},     {"identities", identities_suite},
      {"exactness", exactness_suite},   {"breakdown", breakdown_suite},
      {"roots", roots_suite},           {"rules", rules_suite},
      {"oracle", oracle_suite},         {"asymptotics", asymptotics_suite},
      {"limits", limits_suite},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_checks(std::string_view suite, const CheckOptions& options) {
  if (options.precision_bits < kMinPrecisionBits || options.precision_bits > kMaxPrecisionBits) {
    throw InvalidArgument("precision_bits must lie in [64, 65536]");
  }
  std::vector<CheckResult> out;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    PrecisionScope scope(options.precision_bits);
    Recorder recorder(name, out);
    fn(recorder, options);
  }
  if (!found) throw InvalidArgument("unknown check suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace oscgauss
