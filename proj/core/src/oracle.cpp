#include "oscgauss/oracle.hpp"

#include "oscgauss/errors.hpp"
#include "oscgauss/rules.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace oscgauss {
namespace {

constexpr int kPanelOrder = 30;
constexpr int kMaxDoublings = 14;

const QuadratureRule& panel_rule(long bits) {
  thread_local std::map<long, QuadratureRule> cache;
  auto it = cache.find(bits);
  if (it == cache.end()) it = cache.emplace(bits, gauss_legendre(kPanelOrder, bits)).first;
  return it->second;
}

Complex composite_sum(const Integrand& f, const Real& omega, long panels, const QuadratureRule& gl) {
  const Real h = Real(2) / Real(panels);
  const Real half = h / 2;
  std::vector<Complex> local;
  std::vector<Real> offset;
  local.reserve(gl.nodes.size());
  for (const auto& t : gl.nodes) {
    offset.push_back(half * t.real());
    local.push_back(expi(omega * offset.back()) * half);
  }
  // e^{i omega c_p} advanced panel by panel from c_0 with a fixed rotation,
  // renormalized from the exact value every 64 panels.
  const Real c0 = Real(-1) + half;
  const Complex rotation = expi(omega * h);
  Complex phase = expi(omega * c0);
  Complex sum(0);
  for (long p = 0; p < panels; ++p) {
    if (p > 0) phase = (p % 64 == 0) ? expi(omega * (c0 + h * Real(p))) : phase * rotation;
    const Real c = c0 + h * Real(p);
    Complex panel(0);
    for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
      panel += local[k] * (gl.weights[k].real() * f(c + offset[k]));
    }
    sum += phase * panel;
  }
  return sum;
}

}  // namespace

Complex laguerre_eval(int n, const Complex& z) {
  if (n < 0) throw InvalidArgument("laguerre_eval requires n >= 0");
  Complex prev(0);
  Complex cur(1);
  for (int k = 1; k <= n; ++k) {
    Complex next = ((Real(2 * k - 1) - z) * cur - prev * Real(k - 1)) / Real(k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ReferenceValue reference_integral(const Integrand& f, const Real& omega, double tol, long precision_bits) {
  if (omega.sign() < 0) throw InvalidArgument("omega must be nonnegative");
  if (!(tol > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (precision_bits < kMinPrecisionBits || precision_bits > kMaxPrecisionBits) {
    throw InvalidArgument("precision_bits must lie in [64, 65536]");
  }
  const int digits = digits10_for_bits(precision_bits);
  if (std::log10(tol) < -(digits - 10)) {
    throw InvalidArgument("tolerance " + std::to_string(tol) + " is below what " + std::to_string(precision_bits) +
                          "-bit arithmetic can certify");
  }

  const long work = precision_bits + 32;
  ReferenceValue out;
  PrecisionScope scope(work);
  const Real w = omega;
  const QuadratureRule& gl = panel_rule(work);

  const double wd = w.to_double();
  const double width = wd > 0.0 ? std::min(2.0, std::numbers::pi / wd) : 2.0;
  long panels = std::max(1L, static_cast<long>(std::ceil(2.0 / width - 1e-12)));
  Complex previous = composite_sum(f, w, panels, gl);
  double a_error = -1.0;
  for (int d = 0; d < kMaxDoublings; ++d) {
    panels *= 2;
    Complex current = composite_sum(f, w, panels, gl);
    const double diff = abs_d(current - previous);
    out.refinement_history.push_back(diff);
    previous = std::move(current);
    if (diff <= tol / 2) {
      a_error = diff;
      break;
    }
  }
  if (a_error < 0.0) throw NumericalFailure("oracle: composite Gauss-Legendre did not reach the tolerance");
  out.method_a = previous;
  out.panels = panels;
  out.value = previous;
  out.est_error = a_error;

  if (wd >= kSteepestDescentMinOmega && f.entire()) {
    Complex prev_b = steepest_descent_eval(f, w, 8, work);
    for (int n_half = 16; n_half <= 128; n_half *= 2) {
      Complex cur_b = steepest_descent_eval(f, w, n_half, work);
      const double diff = abs_d(cur_b - prev_b);
      prev_b = std::move(cur_b);
      if (diff <= tol / 2) {
        out.method_b = prev_b;
        out.method_b_name = "steepest-descent";
        out.laguerre_points = n_half;
        const double gap = abs_d(*out.method_b - out.method_a);
        if (gap > tol) {
          throw NumericalFailure("oracle: composite and steepest-descent values disagree by " + std::to_string(gap));
        }
        out.est_error = std::max(out.est_error, gap);
        break;
      }
    }
  }

  out.value = out.value.rounded(precision_bits);
  out.method_a = out.method_a.rounded(precision_bits);
  if (out.method_b) *out.method_b = out.method_b->rounded(precision_bits);
  return out;
}

}  // namespace oscgauss
