#include "oscgauss/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace oscgauss {
namespace {

constexpr int kDoubleDigits = 17;

std::string pair_text(const Complex& z, int digits) {
  return "[" + format_number(z.real(), digits) + "," + format_number(z.imag(), digits) + "]";
}

std::string complex_list(const std::vector<Complex>& values, int digits) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += pair_text(values[i], digits);
  }
  return out + "]";
}

int trajectory_digits(const Trajectory& t) {
  long bits = kMinPrecisionBits;
  for (const auto& path : t.paths) {
    for (const auto& z : path) bits = std::max(bits, z.real().precision());
  }
  return output_digits(digits10_for_bits(bits));
}

int omega_star_digits(const BreakdownRecord& r, double refine_tol) {
  const double magnitude = std::max(std::fabs(r.omega_star.to_double()), 1e-300);
  return std::clamp(static_cast<int>(std::ceil(std::log10(magnitude / refine_tol))) + 1, 1, kDoubleDigits + 60);
}

double max_speed(const Trajectory& t, std::size_t i) {
  double best = 0.0;
  for (const auto& s : t.speeds) best = std::max(best, s[i]);
  return best;
}

}  // namespace

int output_digits(double certified_digits) {
  return std::max(1, static_cast<int>(std::floor(certified_digits)) + 1);
}

std::string format_number(const Real& x, int digits) {
  if (!x.is_finite()) return "null";
  return x.to_string(digits);
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.*g", kDoubleDigits, x);
  return buffer;
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", c);
          out += buffer;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string rule_json(const QuadratureRule& rule) {
  const int digits = output_digits(digits10_for_bits(rule.precision_bits));
  std::ostringstream os;
  os << "{\"kind\":" << json_string(rule_kind_name(rule.kind)) << ",\"n_points\":" << rule.n_points
     << ",\"omega\":" << (rule.omega ? format_number(*rule.omega, digits) : "null")
     << ",\"precision_bits\":" << rule.precision_bits << ",\"nodes\":" << complex_list(rule.nodes, digits)
     << ",\"weights\":" << complex_list(rule.weights, digits) << "}\n";
  return os.str();
}

std::string polynomial_json(const MonicPolynomial& p) {
  const int digits = output_digits(digits10_for_bits(p.precision_bits));
  std::ostringstream os;
  os << "{\"n\":" << p.degree << ",\"omega\":" << format_number(p.omega, digits)
     << ",\"precision_bits\":" << p.precision_bits << ",\"coeffs\":" << complex_list(p.coeffs, digits)
     << ",\"condition_estimate\":" << format_number(p.condition_estimate) << "}\n";
  return os.str();
}

std::string moments_json(const MomentTable& table) {
  const int digits = output_digits(table.certified_digits);
  std::ostringstream os;
  os << "{\"omega\":" << format_number(table.omega, output_digits(digits10_for_bits(table.precision_bits)))
     << ",\"m_max\":" << table.m_max << ",\"precision_bits\":" << table.precision_bits
     << ",\"certified_digits\":" << format_number(std::floor(table.certified_digits))
     << ",\"values\":" << complex_list(table.values, digits) << "}\n";
  return os.str();
}

std::string error_json(std::string_view kind, std::string_view message, const std::string& extra_fields) {
  std::string out = "{\"error\":" + json_string(kind) + ",\"message\":" + json_string(message);
  if (!extra_fields.empty()) out += "," + extra_fields;
  return out + "}\n";
}

void write_trajectory_csv(std::ostream& os, const Trajectory& t) {
  const int digits = trajectory_digits(t);
  os << "omega,root_index,re,im,speed\n";
  for (std::size_t i = 0; i < t.omegas.size(); ++i) {
    if (!t.exists[i]) continue;
    const std::string omega = format_number(t.omegas[i], kDoubleDigits);
    for (std::size_t j = 0; j < t.paths.size(); ++j) {
      const Complex& z = t.paths[j][i];
      os << omega << ',' << j << ',' << format_number(z.real(), digits) << ',' << format_number(z.imag(), digits) << ','
         << format_number(t.speeds[j][i]) << '\n';
    }
  }
}

void write_cusp_csv(std::ostream& os, const Trajectory& t) {
  os << "grid_index,omega,max_speed\n";
  for (int i : t.cusp_candidates) {
    const auto u = static_cast<std::size_t>(i);
    os << i << ',' << format_number(t.omegas[u], kDoubleDigits) << ',' << format_number(max_speed(t, u)) << '\n';
  }
}

void write_sweep_csv(std::ostream& os, const OrderFit& fit) {
  os << "omega,abs_error,approx_re,approx_im,ref_re,ref_im\n";
  for (std::size_t i = 0; i < fit.omegas.size(); ++i) {
    os << format_number(fit.omegas[i]) << ',' << format_number(fit.errors[i]) << ','
       << format_number(fit.approximations[i].real(), kDoubleDigits) << ','
       << format_number(fit.approximations[i].imag(), kDoubleDigits) << ','
       << format_number(fit.references[i].real(), kDoubleDigits) << ','
       << format_number(fit.references[i].imag(), kDoubleDigits) << '\n';
  }
  if (fit.fittable) {
    os << "# slope=" << format_number(fit.slope) << " ci=" << format_number(fit.slope_ci) << '\n';
  } else {
    os << "# slope=unfittable ci=unfittable\n";
  }
}

void write_breakdown_csv(std::ostream& os, const std::vector<BreakdownRecord>& records, double refine_tol) {
  os << "n,omega_star,residual,bracket_lo,bracket_hi\n";
  for (const auto& r : records) {
    os << r.n << ',' << format_number(r.omega_star, omega_star_digits(r, refine_tol)) << ','
       << format_number(r.residual) << ',' << format_number(r.bracket_lo) << ',' << format_number(r.bracket_hi) << '\n';
  }
}

void write_norm_samples_csv(std::ostream& os, const BreakdownScan& scan) {
  os << "omega,norm_re,norm_im\n";
  for (const auto& s : scan.samples) {
    if (!s.exists) continue;
    os << format_number(s.omega) << ',' << format_number(s.norm.real(), kDoubleDigits) << ','
       << format_number(s.norm.imag(), kDoubleDigits) << '\n';
  }
}

std::string trajectory_json(const Trajectory& t) {
  const int digits = trajectory_digits(t);
  std::ostringstream os;
  os << "{\"n\":" << t.n << ",\"omegas\":[";
  for (std::size_t i = 0; i < t.omegas.size(); ++i) os << (i ? "," : "") << format_number(t.omegas[i], kDoubleDigits);
  os << "],\"exists\":[";
  for (std::size_t i = 0; i < t.exists.size(); ++i) os << (i ? "," : "") << (t.exists[i] ? "true" : "false");
  os << "],\"paths\":[";
  for (std::size_t j = 0; j < t.paths.size(); ++j) {
    os << (j ? "," : "") << "[";
    for (std::size_t i = 0; i < t.omegas.size(); ++i) {
      os << (i ? "," : "") << (t.exists[i] ? pair_text(t.paths[j][i], digits) : "null");
    }
    os << "]";
  }
  os << "],\"cusp_candidates\":[";
  for (std::size_t k = 0; k < t.cusp_candidates.size(); ++k) os << (k ? "," : "") << t.cusp_candidates[k];
  os << "],\"ambiguous_steps\":[";
  for (std::size_t k = 0; k < t.ambiguous_steps.size(); ++k) os << (k ? "," : "") << t.ambiguous_steps[k];
  os << "]}\n";
  return os.str();
}

std::string sweep_json(const OrderFit& fit) {
  std::ostringstream os;
  os << "{\"method\":" << json_string(fit.method) << ",\"integrand\":" << json_string(fit.integrand)
     << ",\"n_points\":" << fit.n_points << ",\"fittable\":" << (fit.fittable ? "true" : "false")
     << ",\"slope\":" << (fit.fittable ? format_number(fit.slope) : "null")
     << ",\"slope_ci\":" << (fit.fittable ? format_number(fit.slope_ci) : "null") << ",\"points\":[";
  for (std::size_t i = 0; i < fit.omegas.size(); ++i) {
    os << (i ? "," : "") << "{\"omega\":" << format_number(fit.omegas[i])
       << ",\"abs_error\":" << format_number(fit.errors[i])
       << ",\"approx\":" << pair_text(fit.approximations[i], kDoubleDigits)
       << ",\"ref\":" << pair_text(fit.references[i], kDoubleDigits)
       << ",\"used\":" << (fit.used[i] ? "true" : "false") << "}";
  }
  os << "]}\n";
  return os.str();
}

std::string breakdown_json(const BreakdownScan& scan, double refine_tol) {
  std::ostringstream os;
  os << "{\"records\":[";
  for (std::size_t k = 0; k < scan.records.size(); ++k) {
    const auto& r = scan.records[k];
    os << (k ? "," : "") << "{\"n\":" << r.n
       << ",\"omega_star\":" << format_number(r.omega_star, omega_star_digits(r, refine_tol))
       << ",\"residual\":" << format_number(r.residual) << ",\"bracket\":[" << format_number(r.bracket_lo) << ","
       << format_number(r.bracket_hi) << "]}";
  }
  os << "],\"max_relative_imag\":" << format_number(scan.max_relative_imag) << "}\n";
  return os.str();
}

}  // namespace oscgauss
