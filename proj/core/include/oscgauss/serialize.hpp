#pragma once

#include "oscgauss/analysis.hpp"
#include "oscgauss/moments.hpp"
#include "oscgauss/orthopoly.hpp"
#include "oscgauss/roots.hpp"
#include "oscgauss/rules.hpp"

#include <ostream>
#include <string>
#include <string_view>

namespace oscgauss {

/// Significant digits written for a value with the given certified digits:
/// the certified count plus one guard digit.
int output_digits(double certified_digits);

/// JSON-compatible decimal text ("null" for non-finite values).
std::string format_number(const Real& x, int digits);
std::string format_number(double x);

/// {kind, n_points, omega, precision_bits, nodes: [[re,im],...], weights: [[re,im],...]}
std::string rule_json(const QuadratureRule& rule);
/// {n, omega, precision_bits, coeffs: [[re,im],...], condition_estimate}
std::string polynomial_json(const MonicPolynomial& p);
/// {omega, m_max, precision_bits, certified_digits, values: [[re,im],...]}
std::string moments_json(const MomentTable& table);
/// {"error": kind, "message": ..., extra fields}
std::string error_json(std::string_view kind, std::string_view message, const std::string& extra_fields = "");
/// Escapes a string as a JSON literal, quotes included.
std::string json_string(std::string_view s);

/// omega,root_index,re,im,speed; rows at non-existent grid points omitted.
void write_trajectory_csv(std::ostream& os, const Trajectory& t);
/// grid_index,omega,max_speed
void write_cusp_csv(std::ostream& os, const Trajectory& t);
/// omega,abs_error,approx_re,approx_im,ref_re,ref_im then "# slope=... ci=..."
void write_sweep_csv(std::ostream& os, const OrderFit& fit);
/// n,omega_star,residual,bracket_lo,bracket_hi
void write_breakdown_csv(std::ostream& os, const std::vector<BreakdownRecord>& records, double refine_tol);
/// omega,norm_re,norm_im; rows where p_n does not exist omitted.
void write_norm_samples_csv(std::ostream& os, const BreakdownScan& scan);

std::string trajectory_json(const Trajectory& t);
std::string sweep_json(const OrderFit& fit);
std::string breakdown_json(const BreakdownScan& scan, double refine_tol);

}  // namespace oscgauss
