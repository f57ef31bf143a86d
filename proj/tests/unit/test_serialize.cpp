#include "oscgauss/checks.hpp"
#include "oscgauss/errors.hpp"
#include "oscgauss/serialize.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>

using namespace oscgauss;
using nlohmann::json;

namespace {

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("number formatting") {
    CHECK(output_digits(17.4) == 18);
    CHECK(format_number(std::nan("")) == "null");
    PrecisionScope scope(256);
    CHECK(format_number(Real("0.125"), 3) == "1.25e-01");
    CHECK(json::parse(format_number(Real(1) / Real(3), 40)).get<double>() == doctest::Approx(1.0 / 3.0));
  }

  TEST_CASE("rule JSON schema") {
    const json j = json::parse(rule_json(gauss_oscillatory(2, Real(3))));
    CHECK(j.at("kind") == "gauss-osc");
    CHECK(j.at("n_points") == 2);
    CHECK(j.at("precision_bits") == 256);
    CHECK(j.at("nodes").size() == 2);
    CHECK(j.at("weights")[0].size() == 2);
    CHECK(j.at("nodes")[1][0].get<double>() == doctest::Approx(0.812386566686462));
    const json legendre = json::parse(rule_json(gauss_legendre(2)));
    CHECK(legendre.at("omega").is_null());
  }

  TEST_CASE("polynomial and moment JSON") {
    const json p = json::parse(polynomial_json(orthogonal_polynomial(2, Real(3))));
    CHECK(p.at("n") == 2);
    CHECK(p.at("coeffs").size() == 2);
    const json m = json::parse(moments_json(moment_table(Real(2), 5)));
    CHECK(m.at("m_max") == 5);
    CHECK(m.at("values").size() == 6);
    CHECK(m.at("values")[1][1].get<double>() == doctest::Approx(0.87079554995998323));
  }

  TEST_CASE("error JSON") {
    const json e = json::parse(error_json("non-existent", "quote \" and\nnewline", "\"degree\":1"));
    CHECK(e.at("error") == "non-existent");
    CHECK(e.at("message") == "quote \" and\nnewline");
    CHECK(e.at("degree") == 1);
  }

  TEST_CASE("CSV headers") {
    std::vector<Real> grid;
    {
      PrecisionScope scope(256);
      grid = linear_grid(Real("0.01"), Real(1), 5);
    }
    const Trajectory t = continue_roots(2, grid);
    std::ostringstream traj, cusp;
    write_trajectory_csv(traj, t);
    write_cusp_csv(cusp, t);
    CHECK(first_line(traj.str()) == "omega,root_index,re,im,speed");
    CHECK(first_line(cusp.str()) == "grid_index,omega,max_speed");

    const BreakdownScan scan = breakdown_scan(2, 5.5, 6.5, 0.05);
    std::ostringstream bd, samples;
    write_breakdown_csv(bd, scan.records, 1e-10);
    write_norm_samples_csv(samples, scan);
    CHECK(first_line(bd.str()) == "n,omega_star,residual,bracket_lo,bracket_hi");
    CHECK(first_line(samples.str()) == "omega,norm_re,norm_im");
    CHECK(bd.str().find("5.92995908077e+00") != std::string::npos);
    const json bj = json::parse(breakdown_json(scan, 1e-10));
    CHECK(bj.is_object());

    const auto omegas = log_grid(100, 1000, 3);
    const OrderFit fit = asymptotic_order(RuleFamily::GaussOscillatory, 2, Integrand::sin(), omegas);
    std::ostringstream sw;
    write_sweep_csv(sw, fit);
    CHECK(first_line(sw.str()) == "omega,abs_error,approx_re,approx_im,ref_re,ref_im");
    CHECK(sw.str().find("# slope=") != std::string::npos);
    CHECK(json::parse(sweep_json(fit)).is_object());
    CHECK(json::parse(trajectory_json(t)).is_object());
  }

  TEST_CASE("check registry") {
    CHECK(check_suite_names().size() == 11);
    CHECK_THROWS_AS(run_checks("nonsense"), InvalidArgument);
    const auto results = run_checks("symmetry");
    CHECK_FALSE(results.empty());
    for (const auto& r : results) CHECK(r.suite == "symmetry");
  }
}
