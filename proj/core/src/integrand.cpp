#include "oscgauss/integrand.hpp"

#include "oscgauss/errors.hpp"

#include <sstream>
#include <string>

namespace oscgauss {

Integrand Integrand::monomial(int k) {
  if (k < 0) throw InvalidArgument("monomial power must be nonnegative");
  Integrand f(Kind::Monomial);
  f.power_ = k;
  return f;
}

Integrand Integrand::runge(double a) {
  if (!(a > 0.0)) throw InvalidArgument("runge parameter must be positive");
  Integrand f(Kind::Runge);
  f.parameter_ = a;
  return f;
}

Integrand Integrand::parse(std::string_view text) {
  auto number_after = [&](std::size_t pos) -> std::string { return std::string(text.substr(pos)); };
  if (text == "one" || text == "1") return one();
  if (text == "sin") return sin();
  if (text == "cos") return cos();
  if (text == "exp") return exp();
  try {
    if (text.starts_with("monomial:")) return monomial(std::stoi(number_after(9)));
    if (text.starts_with("x^")) return monomial(std::stoi(number_after(2)));
    if (text.starts_with("runge:")) return runge(std::stod(number_after(6)));
  } catch (const std::logic_error&) {
    // fall through to the error below
  }
  throw InvalidArgument("unknown integrand '" + std::string(text) +
                        "' (expected one, sin, cos, exp, monomial:K, runge:A)");
}

std::string Integrand::name() const {
  switch (kind_) {
    case Kind::One: return "one";
    case Kind::Monomial: return "monomial:" + std::to_string(power_);
    case Kind::Sin: return "sin";
    case Kind::Cos: return "cos";
    case Kind::Exp: return "exp";
    case Kind::Runge: {
      std::ostringstream os;
      os << "runge:" << parameter_;
      return os.str();
    }
  }
  return "?";
}

Complex Integrand::operator()(const Complex& z) const {
  switch (kind_) {
    case Kind::One: return Complex(1);
    case Kind::Monomial: return pow(z, power_);
    case Kind::Sin: return oscgauss::sin(z);
    case Kind::Cos: return oscgauss::cos(z);
    case Kind::Exp: return oscgauss::exp(z);
    case Kind::Runge: {
      const Real a(parameter_);
      const Complex d = z * z + a * a;
      if (d.is_zero()) throw InvalidArgument("runge integrand evaluated at its pole");
      return Complex(1) / d;
    }
  }
  return Complex(0);
}

Real Integrand::operator()(const Real& x) const {
  switch (kind_) {
    case Kind::One: return Real(1);
    case Kind::Monomial: return pow(x, power_);
    case Kind::Sin: return oscgauss::sin(x);
    case Kind::Cos: return oscgauss::cos(x);
    case Kind::Exp: return oscgauss::exp(x);
    case Kind::Runge: {
      const Real a(parameter_);
      return Real(1) / (x * x + a * a);
    }
  }
  return Real(0);
}

}  // namespace oscgauss
