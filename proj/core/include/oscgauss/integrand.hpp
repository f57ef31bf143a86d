#pragma once

#include "oscgauss/complex.hpp"

#include <string>
#include <string_view>

namespace oscgauss {

/// Registry of amplitude functions f in \int_{-1}^{1} f(x) e^{i omega x} dx.
/// Every member is analytic near [-1, 1] and real on the real axis.
class Integrand {
 public:
  enum class Kind { One, Monomial, Sin, Cos, Exp, Runge };

  static Integrand one() { return Integrand(Kind::One); }
  static Integrand monomial(int k);
  static Integrand sin() { return Integrand(Kind::Sin); }
  static Integrand cos() { return Integrand(Kind::Cos); }
  static Integrand exp() { return Integrand(Kind::Exp); }
  /// 1 / (x^2 + a^2); poles at +-i a.
  static Integrand runge(double a);

  /// Accepts one, sin, cos, exp, monomial:K (or x^K), runge:A.
  static Integrand parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  int power() const noexcept { return power_; }
  double parameter() const noexcept { return parameter_; }
  std::string name() const;

  /// True when f is entire, so the steepest-descent deformation of the
  /// integration path picks up no residues.
  bool entire() const noexcept { return kind_ != Kind::Runge; }

  /// Throws InvalidArgument at a pole.
  Complex operator()(const Complex& z) const;
  Real operator()(const Real& x) const;

 private:
  explicit Integrand(Kind kind) : kind_(kind) {}

  Kind kind_;
  int power_ = 0;
  double parameter_ = 0.0;
};

}  // namespace oscgauss
