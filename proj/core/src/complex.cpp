#include "oscgauss/complex.hpp"

#include <cmath>

namespace oscgauss {

Complex& Complex::operator+=(const Complex& z) {
  *this = *this + z;
  return *this;
}
Complex& Complex::operator-=(const Complex& z) {
  *this = *this - z;
  return *this;
}
Complex& Complex::operator*=(const Complex& z) {
  *this = *this * z;
  return *this;
}
Complex& Complex::operator/=(const Complex& z) {
  *this = *this / z;
  return *this;
}

Complex operator*(const Complex& a, const Complex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Complex operator/(const Complex& a, const Complex& b) {
  const Real d = b.re_ * b.re_ + b.im_ * b.im_;
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

Complex imag_unit() { return {Real(0), Real(1)}; }

Complex conj(const Complex& z) { return {z.real(), -z.imag()}; }

Real abs(const Complex& z) { return hypot(z.real(), z.imag()); }

Real norm(const Complex& z) { return z.real() * z.real() + z.imag() * z.imag(); }

Real arg(const Complex& z) { return atan2(z.imag(), z.real()); }

Complex expi(const Real& t) { return {cos(t), sin(t)}; }

Complex exp(const Complex& z) {
  const Real m = exp(z.real());
  return {m * cos(z.imag()), m * sin(z.imag())};
}

Complex sin(const Complex& z) {
  return {sin(z.real()) * cosh(z.imag()), cos(z.real()) * sinh(z.imag())};
}

Complex cos(const Complex& z) {
  return {cos(z.real()) * cosh(z.imag()), -(sin(z.real()) * sinh(z.imag()))};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex{};
  const Real r = abs(z);
  Real u = sqrt((r + abs(z.real())) / 2);
  Real v = z.imag() / (2 * u);
  if (z.real().sign() >= 0) return {u, v};
  if (z.imag().sign() < 0) return {abs(v), -u};
  return {abs(v), u};
}

Complex mul_i(const Complex& z) { return {-z.imag(), z.real()}; }

Complex pow(const Complex& z, long n) {
  if (n < 0) return Complex(1) / pow(z, -n);
  Complex result(1);
  Complex base = z;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

double abs_d(const Complex& z) { return abs(z).to_double(); }

double log10_abs(const Complex& z) { return log10_abs(abs(z)); }

std::string to_string(const Complex& z, int digits) {
  return "(" + z.real().to_string(digits) + ", " + z.imag().to_string(digits) + ")";
}

}  // namespace oscgauss
