#pragma once

#include "oscgauss/real.hpp"

#include <concepts>
#include <string>
#include <type_traits>
#include <utility>

namespace oscgauss {

/// Complex number with Real parts. Arithmetic is performed at the working
/// precision of the calling thread.
class Complex {
 public:
  Complex() = default;
  Complex(Real re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  template <class T>
    requires std::is_arithmetic_v<T>
  Complex(T re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  template <class T, class U>
    requires(std::is_arithmetic_v<T> && std::is_arithmetic_v<U>)
  Complex(T re, U im) : re_(re), im_(im) {}

  const Real& real() const noexcept { return re_; }
  const Real& imag() const noexcept { return im_; }
  Real& real() noexcept { return re_; }
  Real& imag() noexcept { return im_; }

  Complex rounded(long bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const noexcept { return re_.is_finite() && im_.is_finite(); }

  Complex& operator+=(const Complex& z);
  Complex& operator-=(const Complex& z);
  Complex& operator*=(const Complex& z);
  Complex& operator/=(const Complex& z);

  friend Complex operator-(const Complex& z) { return {-z.re_, -z.im_}; }
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);

  friend Complex operator*(const Complex& a, const Real& s) { return {a.re_ * s, a.im_ * s}; }
  friend Complex operator*(const Real& s, const Complex& a) { return {a.re_ * s, a.im_ * s}; }
  friend Complex operator/(const Complex& a, const Real& s) { return {a.re_ / s, a.im_ / s}; }
  friend Complex operator+(const Complex& a, const Real& s) { return {a.re_ + s, a.im_}; }
  friend Complex operator+(const Real& s, const Complex& a) { return {a.re_ + s, a.im_}; }
  friend Complex operator-(const Complex& a, const Real& s) { return {a.re_ - s, a.im_}; }
  friend Complex operator-(const Real& s, const Complex& a) { return {s - a.re_, -a.im_}; }

  template <class T>
    requires std::is_arithmetic_v<T>
  friend Complex operator*(const Complex& a, T s) { return a * Real(s); }
  template <class T>
    requires std::is_arithmetic_v<T>
  friend Complex operator*(T s, const Complex& a) { return a * Real(s); }
  template <class T>
    requires std::is_arithmetic_v<T>
  friend Complex operator/(const Complex& a, T s) { return a / Real(s); }
  template <class T>
    requires std::is_arithmetic_v<T>
  friend Complex operator+(const Complex& a, T s) { return a + Real(s); }
  template <class T>
    requires std::is_arithmetic_v<T>
  friend Complex operator-(const Complex& a, T s) { return a - Real(s); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

 private:
  Real re_;
  Real im_;
};

/// The imaginary unit at the working precision.
Complex imag_unit();

Complex conj(const Complex& z);
/// |z|
Real abs(const Complex& z);
/// |z|^2
Real norm(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
/// Principal square root.
Complex sqrt(const Complex& z);
/// e^{i t} for real t.
Complex expi(const Real& t);
Complex mul_i(const Complex& z);
Complex pow(const Complex& z, long n);

double abs_d(const Complex& z);
double log10_abs(const Complex& z);

std::string to_string(const Complex& z, int digits);

}  // namespace oscgauss
