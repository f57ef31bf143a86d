#pragma once

// Arbitrary-precision real numbers backed by MPFR.
//
// Every Real carries its own precision. Results of arithmetic are created at
// the calling thread's working precision, which is controlled with
// PrecisionScope. Copies keep the precision of their source.

#include <mpfr.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace oscgauss {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kMaxPrecisionBits = 1L << 16;
inline constexpr long kDefaultPrecisionBits = 256;

/// Precision in bits used for newly created values on this thread.
long working_precision() noexcept;

/// Decimal digits carried by a binary precision, floor(bits * log10(2)).
int digits10_for_bits(long bits) noexcept;

/// Sets the working precision for the lifetime of the scope (thread-local).
class PrecisionScope {
 public:
  explicit PrecisionScope(long bits);
  ~PrecisionScope();

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  long previous_;
};

class Real {
 public:
  Real();
  Real(double x);  // NOLINT(google-explicit-constructor)
  Real(int x);     // NOLINT(google-explicit-constructor)
  Real(long x);    // NOLINT(google-explicit-constructor)
  Real(unsigned long x);  // NOLINT(google-explicit-constructor)
  Real(unsigned x) : Real(static_cast<unsigned long>(x)) {}  // NOLINT
  Real(long long x) : Real(static_cast<long>(x)) {}          // NOLINT

  /// Parses a decimal string at the working precision. Throws
  /// std::invalid_argument on malformed input.
  explicit Real(std::string_view text);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  long precision() const noexcept;
  /// Copy of this value rounded to `bits` of precision.
  Real rounded(long bits) const;

  double to_double() const noexcept;
  long to_long() const noexcept;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits) const;

  bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
  int sign() const noexcept { return mpfr_sgn(value_); }

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);

  friend Real operator-(const Real& x);
  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }

 private:
  mpfr_t value_;
};

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real hypot(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real ceil(const Real& x);
Real ldexp(const Real& x, long e);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);

/// pi at the working precision.
Real pi();
/// n! at the working precision.
Real factorial(unsigned long n);
/// 2^-bits, the unit roundoff scale for a given precision.
Real epsilon_for_bits(long bits);

/// log10|x| evaluated without leaving double range; -inf for zero.
double log10_abs(const Real& x);

}  // namespace oscgauss
