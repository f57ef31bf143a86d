#include "oscgauss/real.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace oscgauss {
namespace {

thread_local long tl_precision = kDefaultPrecisionBits;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

}  // namespace

long working_precision() noexcept { return tl_precision; }

int digits10_for_bits(long bits) noexcept {
  return static_cast<int>(std::floor(static_cast<double>(bits) * 0.30102999566398120));
}

PrecisionScope::PrecisionScope(long bits) : previous_(tl_precision) {
  if (bits < MPFR_PREC_MIN || bits > kMaxPrecisionBits) {
    throw std::invalid_argument("precision out of range: " + std::to_string(bits));
  }
  tl_precision = bits;
}

PrecisionScope::~PrecisionScope() { tl_precision = previous_; }

Real::Real() {
  mpfr_init2(value_, tl_precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(double x) {
  mpfr_init2(value_, tl_precision);
  mpfr_set_d(value_, x, kRnd);
}

Real::Real(int x) {
  mpfr_init2(value_, tl_precision);
  mpfr_set_si(value_, x, kRnd);
}

Real::Real(long x) {
  mpfr_init2(value_, tl_precision);
  mpfr_set_si(value_, x, kRnd);
}

Real::Real(unsigned long x) {
  mpfr_init2(value_, tl_precision);
  mpfr_set_ui(value_, x, kRnd);
}

Real::Real(std::string_view text) {
  mpfr_init2(value_, tl_precision);
  const std::string s(text);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(value_, s.c_str(), &end, 10, kRnd);
  if (s.empty() || end == s.c_str() || *end != '\0') {
    mpfr_clear(value_);
    throw std::invalid_argument("not a number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRnd);
}

Real::Real(Real&& other) noexcept {
  *value_ = *other.value_;
  other.value_->_mpfr_d = nullptr;
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  if (value_->_mpfr_d == nullptr) {
    mpfr_init2(value_, mpfr_get_prec(other.value_));
  } else if (mpfr_get_prec(value_) != mpfr_get_prec(other.value_)) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
  }
  mpfr_set(value_, other.value_, kRnd);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) {
    std::swap(*value_, *other.value_);
  }
  return *this;
}

Real::~Real() {
  if (value_->_mpfr_d != nullptr) mpfr_clear(value_);
}

long Real::precision() const noexcept { return mpfr_get_prec(value_); }

Real Real::rounded(long bits) const {
  PrecisionScope scope(bits);
  Real r;
  mpfr_set(r.value_, value_, kRnd);
  return r;
}

double Real::to_double() const noexcept { return mpfr_get_d(value_, kRnd); }

long Real::to_long() const noexcept { return mpfr_get_si(value_, kRnd); }

std::string Real::to_string(int digits) const {
  if (digits < 1) digits = 1;
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Re", digits - 1, value_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

Real& Real::operator+=(const Real& rhs) {
  *this = *this + rhs;
  return *this;
}
Real& Real::operator-=(const Real& rhs) {
  *this = *this - rhs;
  return *this;
}
Real& Real::operator*=(const Real& rhs) {
  *this = *this * rhs;
  return *this;
}
Real& Real::operator/=(const Real& rhs) {
  *this = *this / rhs;
  return *this;
}

Real operator-(const Real& x) {
  Real r;
  mpfr_neg(r.value_, x.value_, kRnd);
  return r;
}
Real operator+(const Real& a, const Real& b) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, kRnd);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, kRnd);
  return r;
}

namespace {

template <class Fn>
Real unary(const Real& x, Fn fn) {
  Real r;
  fn(r.get(), x.get(), kRnd);
  return r;
}

}  // namespace

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.get(), x.get());
  return r;
}

Real ceil(const Real& x) {
  Real r;
  mpfr_ceil(r.get(), x.get());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

Real pow(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.get(), x.get(), n, kRnd);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r;
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

Real min(const Real& a, const Real& b) { return b < a ? b : a; }
Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi() {
  Real r;
  mpfr_const_pi(r.get(), kRnd);
  return r;
}

Real factorial(unsigned long n) {
  Real r;
  mpfr_fac_ui(r.get(), n, kRnd);
  return r;
}

Real epsilon_for_bits(long bits) {
  Real one(1);
  return ldexp(one, -bits);
}

double log10_abs(const Real& x) {
  if (x.is_zero()) return -std::numeric_limits<double>::infinity();
  if (!x.is_finite()) return std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, x.get(), kRnd);
  return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

}  // namespace oscgauss
