#pragma once

#include <stdexcept>
#include <string>

namespace oscgauss {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested object does not exist at this frequency: the Hankel moment
/// matrix is singular, or singular for a frequency within the input
/// resolution.
class NonExistent : public Error {
 public:
  NonExistent(const std::string& what, int degree, double smallest_singular_proxy,
              double breakdown_distance)
      : Error(what),
        degree_(degree),
        smallest_singular_proxy_(smallest_singular_proxy),
        breakdown_distance_(breakdown_distance) {}

  int degree() const noexcept { return degree_; }
  /// 1 / ||H^{-1}||_inf of the last attempted solve (0 if exactly singular).
  double smallest_singular_proxy() const noexcept { return smallest_singular_proxy_; }
  /// Estimated distance in omega to the nearest singular Hankel matrix.
  double breakdown_distance() const noexcept { return breakdown_distance_; }

 private:
  int degree_;
  double smallest_singular_proxy_;
  double breakdown_distance_;
};

/// A numerical procedure did not reach its tolerance.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace oscgauss
