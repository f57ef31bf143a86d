#pragma once

#include "oscgauss/complex.hpp"

#include <string_view>

namespace test {

inline oscgauss::Complex lit(std::string_view re, std::string_view im = "0") {
  return {oscgauss::Real(re), oscgauss::Real(im)};
}

inline double gap(const oscgauss::Complex& a, const oscgauss::Complex& b) { return oscgauss::abs_d(a - b); }

}  // namespace test
