#pragma once

#include "oscgauss/complex.hpp"

#include <span>
#include <vector>

namespace oscgauss {

/// Dense row-major complex matrix for the small systems of this library.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Complex& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Complex& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  /// Max absolute row sum, as a double.
  double norm_inf() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// LU factorization with complete (row and column) pivoting, PAQ = LU.
class FullPivLu {
 public:
  explicit FullPivLu(ComplexMatrix a);

  int size() const noexcept { return n_; }
  /// True when an exactly zero pivot was met.
  bool singular() const noexcept { return singular_; }

  std::vector<Complex> solve(std::span<const Complex> rhs) const;
  ComplexMatrix inverse() const;

  /// log10 of ||A||_inf ||A^{-1}||_inf; +inf when singular.
  double log10_condition() const;

 private:
  int n_;
  ComplexMatrix lu_;
  std::vector<int> row_perm_;
  std::vector<int> col_perm_;
  double norm_inf_;
  bool singular_ = false;
};

}  // namespace oscgauss
