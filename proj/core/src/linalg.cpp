#include "oscgauss/linalg.hpp"

#include "oscgauss/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace oscgauss {

double ComplexMatrix::norm_inf() const {
  double best = 0.0;
  for (int i = 0; i < rows_; ++i) {
    Real row(0);
    for (int j = 0; j < cols_; ++j) row += abs((*this)(i, j));
    best = std::max(best, row.to_double());
  }
  return best;
}

FullPivLu::FullPivLu(ComplexMatrix a) : n_(a.rows()), lu_(std::move(a)), norm_inf_(lu_.norm_inf()) {
  if (lu_.rows() != lu_.cols()) throw InvalidArgument("FullPivLu: matrix must be square");
  row_perm_.resize(static_cast<std::size_t>(n_));
  col_perm_.resize(static_cast<std::size_t>(n_));
  std::iota(row_perm_.begin(), row_perm_.end(), 0);
  std::iota(col_perm_.begin(), col_perm_.end(), 0);

  for (int k = 0; k < n_; ++k) {
    int pr = k;
    int pc = k;
    Real best = norm(lu_(k, k));
    for (int i = k; i < n_; ++i) {
      for (int j = k; j < n_; ++j) {
        Real v = norm(lu_(i, j));
        if (v > best) {
          best = std::move(v);
          pr = i;
          pc = j;
        }
      }
    }
    if (best.is_zero()) {
      singular_ = true;
      return;
    }
    if (pr != k) {
      for (int j = 0; j < n_; ++j) std::swap(lu_(k, j), lu_(pr, j));
      std::swap(row_perm_[static_cast<std::size_t>(k)], row_perm_[static_cast<std::size_t>(pr)]);
    }
    if (pc != k) {
      for (int i = 0; i < n_; ++i) std::swap(lu_(i, k), lu_(i, pc));
      std::swap(col_perm_[static_cast<std::size_t>(k)], col_perm_[static_cast<std::size_t>(pc)]);
    }
    const Complex pivot_inv = Complex(1) / lu_(k, k);
    for (int i = k + 1; i < n_; ++i) {
      if (lu_(i, k).is_zero()) continue;
      const Complex factor = lu_(i, k) * pivot_inv;
      lu_(i, k) = factor;
      for (int j = k + 1; j < n_; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

std::vector<Complex> FullPivLu::solve(std::span<const Complex> rhs) const {
  if (singular_) throw NumericalFailure("FullPivLu::solve on a singular matrix");
  if (static_cast<int>(rhs.size()) != n_) throw InvalidArgument("FullPivLu::solve: size mismatch");
  std::vector<Complex> y(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    Complex s = rhs[static_cast<std::size_t>(row_perm_[static_cast<std::size_t>(i)])];
    for (int j = 0; j < i; ++j) s -= lu_(i, j) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = std::move(s);
  }
  for (int i = n_ - 1; i >= 0; --i) {
    Complex s = y[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_; ++j) s -= lu_(i, j) * y[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s / lu_(i, i);
  }
  std::vector<Complex> x(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    x[static_cast<std::size_t>(col_perm_[static_cast<std::size_t>(i)])] = std::move(y[static_cast<std::size_t>(i)]);
  }
  return x;
}

ComplexMatrix FullPivLu::inverse() const {
  ComplexMatrix inv(n_, n_);
  std::vector<Complex> e(static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) e[static_cast<std::size_t>(i)] = Complex(i == j ? 1 : 0);
    const auto col = solve(e);
    for (int i = 0; i < n_; ++i) inv(i, j) = col[static_cast<std::size_t>(i)];
  }
  return inv;
}

double FullPivLu::log10_condition() const {
  if (singular_) return std::numeric_limits<double>::infinity();
  const ComplexMatrix inv = inverse();
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_; ++i) {
    Real row(0);
    for (int j = 0; j < n_; ++j) row += abs(inv(i, j));
    best = std::max(best, log10_abs(row));
  }
  return best + std::log10(norm_inf_);
}

}  // namespace oscgauss
