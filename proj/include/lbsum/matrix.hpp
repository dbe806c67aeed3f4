#pragma once

#include <cstddef>
#include <vector>

#include "lbsum/rational.hpp"

namespace lbsum {

/// Dense row-major matrix of Rationals. Entries are addressed 1-based so the
/// code that fills structured matrices reads like the formulas it implements.
class Matrix {
public:
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[(i - 1) * cols_ + (j - 1)]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[(i - 1) * cols_ + (j - 1)]; }

  std::vector<Rational> mul(const std::vector<Rational>& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

/// Back-substitution for a square upper-triangular system M v = b.
/// Throws Errc::shape_mismatch (non-square, length disagreement, nonzero
/// entry below the diagonal) or Errc::singular_diagonal.
std::vector<Rational> upper_tri_solve(const Matrix& m, const std::vector<Rational>& b);

} // namespace lbsum
