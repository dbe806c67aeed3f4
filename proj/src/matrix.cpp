#include "lbsum/matrix.hpp"

#include <string>

namespace lbsum {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> Matrix::mul(const std::vector<Rational>& v) const {
  if (v.size() != cols_)
    throw Error(Errc::shape_mismatch, "matrix-vector shape mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 1; i <= rows_; ++i) {
    Rational acc;
    for (std::size_t j = 1; j <= cols_; ++j) acc += at(i, j) * v[j - 1];
    out[i - 1] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(Errc::shape_mismatch, "matrix-matrix shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 1; i <= a.rows_; ++i)
    for (std::size_t k = 1; k <= a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 1; j <= b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

std::vector<Rational> upper_tri_solve(const Matrix& m, const std::vector<Rational>& b) {
  const std::size_t n = m.rows();
  if (m.cols() != n)
    throw Error(Errc::shape_mismatch, "upper_tri_solve requires a square matrix");
  if (b.size() != n)
    throw Error(Errc::shape_mismatch, "right-hand side length " + std::to_string(b.size()) +
                                          " does not match " + std::to_string(n) + " rows");
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (!m.at(i, j).is_zero())
        throw Error(Errc::shape_mismatch, "matrix is not upper triangular");
  for (std::size_t i = 1; i <= n; ++i)
    if (m.at(i, i).is_zero())
      throw Error(Errc::singular_diagonal, "zero diagonal entry at row " + std::to_string(i));

  std::vector<Rational> v(n);
  for (std::size_t i = n; i >= 1; --i) {
    Rational acc = b[i - 1];
    for (std::size_t j = i + 1; j <= n; ++j) acc -= m.at(i, j) * v[j - 1];
    v[i - 1] = acc / m.at(i, i);
  }
  return v;
}

} // namespace lbsum
