#include "malcev/matrix.hpp"

#include "malcev/errors.hpp"

namespace malcev {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw Error(Errc::dimension_mismatch, "row length does not match column count");
    for (int c = 0; c < cols; ++c) m.at(static_cast<int>(r), c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Errc::dimension_mismatch, "matrix addition shape mismatch");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(Errc::dimension_mismatch, "matrix subtraction shape mismatch");
  Matrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_)
    throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
  Matrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        m.at(i, j) += x * o.at(k, j);
      }
    }
  return m;
}

Matrix Matrix::operator*(const Rat& c) const {
  Matrix m = *this;
  for (Rat& x : m.a_) x *= c;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(Errc::dimension_mismatch, "matrix-vector shape mismatch");
  Vec r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Rat Matrix::trace() const {
  Rat t(0);
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

}  // namespace malcev
