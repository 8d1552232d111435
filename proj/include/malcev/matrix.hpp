#ifndef MALCEV_MATRIX_HPP
#define MALCEV_MATRIX_HPP

#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

/// Dense matrix over Q. Dimensions are fixed at construction.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec col(int c) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rat& c) const;
  bool operator==(const Matrix& o) const = default;

  /// m * v (v as a column).
  Vec apply(const Vec& v) const;

  Matrix transpose() const;
  bool is_zero() const;
  Rat trace() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

}  // namespace malcev

#endif
