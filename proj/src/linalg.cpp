#include "malcev/linalg.hpp"

#include <algorithm>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

// Gauss-Jordan over Q. Row elimination at each pivot is independent per row,
// so the parallel body is bitwise equivalent to the serial one.
Rref rref_impl(const Matrix& input, bool parallel) {
  Matrix m = input;
  const int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int c = 0; c < cols; ++c) std::swap(m.at(row, c), m.at(pivot, c));
    if (m.at(row, col) != 1) {
      Rat inv = 1 / m.at(row, col);
      for (int c = col; c < cols; ++c) m.at(row, c) *= inv;
    }
    if (parallel) {
#pragma omp parallel for schedule(static)
      for (int r = 0; r < rows; ++r) {
        if (r == row || m.at(r, col) == 0) continue;
        Rat f = m.at(r, col);
        for (int c = col; c < cols; ++c)
          if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
      }
    } else {
      for (int r = 0; r < rows; ++r) {
        if (r == row || m.at(r, col) == 0) continue;
        Rat f = m.at(r, col);
        for (int c = col; c < cols; ++c)
          if (m.at(row, c) != 0) m.at(r, c) -= f * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return Rref{std::move(m), row, std::move(pivots)};
}

}  // namespace

Rref rref(const Matrix& m, Exec ex) { return rref_impl(m, ex == Exec::parallel); }

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::full(int ambient) {
  std::vector<Vec> gens;
  for (int i = 0; i < ambient; ++i) gens.push_back(unit_vec(ambient, i));
  return span(ambient, gens);
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& generators) {
  for (const Vec& g : generators)
    if (static_cast<int>(g.size()) != ambient)
      throw Error(Errc::ambient_mismatch, "generator length does not match ambient dimension");
  Subspace s;
  s.ambient_ = ambient;
  if (generators.empty()) return s;
  Rref r = rref(Matrix::from_rows(generators, ambient), Exec::serial);
  for (int i = 0; i < r.rank; ++i) s.rows_.push_back(r.reduced.row(i));
  s.pivots_ = r.pivots;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error(Errc::ambient_mismatch, "vector length does not match ambient dimension");
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = r[pivots_[i]];
    if (c == 0) continue;
    Rat f = c;
    for (int j = pivots_[i]; j < ambient_; ++j)
      if (rows_[i][j] != 0) r[j] -= f * rows_[i][j];
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return malcev::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(Errc::ambient_mismatch, "subspaces live in different ambient spaces");
  for (const Vec& row : other.rows_)
    if (!contains(row)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(Errc::ambient_mismatch, "subspaces live in different ambient spaces");
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return span(ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw Error(Errc::ambient_mismatch, "subspaces live in different ambient spaces");
  if (rows_.empty() || other.rows_.empty()) return zero(ambient_);
  // Solve sum_i a_i u_i = sum_j b_j v_j: kernel of [U^T | -V^T].
  const int nu = dim(), nv = other.dim();
  Matrix m(ambient_, nu + nv);
  for (int c = 0; c < nu; ++c)
    for (int r = 0; r < ambient_; ++r) m.at(r, c) = rows_[c][r];
  for (int c = 0; c < nv; ++c)
    for (int r = 0; r < ambient_; ++r) m.at(r, nu + c) = -other.rows_[c][r];
  Subspace k = kernel(m);
  std::vector<Vec> gens;
  for (const Vec& coeff : k.basis()) {
    Vec v = zero_vec(ambient_);
    for (int i = 0; i < nu; ++i)
      if (coeff[i] != 0) v = add(v, scale(rows_[i], coeff[i]));
    gens.push_back(std::move(v));
  }
  return span(ambient_, gens);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw Error(Errc::ambient_mismatch, "vector length does not match ambient dimension");
  Vec coords(rows_.size(), Rat(0));
  Vec r = v;
  for (size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = r[pivots_[i]];
    if (c == 0) continue;
    coords[i] = c;
    for (int j = pivots_[i]; j < ambient_; ++j)
      if (rows_[i][j] != 0) r[j] -= c * rows_[i][j];
  }
  if (!malcev::is_zero(r)) return std::nullopt;
  return coords;
}

std::vector<int> Subspace::complement_coords() const {
  std::vector<int> out;
  size_t p = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (p < pivots_.size() && pivots_[p] == c) {
      ++p;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

Subspace kernel(const Matrix& m) {
  Rref r = rref(m, Exec::serial);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> gens;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(cols);
    v[f] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(cols, gens);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw Error(Errc::dimension_mismatch, "right-hand side length does not match row count");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  Rref red = rref(aug, Exec::serial);
  Vec x = zero_vec(a.cols());
  for (int i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == a.cols()) return std::nullopt;  // inconsistent
    x[red.pivots[i]] = red.reduced.at(i, a.cols());
  }
  return x;
}

}  // namespace malcev
