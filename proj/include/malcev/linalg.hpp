#ifndef MALCEV_LINALG_HPP
#define MALCEV_LINALG_HPP

#include <optional>
#include <vector>

#include "malcev/exec.hpp"
#include "malcev/matrix.hpp"

namespace malcev {

struct Rref {
  Matrix reduced;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Unique reduced row-echelon form. The OpenMP body eliminates rows in
/// parallel per pivot; identical output to the serial reference.
Rref rref(const Matrix& m, Exec ex = kDefaultExec);

/// Exact basis of a subspace, stored as reduced row-echelon rows. The
/// representation is canonical: two subspaces are equal iff their stored
/// bases compare equal entry by entry.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const std::vector<Vec>& generators);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const = default;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Residue of v after eliminating all pivot coordinates; zero iff v is a
  /// member.
  Vec reduce(const Vec& v) const;

  /// Coordinates of v in the stored basis, if v lies in the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Ambient coordinates not used as pivots; the matching standard basis
  /// vectors form a complement.
  std::vector<int> complement_coords() const;

 private:
  int ambient_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

/// {v : m v = 0} in canonical form.
Subspace kernel(const Matrix& m);

/// One solution of a x = b if the system is consistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace malcev

#endif
