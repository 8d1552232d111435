#ifndef MALCEV_UPOLY_HPP
#define MALCEV_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "malcev/linalg.hpp"
#include "malcev/matrix.hpp"

namespace malcev {

/// Univariate polynomial over Q, coefficients by ascending degree, no
/// trailing zeros. Supports what the eigen/Jordan machinery needs.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Vec coeffs);
  static UPoly constant(const Rat& c);
  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rat& coeff(int i) const;
  const Vec& coeffs() const { return c_; }
  Rat leading() const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rat& c) const;
  bool operator==(const UPoly& o) const = default;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

  UPoly derivative() const;
  UPoly monic() const;
  Rat eval(const Rat& x) const;
  Matrix eval(const Matrix& a) const;

  /// "x^2 - 1/2 x + 3" style rendering in the given variable name.
  std::string to_string(const std::string& var = "x") const;

 private:
  Vec c_;
  void trim();
};

UPoly gcd(const UPoly& a, const UPoly& b);

/// det(x I - a) by the Faddeev-LeVerrier recurrence, exactly.
UPoly char_poly(const Matrix& a);

struct RootSplit {
  std::vector<std::pair<Rat, int>> roots;  // (value, multiplicity), ascending
  UPoly rootless;                          // factor with no rational roots
};

/// Peels off all rational linear factors. `rootless` is constant iff the
/// polynomial splits over Q.
RootSplit rational_roots(const UPoly& p);

struct EigenPair {
  Rat value;
  int multiplicity = 0;  // algebraic
  Subspace space;
};

struct EigenDecomposition {
  std::vector<EigenPair> pairs;  // ascending by eigenvalue
  bool diagonalizable = false;   // eigenspaces sum to the full space
};

/// All rational eigenvalues with eigenspaces; throws NonRationalSpectrumError
/// if the characteristic polynomial does not split over Q.
EigenDecomposition eigen_decompose(const Matrix& a);

struct JordanSplit {
  Matrix semisimple;
  Matrix nilpotent;
  UPoly p;  // semisimple = p(a), p(0) = 0
};

/// Additive Jordan-Chevalley decomposition a = s + n with s = p(a), p(0) = 0,
/// s diagonalizable, n nilpotent. Requires a rational spectrum.
JordanSplit jordan_additive_split(const Matrix& a);

}  // namespace malcev

#endif
