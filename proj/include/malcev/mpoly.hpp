#ifndef MALCEV_MPOLY_HPP
#define MALCEV_MPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "malcev/rational.hpp"

namespace malcev {

/// Sparse multivariate polynomial over Q. Terms are kept in a map keyed by
/// the dense exponent vector (lexicographic order), so the representation is
/// canonical and is_zero is a decision procedure. Total degree is capped at
/// 64; overflowing it is an error, not silent truncation.
class MPoly {
 public:
  using Exponents = std::vector<uint16_t>;

  static constexpr int kMaxTotalDegree = 64;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c);
  static MPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for zero
  const std::map<Exponents, Rat>& terms() const { return terms_; }

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator*(const Rat& c) const;
  bool operator==(const MPoly& o) const = default;

  void add_term(const Exponents& e, const Rat& c);

  /// Replaces every variable i by replacements[i].
  MPoly substitute(const std::vector<MPoly>& replacements) const;

  Rat eval(const Vec& point) const;

  /// Coefficient extraction: degree of the term in the variable block
  /// [first, first+count).
  static int block_degree(const Exponents& e, int first, int count);

  std::string to_string(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Exponents, Rat> terms_;
  void check_vars(const MPoly& o) const;
};

}  // namespace malcev

#endif
