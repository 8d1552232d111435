#ifndef MALCEV_RATIONAL_HPP
#define MALCEV_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace malcev {

/// Exact rational scalar. GMP keeps the invariants (positive denominator,
/// reduced fraction) as long as values are canonicalized on construction;
/// every constructor in this project goes through rat() or rat_from_string.
using Rat = mpq_class;

/// Dense coordinate vector over Q.
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q" with optional leading sign. Rejects everything else
/// (floats in particular), throws Error(bad_rational).
Rat rat_from_string(const std::string& s);

/// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_to_string(const Rat& q);

bool is_zero(const Vec& v);
Vec zero_vec(int dim);
Vec unit_vec(int dim, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Rat& c);
Vec negate(const Vec& a);

/// Renders a vector as a linear combination over the given labels, e.g.
/// "a - 2/3 c"; "0" for the zero vector.
std::string vec_to_string(const Vec& v, const std::vector<std::string>& labels);

}  // namespace malcev

#endif
