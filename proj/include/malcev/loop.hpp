#ifndef MALCEV_LOOP_HPP
#define MALCEV_LOOP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/mpoly.hpp"

namespace malcev {

/// Vector of polynomials: the coordinates of a loop word in the coordinates
/// of its symbolic arguments.
using PolyVec = std::vector<MPoly>;

/// Formal loop on a nilpotent Malcev algebra of class <= 3, with product
///   x y = x + y + 1/2 [x,y] - 1/12 [[x,y],x] + 1/12 [[x,y],y].
/// Identities are decided on symbolic points, exactly.
class FormalLoop {
 public:
  explicit FormalLoop(MalcevAlgebra algebra);

  const MalcevAlgebra& algebra() const { return alg_; }
  int dim() const { return alg_.dim(); }
  int nil_class() const { return cls_; }

 private:
  MalcevAlgebra alg_;
  int cls_;
};

/// Fully generic point: coordinate r of point p is the variable p*dim + r in
/// an ambient space of total_points*dim variables.
PolyVec symbolic_point(const FormalLoop& l, int point_index, int total_points);

/// Variable names "x.e1", "y.e2", ... for rendering witnesses.
std::vector<std::string> symbolic_var_names(const FormalLoop& l, int total_points);

Vec loop_product(const FormalLoop& l, const Vec& x, const Vec& y);
PolyVec loop_product(const FormalLoop& l, const PolyVec& x, const PolyVec& y,
                     Exec ex = kDefaultExec);

Vec loop_inverse(const FormalLoop& l, const Vec& x);
PolyVec loop_inverse(const FormalLoop& l, const PolyVec& x);

/// Solve a z = b (left) / z a = b (right) by degree-graded back-substitution;
/// the solution is re-verified by resubstitution.
Vec left_divide(const FormalLoop& l, const Vec& a, const Vec& b);
PolyVec left_divide(const FormalLoop& l, const PolyVec& a, const PolyVec& b,
                    Exec ex = kDefaultExec);
Vec right_divide(const FormalLoop& l, const Vec& b, const Vec& a);
PolyVec right_divide(const FormalLoop& l, const PolyVec& b, const PolyVec& a,
                     Exec ex = kDefaultExec);

/// Left-normed ((x^-1 y^-1) x) y.
Vec loop_commutator(const FormalLoop& l, const Vec& x, const Vec& y);
PolyVec loop_commutator(const FormalLoop& l, const PolyVec& x, const PolyVec& y,
                        Exec ex = kDefaultExec);

/// ((x y) z) (x (y z))^-1; equals J(x,y,z)/6 exactly at class <= 3.
Vec loop_associator(const FormalLoop& l, const Vec& x, const Vec& y, const Vec& z);
PolyVec loop_associator(const FormalLoop& l, const PolyVec& x, const PolyVec& y, const PolyVec& z,
                        Exec ex = kDefaultExec);

bool polyvec_zero(const PolyVec& v);

/// Monomial -> coefficient-vector map across coordinates; the vectors are the
/// ambient-space directions a symbolic word can take.
std::map<MPoly::Exponents, Vec> coefficient_vectors(const PolyVec& v);

struct LoopCheck {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string witness;  // first offending coordinate polynomial, when failing
};

struct LoopIdentityReport {
  std::vector<LoopCheck> checks;
  const LoopCheck* find(const std::string& name) const;
  bool moufang_ok() const;
};

/// Symbolic verification on generic points: unit and inverses, divisions,
/// both Moufang forms, alternative laws, flexibility, the diassociativity
/// witness, full associativity (informational), the commutator and associator
/// leading-term statements, and the 100-point identity-transfer spot check.
LoopIdentityReport check_loop_identities(const FormalLoop& l, Exec ex = kDefaultExec);

/// {w : (w, x, y) = 0 as a polynomial identity}; the associator is linear in
/// w at class <= 3, so this is an exact kernel computation.
Subspace nucleus(const FormalLoop& l, Exec ex = kDefaultExec);

struct GkResult {
  int k = 0;
  bool pass = false;
  std::string parenthesization;  // "left-normed"
  std::string witness;           // nonzero coordinate polynomial when failing
};

/// Associator of a length-k left-normed symbolic commutator with two further
/// symbolic points; identical vanishing decides membership.
GkResult gk_test(const FormalLoop& l, int k, Exec ex = kDefaultExec);

/// Span of all coefficient vectors of length-k symbolic loop commutators
/// (k in {2,3}; both bracketing shapes at k=3); verified equal to M^k.
Subspace commutator_subloop_span(const FormalLoop& l, int k, Exec ex = kDefaultExec);

/// Loop pairs (q, g) with the product (r1,g1)(r2,g2) = (r1 r2, g1^{r2} g2),
/// where the action of r is the matrix I + sum_i r_i E_i on g. Construction
/// verifies symbolically: the action preserves the g product and is
/// invertible, it is trivial on associator values of q, the pair product
/// satisfies the Moufang identity, and {identity} x G lies in the nucleus.
class LoopExtension {
 public:
  LoopExtension(FormalLoop q, FormalLoop g, std::vector<Matrix> action_gens,
                Exec ex = kDefaultExec);

  const FormalLoop& q() const { return q_; }
  const FormalLoop& g() const { return g_; }

  std::pair<Vec, Vec> product(const std::pair<Vec, Vec>& p1, const std::pair<Vec, Vec>& p2) const;
  std::pair<Vec, Vec> inverse(const std::pair<Vec, Vec>& p) const;

 private:
  FormalLoop q_, g_;
  std::vector<Matrix> action_gens_;
};

}  // namespace malcev

#endif
