#ifndef MALCEV_DECOMPOSITION_HPP
#define MALCEV_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/upoly.hpp"

namespace malcev {

struct ElementSplit {
  Matrix semisimple_op;  // of R_g
  Matrix nilpotent_op;
  bool splittable = false;  // semisimple part realized as R_t for some t
  Vec inducing_t;           // such a t when splittable
};

/// Additive Jordan split of the right-multiplication operator R_g, plus
/// whether some t in the algebra induces the semisimple part (so g = t + n
/// with both summands in the algebra).
ElementSplit jordan_split_element(const MalcevAlgebra& m, const Vec& g);

struct SplitStep {
  MalcevAlgebra extended;  // dim+1; the input embeds as the first dim coords
  std::string toral_label;
  Matrix semisimple_op;  // of R_x on the input algebra
  Matrix nilpotent_op;
  UPoly p;  // semisimple_op = p(R_x), p(0) = 0
};

/// Adjoins a toral element t acting on the input by the semisimple part of
/// R_x. Construct-and-verify: the extension must pass the Malcev checks
/// (SplitNotMalcev otherwise). AlreadySplit when an existing element induces
/// the semisimple part.
SplitStep split_step(const MalcevAlgebra& m, const Vec& x);

using Weight = std::vector<Rat>;  // one value per toral basis vector

struct WeightSpace {
  Weight weight;
  Subspace space;  // in ambient coordinates
};

struct ContainmentCheck {
  Weight alpha, beta;
  bool applicable = false;  // bracket stayed inside the target
  bool pass = false;
  std::string rule;
};

struct WeightDecomposition {
  std::vector<Vec> toral;  // normalized basis of the toral span
  Subspace target;
  std::vector<WeightSpace> spaces;  // weights in lexicographic order
  std::vector<ContainmentCheck> containments;

  const Subspace* space_of(const Weight& w) const;
};

/// Simultaneous eigenspace decomposition of the target under the right
/// multiplications by the (span of the) toral vectors, with the bracket
/// containment checks between weight spaces.
WeightDecomposition weight_spaces(const MalcevAlgebra& m, const std::vector<Vec>& toral,
                                  const Subspace& target);

struct LeviData {
  Subspace s;  // user-asserted semisimple Levi factor
  Subspace t;  // toral
  Subspace n;  // nilpotent ideal
};

/// Verifies: pairwise trivial intersections, s + t + n = algebra, [s,t] = 0,
/// n an ideal, n nilpotent. Throws BadLeviData naming the failing condition.
LeviData make_levi_data(const MalcevAlgebra& m, const Subspace& s, const Subspace& t,
                        const Subspace& n);

struct NamedVerdict {
  std::string name;
  std::string anchor;
  bool applicable = true;
  bool pass = false;
};

struct Theorem1Parts {
  Subspace n0, n01, n00, m11, m1;
  std::optional<int> nl_k;  // smallest k with J(M^k, M, M) = 0, if any
  std::vector<NamedVerdict> checks;

  bool all_applicable_pass() const;
};

/// The weight-zero piece, its module splitting, the distinguished ideal M_1,
/// and the recorded verdicts for the structure statements they satisfy.
Theorem1Parts theorem1_parts(const MalcevAlgebra& m, const LeviData& levi);

}  // namespace malcev

#endif
