#ifndef MALCEV_EXTENSIONS_HPP
#define MALCEV_EXTENSIONS_HPP

#include <string>
#include <vector>

#include "malcev/algebra.hpp"

namespace malcev {

struct DerivationCheck {
  bool pass = false;
  int i = -1, j = -1;  // failing basis pair
  Vec defect;          // D[bi,bj] - [D bi, bj] - [bi, D bj]
};

/// Leibniz rule on all basis pairs.
DerivationCheck is_derivation(const MalcevAlgebra& m, const Matrix& d);

struct ExtensionSpec {
  MalcevAlgebra n_tilde;
  Subspace ideal;          // ideal of n_tilde containing J(n_tilde)
  MalcevAlgebra lie_part;  // must pass Jacobi
  std::vector<Matrix> action;  // one matrix on lie_part per n_tilde basis vector
};

/// Product on n_tilde + lie_part:
///   (a,l) (b,r) = ([a,b], l^b - r^a + [l,r]),  l^b = action(b) l.
/// Re-verifies the spec invariants, builds the algebra, then verifies the
/// result is Malcev and that the lie_part copy is an ideal inside the Lie
/// center.
MalcevAlgebra decomposable_extension(const ExtensionSpec& spec);

/// Free anticommutative nilpotent algebra on `rank` generators, truncated at
/// the given class (2..4). Basis is labeled by bracket monomials; the
/// generators are marked.
MalcevAlgebra free_anticommutative_nilpotent(int rank, int cls);

/// Free nilpotent Malcev algebra of class <= 4. For class <= 3 the defining
/// identity is vacuous and this is the free anticommutative algebra; for
/// class 4 the identity and its linearizations are imposed on generator
/// tuples and the quotient re-verified.
MalcevAlgebra free_nilpotent_malcev(int rank, int cls);

struct SeparationCertificate {
  MalcevAlgebra p;   // the separating algebra, in NL_{k+1} but not NL_k
  MalcevAlgebra p0;  // nilpotent class-4 part, J(P0^2,P0,P0) a central line
  int free_dim = 0;  // dim of the free class-4 Malcev oracle
  int w_dim = 0;     // dim of span J(M^2, b_i, b_j) in the oracle
  Vec z;             // chosen central line, in p0 coordinates
  std::string z_description;
  bool identities_pass = false;
  NlkResult nlk2;  // expected fail
  NlkResult nlk3;  // expected pass
  bool p0_mod_z_passes_nl2 = false;
  bool p1_in_lie_center = false;
  bool parts_span = false;  // image of P0 plus image of P1 spans P
};

/// Builds the NL_3 \ NL_2 example: a class-4 free-Malcev quotient P0 with a
/// distinguished central line z, glued to the 4-dim solvable Lie algebra
/// {t,a,b,c} along c = z. Throws OracleFailed when the free class-4 oracle
/// has J(M^2, M, M) = 0, in which case the recipe cannot produce the example.
SeparationCertificate separation_example(int k = 2);

}  // namespace malcev

#endif
