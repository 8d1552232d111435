#ifndef MALCEV_ALGEBRA_HPP
#define MALCEV_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "malcev/exec.hpp"
#include "malcev/linalg.hpp"
#include "malcev/matrix.hpp"

namespace malcev {

/// Sparse coordinate vector, terms sorted by index. Internal representation
/// of structure-constant rows and Jacobian-table rows.
struct SparseVec {
  std::vector<std::pair<int, Rat>> terms;

  bool empty() const { return terms.empty(); }
  static SparseVec from_dense(const Vec& v);
  Vec to_dense(int dim) const;
  bool operator==(const SparseVec&) const = default;
};

/// Finite-dimensional anticommutative algebra over Q given by structure
/// constants. Anticommutativity is enforced by construction: brackets are
/// supplied for i < j only and completed. Instances are immutable.
class MalcevAlgebra {
 public:
  MalcevAlgebra() : dim_(0) {}

  /// brackets: entries (i, j, value) with i < j; omitted pairs are zero.
  MalcevAlgebra(std::vector<std::string> labels,
                const std::vector<std::tuple<int, int, Vec>>& brackets,
                std::vector<int> generators = {}, std::string name = "");

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const std::vector<int>& generators() const { return generators_; }
  int label_index(const std::string& label) const;  // -1 if absent

  const SparseVec& bracket_basis(int i, int j) const { return c_[flat(i, j)]; }

  /// Signed lookup of J(b_i, b_j, b_k); J is alternating, the table stores
  /// sorted triples. Returns nullptr for repeated indices (value 0).
  const SparseVec* jacobian_basis(int i, int j, int k, int& sign) const;

  Vec bracket(const Vec& x, const Vec& y) const;
  Vec jacobian(const Vec& x, const Vec& y, const Vec& z) const;

  /// R_x: v -> [v, x].
  Matrix right_mult(const Vec& x) const;

  Subspace full_space() const { return Subspace::full(dim_); }

  /// Copy with different metadata name; the structure is shared verbatim.
  MalcevAlgebra renamed(std::string name) const;

  bool operator==(const MalcevAlgebra& o) const;

 private:
  size_t flat(int i, int j) const { return static_cast<size_t>(i) * dim_ + j; }
  size_t triple_index(int i, int j, int k) const;  // i < j < k

  int dim_;
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<int> generators_;
  std::vector<SparseVec> c_;     // dim x dim rows
  std::vector<SparseVec> jtab_;  // J(b_i,b_j,b_k) for i < j < k
};

// ---------------------------------------------------------------------------
// Identity verification

enum class Check { anticommutative, jacobi, malcev, malcev_linearized };

const char* check_name(Check c);

struct Witness {
  std::vector<int> tuple;  // basis indices, minimal in lexicographic order
  Vec defect;              // nonzero
};

struct IdentityReport {
  std::map<Check, bool> verdicts;
  std::map<Check, Witness> witnesses;  // one per failed check

  bool passes(Check c) const { return verdicts.at(c); }
  /// The algebra is Malcev: anticommutative + defining identity + its full
  /// x-linearization (the two together are the identity in characteristic 0).
  bool malcev_ok() const;
  bool is_lie() const;
};

/// Checks anticommutativity structurally, Jacobi on basis triples, the
/// defining identity at basis x, and its full x-linearization on basis
/// quadruples. The tuple sweeps are the parallel kernels.
IdentityReport check_identities(const MalcevAlgebra& m, Exec ex = kDefaultExec);

/// Defect evaluators, usable to re-check any reported witness.
Vec jacobi_defect(const MalcevAlgebra& m, const Vec& x, const Vec& y, const Vec& z);
Vec malcev_defect(const MalcevAlgebra& m, const Vec& x, const Vec& y, const Vec& z);
Vec malcev_linearized_defect(const MalcevAlgebra& m, const Vec& x1, const Vec& x2, const Vec& y,
                             const Vec& z);

// ---------------------------------------------------------------------------
// Subspace operations

/// span { [a_r, b_s] } over basis rows.
Subspace subspace_bracket(const MalcevAlgebra& m, const Subspace& a, const Subspace& b);

/// Smallest ideal containing gens (one-sided closure suffices by
/// anticommutativity).
Subspace ideal_closure(const MalcevAlgebra& m, const Subspace& gens);

/// Smallest bracket-closed subspace containing gens.
Subspace subalgebra_generated(const MalcevAlgebra& m, const Subspace& gens);

struct SeriesReport {
  std::vector<Subspace> terms;  // terms[0] = M^1; ends at the stabilized term
                                // (with one confirming repeat when nonzero)
  Subspace omega;
  int stabilized_at = 1;  // smallest s with M^s = omega
  bool nilpotent = false;
  std::optional<int> nilpotency_class;
  std::vector<Subspace> derived;  // derived series, D^1 = M
  bool solvable = false;

  /// M^k for any k >= 1 (omega beyond the stabilization index).
  const Subspace& term(int k) const;
};

/// M^1 = M, M^n = sum over i+j=n of [M^i, M^j], iterated to certified
/// stabilization.
SeriesReport lower_central_series(const MalcevAlgebra& m);

/// Same series computed inside a bracket-closed subspace.
SeriesReport series_of_subspace(const MalcevAlgebra& m, const Subspace& w);

/// {x : J(x, M, M) = 0}.
Subspace lie_center(const MalcevAlgebra& m);

/// Ideal generated by all J(b_i, b_j, b_k).
Subspace jacobian_ideal(const MalcevAlgebra& m);

/// {x : [x, a] = 0 for all a in the subspace}.
Subspace centralizer(const MalcevAlgebra& m, const Subspace& a);

struct NlkResult {
  int k = 0;
  bool pass = false;
  // Failure data: w is a basis vector of M^k, (i, j) the basis pair.
  Vec witness_w;
  int witness_i = -1, witness_j = -1;
  Vec defect;
};

/// J(M^k, M, M) = 0, decided on a basis of M^k against all basis pairs.
NlkResult nlk_test(const MalcevAlgebra& m, int k);

/// Smallest k >= 2 with J(M^k, M, M) = 0, if any.
std::optional<int> nl_class(const MalcevAlgebra& m);

struct QuotientResult {
  MalcevAlgebra algebra;
  Matrix projection;  // quotient dim x original dim
};

/// Quotient by an ideal, on the standard complement of the ideal's pivot
/// coordinates. Verifies the ideal property and that the projection is a
/// homomorphism.
QuotientResult quotient(const MalcevAlgebra& m, const Subspace& ideal);

MalcevAlgebra direct_sum(const MalcevAlgebra& a, const MalcevAlgebra& b);

}  // namespace malcev

#endif
