#include "malcev/decomposition.hpp"

#include <algorithm>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

// Flattened column-major image of a matrix, for solving R_t = s as a linear
// system in t.
Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(static_cast<size_t>(m.rows()) * m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (int r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
  return v;
}

std::optional<Vec> inducing_element(const MalcevAlgebra& m, const Matrix& target) {
  const int n = m.dim();
  Matrix sys(n * n, n);
  for (int k = 0; k < n; ++k) {
    Vec col = flatten(m.right_mult(unit_vec(n, k)));
    for (int r = 0; r < n * n; ++r) sys.at(r, k) = col[r];
  }
  return solve(sys, flatten(target));
}

}  // namespace

ElementSplit jordan_split_element(const MalcevAlgebra& m, const Vec& g) {
  JordanSplit js = jordan_additive_split(m.right_mult(g));
  ElementSplit out;
  out.semisimple_op = js.semisimple;
  out.nilpotent_op = js.nilpotent;
  if (auto t = inducing_element(m, js.semisimple)) {
    out.splittable = true;
    out.inducing_t = std::move(*t);
  }
  return out;
}

SplitStep split_step(const MalcevAlgebra& m, const Vec& x) {
  const int n = m.dim();
  JordanSplit js = jordan_additive_split(m.right_mult(x));
  if (inducing_element(m, js.semisimple))
    throw Error(Errc::already_split,
                "the semisimple part of R_x is already induced by an element of the algebra");

  std::vector<std::string> labels = m.labels();
  std::string tl = "t";
  while (std::find(labels.begin(), labels.end(), tl) != labels.end()) tl += "'";
  labels.push_back(tl);

  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SparseVec& row = m.bracket_basis(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(n + 1);
      for (const auto& [idx, c] : row.terms) v[idx] = c;
      brackets.emplace_back(i, j, std::move(v));
    }
  for (int i = 0; i < n; ++i) {
    // [b_i, t] = s(b_i)
    Vec v = zero_vec(n + 1);
    bool nonzero = false;
    for (int r = 0; r < n; ++r) {
      v[r] = js.semisimple.at(r, i);
      nonzero = nonzero || v[r] != 0;
    }
    if (nonzero) brackets.emplace_back(i, n, std::move(v));
  }

  MalcevAlgebra extended(labels, brackets, m.generators(), "");
  IdentityReport rep = check_identities(extended);
  if (!rep.malcev_ok())
    throw Error(Errc::split_not_malcev,
                "adjoining the semisimple part does not yield a Malcev algebra");
  return SplitStep{std::move(extended), tl, js.semisimple, js.nilpotent, js.p};
}

const Subspace* WeightDecomposition::space_of(const Weight& w) const {
  for (const WeightSpace& ws : spaces)
    if (ws.weight == w) return &ws.space;
  return nullptr;
}

namespace {

// Matrix of op restricted to w, columns in w-basis coordinates.
Matrix restrict_op(const Matrix& op, const Subspace& w) {
  Matrix r(w.dim(), w.dim());
  for (int c = 0; c < w.dim(); ++c) {
    auto coords = w.coordinates(op.apply(w.basis()[c]));
    if (!coords)
      throw Error(Errc::target_not_invariant, "target subspace is not invariant under R_t");
    for (int i = 0; i < w.dim(); ++i) r.at(i, c) = (*coords)[i];
  }
  return r;
}

Vec to_ambient(const Subspace& w, const Vec& coords) {
  Vec v = zero_vec(w.ambient());
  for (int i = 0; i < w.dim(); ++i)
    if (coords[i] != 0) v = add(v, scale(w.basis()[i], coords[i]));
  return v;
}

Weight weight_sum(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

}  // namespace

WeightDecomposition weight_spaces(const MalcevAlgebra& m, const std::vector<Vec>& toral,
                                  const Subspace& target) {
  WeightDecomposition out;
  out.target = target;
  // Only the span matters; dependent and zero vectors are dropped.
  Subspace tspan = Subspace::span(m.dim(), toral);
  out.toral = tspan.basis();

  std::vector<Matrix> ops;
  for (const Vec& t : out.toral) ops.push_back(restrict_op(m.right_mult(t), target));
  for (size_t a = 0; a < ops.size(); ++a)
    for (size_t b = a + 1; b < ops.size(); ++b)
      if (!(ops[a] * ops[b] - ops[b] * ops[a]).is_zero())
        throw Error(Errc::not_simultaneously_diagonalizable,
                    "toral right multiplications do not commute on the target");

  std::vector<WeightSpace> pieces{{Weight{}, target}};
  for (size_t ti = 0; ti < out.toral.size(); ++ti) {
    std::vector<WeightSpace> next;
    for (const WeightSpace& piece : pieces) {
      if (piece.space.is_zero()) continue;
      Matrix op = restrict_op(m.right_mult(out.toral[ti]), piece.space);
      EigenDecomposition eig = eigen_decompose(op);
      if (!eig.diagonalizable)
        throw Error(Errc::not_simultaneously_diagonalizable,
                    "a toral right multiplication is not diagonalizable on the target");
      for (const EigenPair& ep : eig.pairs) {
        if (ep.space.is_zero()) continue;
        Weight w = piece.weight;
        w.push_back(ep.value);
        std::vector<Vec> gens;
        for (const Vec& coords : ep.space.basis())
          gens.push_back(to_ambient(piece.space, coords));
        next.push_back({std::move(w), Subspace::span(m.dim(), gens)});
      }
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const WeightSpace& a, const WeightSpace& b) { return a.weight < b.weight; });

  // Exactness: each piece satisfies [x, t_j] = alpha_j x, and pieces sum to
  // the target.
  Subspace total = Subspace::zero(m.dim());
  int dims = 0;
  for (const WeightSpace& ws : pieces) {
    for (const Vec& x : ws.space.basis())
      for (size_t j = 0; j < out.toral.size(); ++j)
        if (m.bracket(x, out.toral[j]) != scale(x, ws.weight[j]))
          throw Error(Errc::verification_failed, "weight space equation failed to re-verify");
    total = total.sum(ws.space);
    dims += ws.space.dim();
  }
  if (!(total == target) || dims != target.dim())
    throw Error(Errc::verification_failed, "weight spaces do not sum directly to the target");

  out.spaces = std::move(pieces);

  // Bracket containments between weight spaces, restricted to pairs whose
  // bracket stays inside the target.
  for (size_t a = 0; a < out.spaces.size(); ++a)
    for (size_t b = a; b < out.spaces.size(); ++b) {
      Subspace prod = subspace_bracket(m, out.spaces[a].space, out.spaces[b].space);
      if (prod.is_zero()) continue;
      ContainmentCheck chk;
      chk.alpha = out.spaces[a].weight;
      chk.beta = out.spaces[b].weight;
      chk.applicable = target.contains(prod);
      if (a != b) {
        chk.rule = "[N_a, N_b] <= N_{a+b}";
        if (chk.applicable) {
          const Subspace* sum_space = out.space_of(weight_sum(chk.alpha, chk.beta));
          chk.pass = sum_space ? sum_space->contains(prod) : false;
        }
      } else {
        chk.rule = "[N_a, N_a] <= N_{2a} + N_{-a}";
        if (chk.applicable) {
          Weight twice = weight_sum(chk.alpha, chk.alpha);
          Weight neg = chk.alpha;
          for (Rat& r : neg) r = -r;
          Subspace allowed = Subspace::zero(m.dim());
          for (const auto& ws : out.spaces)
            if (ws.weight == twice || ws.weight == neg) allowed = allowed.sum(ws.space);
          chk.pass = allowed.contains(prod);
        }
      }
      out.containments.push_back(std::move(chk));
    }
  return out;
}

LeviData make_levi_data(const MalcevAlgebra& m, const Subspace& s, const Subspace& t,
                        const Subspace& n) {
  auto fail = [](const std::string& cond) {
    throw Error(Errc::bad_levi_data, cond);
  };
  if (s.ambient() != m.dim() || t.ambient() != m.dim() || n.ambient() != m.dim())
    fail("subspaces must live in the algebra");
  if (!s.intersect(t).is_zero()) fail("S and T intersect nontrivially");
  if (!s.intersect(n).is_zero()) fail("S and N intersect nontrivially");
  if (!t.intersect(n).is_zero()) fail("T and N intersect nontrivially");
  if (s.sum(t).sum(n).dim() != m.dim()) fail("S + T + N is not the whole algebra");
  if (!subspace_bracket(m, s, t).is_zero()) fail("[S, T] != 0");
  if (!n.contains(subspace_bracket(m, n, m.full_space()))) fail("N is not an ideal");
  if (!series_of_subspace(m, n).nilpotent) fail("N is not nilpotent");
  return LeviData{s, t, n};
}

bool Theorem1Parts::all_applicable_pass() const {
  for (const NamedVerdict& v : checks)
    if (v.applicable && !v.pass) return false;
  return true;
}

Theorem1Parts theorem1_parts(const MalcevAlgebra& m, const LeviData& levi) {
  // Re-verify the Levi invariants; stale data is an error here, not a verdict.
  make_levi_data(m, levi.s, levi.t, levi.n);

  Theorem1Parts out;
  WeightDecomposition wd = weight_spaces(m, levi.t.basis(), levi.n);
  Weight zero_weight(wd.toral.size(), Rat(0));
  out.n0 = Subspace::zero(m.dim());
  Subspace nonzero_weight_sum = Subspace::zero(m.dim());
  for (const WeightSpace& ws : wd.spaces) {
    if (ws.weight == zero_weight)
      out.n0 = out.n0.sum(ws.space);
    else
      nonzero_weight_sum = nonzero_weight_sum.sum(ws.space);
  }

  out.n01 = subspace_bracket(m, levi.s, out.n0);
  out.n00 = centralizer(m, levi.s.sum(levi.t)).intersect(levi.n);
  out.m11 = levi.s.sum(nonzero_weight_sum).sum(out.n01);
  out.m1 = subalgebra_generated(m, levi.t.sum(out.m11));
  out.nl_k = nl_class(m);

  auto add_check = [&](std::string name, std::string anchor, bool applicable, bool pass) {
    out.checks.push_back({std::move(name), std::move(anchor), applicable, pass});
  };

  bool n0_split = out.n01.sum(out.n00) == out.n0 && out.n01.intersect(out.n00).is_zero();
  add_check("n0_splits", "N_0 = N_01 + N_00", true, n0_split);

  Subspace sn = subspace_bracket(m, levi.s, levi.n);
  bool n_split = out.n00.sum(sn) == levi.n && out.n00.intersect(sn).is_zero();
  add_check("n_splits", "N = N_00 + [S,N]", true, n_split);

  bool m1_ideal = out.m1.contains(subspace_bracket(m, out.m1, m.full_space()));
  add_check("m1_ideal", "M_1 is an ideal", true, m1_ideal);

  add_check("m11_n0_in_m11", "[M_11, N_0] <= M_11", true,
            out.m11.contains(subspace_bracket(m, out.m11, out.n0)));
  add_check("n01_n00_in_n01", "[N_01, N_00] <= N_01", true,
            out.n01.contains(subspace_bracket(m, out.n01, out.n00)));

  const bool in_nlk = out.nl_k.has_value();
  Subspace center = lie_center(m);
  add_check("m1_in_lie_center", "M_1 <= Lie(M)", in_nlk, in_nlk && center.contains(out.m1));
  SeriesReport series = lower_central_series(m);
  add_check("omega_in_m1", "M^omega <= M_1", in_nlk, in_nlk && out.m1.contains(series.omega));

  return out;
}

}  // namespace malcev
