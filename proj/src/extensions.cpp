#include "malcev/extensions.hpp"

#include <set>

#include "malcev/errors.hpp"
#include "malcev/fixtures.hpp"

namespace malcev {

DerivationCheck is_derivation(const MalcevAlgebra& m, const Matrix& d) {
  if (d.rows() != m.dim() || d.cols() != m.dim())
    throw Error(Errc::dimension_mismatch, "derivation candidate must be square of the algebra dimension");
  DerivationCheck out;
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = d.apply(m.bracket(unit_vec(n, i), unit_vec(n, j)));
      Vec rhs = add(m.bracket(d.col(i), unit_vec(n, j)), m.bracket(unit_vec(n, i), d.col(j)));
      Vec defect = sub(lhs, rhs);
      if (!is_zero(defect)) {
        out.pass = false;
        out.i = i;
        out.j = j;
        out.defect = std::move(defect);
        return out;
      }
    }
  out.pass = true;
  return out;
}

MalcevAlgebra decomposable_extension(const ExtensionSpec& spec) {
  const MalcevAlgebra& nt = spec.n_tilde;
  const MalcevAlgebra& l = spec.lie_part;
  auto violate = [](const std::string& msg) -> void {
    throw Error(Errc::extension_spec_violation, msg);
  };

  if (static_cast<int>(spec.action.size()) != nt.dim())
    violate("action must provide one matrix per n_tilde basis vector");
  for (const Matrix& a : spec.action)
    if (a.rows() != l.dim() || a.cols() != l.dim())
      violate("action matrices must be square of the l dimension");
  if (!check_identities(l).is_lie()) violate("l must pass the Jacobi check");
  if (spec.ideal.ambient() != nt.dim()) violate("i must live in n_tilde");
  if (!spec.ideal.contains(subspace_bracket(nt, spec.ideal, nt.full_space())))
    violate("i is not an ideal of n_tilde");
  if (!spec.ideal.contains(jacobian_ideal(nt))) violate("J(n_tilde) is not contained in i");
  for (int k = 0; k < nt.dim(); ++k)
    if (!is_derivation(l, spec.action[k]).pass)
      violate("action of n_tilde basis vector " + nt.labels()[k] + " is not a derivation of l");
  for (const Vec& v : spec.ideal.basis()) {
    Matrix acc(l.dim(), l.dim());
    for (int k = 0; k < nt.dim(); ++k)
      if (v[k] != 0) acc = acc + spec.action[k] * v[k];
    if (!acc.is_zero()) violate("action does not vanish on i");
  }
  for (int p = 0; p < nt.dim(); ++p)
    for (int q = p + 1; q < nt.dim(); ++q) {
      Matrix lhs(l.dim(), l.dim());
      for (const auto& [r, c] : nt.bracket_basis(p, q).terms) lhs = lhs + spec.action[r] * c;
      Matrix rhs = spec.action[p] * spec.action[q] - spec.action[q] * spec.action[p];
      if (!(lhs == rhs))
        violate("action is not a homomorphism on the pair (" + nt.labels()[p] + ", " +
                nt.labels()[q] + ")");
    }

  const int dn = nt.dim(), dl = l.dim(), dim = dn + dl;
  std::vector<std::string> labels = nt.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::string lab : l.labels()) {
    while (used.count(lab)) lab += "'";
    used.insert(lab);
    labels.push_back(lab);
  }

  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int i = 0; i < dn; ++i)
    for (int j = i + 1; j < dn; ++j) {
      const SparseVec& row = nt.bracket_basis(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(dim);
      for (const auto& [idx, c] : row.terms) v[idx] = c;
      brackets.emplace_back(i, j, std::move(v));
    }
  for (int i = 0; i < dl; ++i)
    for (int j = i + 1; j < dl; ++j) {
      const SparseVec& row = l.bracket_basis(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(dim);
      for (const auto& [idx, c] : row.terms) v[dn + idx] = c;
      brackets.emplace_back(dn + i, dn + j, std::move(v));
    }
  // (a,l)(b,r) = ([a,b], l^b - r^a + [l,r]); with a = b_p, r = m_i this gives
  // [b_p, m_i] = -(m_i^{b_p}) = -action(p) m_i.
  for (int p = 0; p < dn; ++p)
    for (int i = 0; i < dl; ++i) {
      Vec av = spec.action[p].col(i);
      if (is_zero(av)) continue;
      Vec v = zero_vec(dim);
      for (int r = 0; r < dl; ++r) v[dn + r] = -av[r];
      brackets.emplace_back(p, dn + i, std::move(v));
    }

  MalcevAlgebra result(labels, brackets, nt.generators(), "");
  IdentityReport rep = check_identities(result);
  if (!rep.malcev_ok()) {
    std::string which;
    for (Check c : {Check::anticommutative, Check::malcev, Check::malcev_linearized})
      if (!rep.passes(c)) which = check_name(c);
    throw Error(Errc::result_not_malcev, "extension fails the " + which + " check");
  }

  std::vector<Vec> lpart_gens;
  for (int i = 0; i < dl; ++i) lpart_gens.push_back(unit_vec(dim, dn + i));
  Subspace lpart = Subspace::span(dim, lpart_gens);
  if (!lpart.contains(subspace_bracket(result, lpart, result.full_space())))
    violate("l is not an ideal of the result");
  if (!lie_center(result).contains(lpart))
    violate("l is not contained in the Lie center of the result");
  return result;
}

// ---------------------------------------------------------------------------
// Free nilpotent algebras

namespace {

// Monomial bookkeeping for the free anticommutative nilpotent algebra:
// degree 1: generators; degree 2: [xi,xj], i<j; degree 3: [m2,xk];
// degree 4: [m3,xk] and [m2,m2'], lexicographic blocks in that order.
struct FreeBasis {
  int rank, cls;
  int n2, n3, n4a, n4b;
  int off2, off3, off4a, off4b, dim;

  FreeBasis(int r, int c) : rank(r), cls(c) {
    n2 = r * (r - 1) / 2;
    n3 = cls >= 3 ? n2 * r : 0;
    n4a = cls >= 4 ? n3 * r : 0;
    n4b = cls >= 4 ? n2 * (n2 - 1) / 2 : 0;
    off2 = r;
    off3 = off2 + n2;
    off4a = off3 + n3;
    off4b = off4a + n4a;
    dim = off4b + n4b;
  }

  static int pair_rank(int i, int j, int n) {  // i < j < n
    return i * n - i * (i + 1) / 2 + (j - i - 1);
  }

  int degree(int idx) const {
    if (idx < off2) return 1;
    if (idx < off3) return 2;
    if (idx < off4a) return 3;
    return 4;
  }

  // bracket of two basis monomials: (index, sign) or sign 0 when it vanishes.
  std::pair<int, int> bracket(int a, int b) const {
    int da = degree(a), db = degree(b);
    if (da + db > cls) return {0, 0};
    if (da > db) {
      auto [idx, s] = bracket(b, a);
      return {idx, -s};
    }
    if (da == 1 && db == 1) {
      if (a == b) return {0, 0};
      if (a < b) return {off2 + pair_rank(a, b, rank), 1};
      return {off2 + pair_rank(b, a, rank), -1};
    }
    if (da == 1 && db == 2) return {off3 + (b - off2) * rank + a, -1};  // -[m2, x]
    if (da == 1 && db == 3) return {off4a + (b - off3) * rank + a, -1};
    if (da == 2 && db == 2) {
      int p = a - off2, q = b - off2;
      if (p == q) return {0, 0};
      if (p < q) return {off4b + pair_rank(p, q, n2), 1};
      return {off4b + pair_rank(q, p, n2), -1};
    }
    return {0, 0};  // degree > 4 combinations
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out(dim);
    for (int i = 0; i < rank; ++i) out[i] = "x" + std::to_string(i + 1);
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        out[off2 + pair_rank(i, j, rank)] = "[" + out[i] + "," + out[j] + "]";
    for (int p = 0; p < n3; ++p)
      out[off3 + p] = "[" + out[off2 + p / rank] + "," + out[p % rank] + "]";
    for (int t = 0; t < n4a; ++t)
      out[off4a + t] = "[" + out[off3 + t / rank] + "," + out[t % rank] + "]";
    if (cls >= 4)
      for (int p = 0; p < n2; ++p)
        for (int q = p + 1; q < n2; ++q)
          out[off4b + pair_rank(p, q, n2)] = "[" + out[off2 + p] + "," + out[off2 + q] + "]";
    return out;
  }
};

}  // namespace

MalcevAlgebra free_anticommutative_nilpotent(int rank, int cls) {
  if (rank < 2) throw Error(Errc::bad_rank, "free construction needs rank >= 2");
  if (cls < 2 || cls > 4)
    throw Error(Errc::unsupported_class, "free construction supports class 2..4");
  FreeBasis fb(rank, cls);
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int a = 0; a < fb.dim; ++a)
    for (int b = a + 1; b < fb.dim; ++b) {
      auto [idx, sign] = fb.bracket(a, b);
      if (sign == 0) continue;
      Vec v = zero_vec(fb.dim);
      v[idx] = sign;
      brackets.emplace_back(a, b, std::move(v));
    }
  std::vector<int> gens(rank);
  for (int i = 0; i < rank; ++i) gens[i] = i;
  return MalcevAlgebra(fb.labels(), brackets, gens,
                       "FAC-" + std::to_string(rank) + "-" + std::to_string(cls));
}

MalcevAlgebra free_nilpotent_malcev(int rank, int cls) {
  MalcevAlgebra f = free_anticommutative_nilpotent(rank, cls);
  if (cls <= 3)  // the defining identity has degree 4, vacuous here
    return f.renamed("FNM-" + std::to_string(rank) + "-" + std::to_string(cls));

  // Impose the identity and its full linearization on generator tuples; any
  // substitution with a higher-degree monomial lands in degree >= 5 = 0.
  for (int round = 0; round < 4; ++round) {
    IdentityReport rep = check_identities(f);
    if (rep.malcev_ok())
      return f.renamed("FNM-" + std::to_string(rank) + "-" + std::to_string(cls));
    std::vector<Vec> rows;
    const std::vector<int>& gens = f.generators();
    const int n = f.dim();
    for (int i : gens)
      for (int j : gens)
        for (int k : gens) {
          Vec d = malcev_defect(f, unit_vec(n, i), unit_vec(n, j), unit_vec(n, k));
          if (!is_zero(d)) rows.push_back(std::move(d));
        }
    for (size_t a = 0; a < gens.size(); ++a)
      for (size_t b = a; b < gens.size(); ++b)
        for (int j : gens)
          for (int k : gens) {
            Vec d = malcev_linearized_defect(f, unit_vec(n, gens[a]), unit_vec(n, gens[b]),
                                             unit_vec(n, j), unit_vec(n, k));
            if (!is_zero(d)) rows.push_back(std::move(d));
          }
    if (rows.empty())
      throw Error(Errc::verification_failed,
                  "identity fails but yields no relations on generator tuples");
    Subspace relations = ideal_closure(f, Subspace::span(n, rows));
    f = quotient(f, relations).algebra;
  }
  throw Error(Errc::verification_failed, "free Malcev quotient did not converge");
}

// ---------------------------------------------------------------------------
// The NL_{k+1} \ NL_k example

SeparationCertificate separation_example(int k) {
  if (k != 2) throw Error(Errc::bad_k, "only the k = 2 instance is constructed");

  MalcevAlgebra f = free_nilpotent_malcev(3, 4);
  SeriesReport fs = lower_central_series(f);
  const int n = f.dim();

  std::vector<Vec> wgens;
  for (const Vec& w : fs.term(2).basis())
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Vec v = f.jacobian(w, unit_vec(n, i), unit_vec(n, j));
        if (!is_zero(v)) wgens.push_back(std::move(v));
      }
  Subspace w_span = Subspace::span(n, wgens);

  SeparationCertificate cert;
  cert.free_dim = n;
  cert.w_dim = w_span.dim();
  if (w_span.is_zero())
    throw Error(Errc::oracle_failed,
                "free class-4 Malcev algebra of rank 3 (dim " + std::to_string(n) +
                    ") has J(M^2, M, M) = 0; the example recipe is unrealizable");

  // Lexicographically first line of W, then a complement of it inside M^4.
  Vec z_free = w_span.basis()[0];
  Subspace grown = Subspace::span(n, {z_free});
  std::vector<Vec> complement_rows;
  for (const Vec& row : fs.term(4).basis()) {
    if (grown.contains(row)) continue;
    complement_rows.push_back(row);
    grown = grown.sum(Subspace::span(n, {row}));
  }
  Subspace complement = Subspace::span(n, complement_rows);

  QuotientResult q0 = quotient(f, complement);
  cert.p0 = q0.algebra;
  cert.z = q0.projection.apply(z_free);
  cert.z_description = vec_to_string(cert.z, cert.p0.labels());

  // J(P0^2, P0, P0) must be exactly the line through z.
  {
    const int n0 = cert.p0.dim();
    SeriesReport s0 = lower_central_series(cert.p0);
    std::vector<Vec> jdirs;
    for (const Vec& w : s0.term(2).basis())
      for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j) {
          Vec v = cert.p0.jacobian(w, unit_vec(n0, i), unit_vec(n0, j));
          if (!is_zero(v)) jdirs.push_back(std::move(v));
        }
    Subspace jline = Subspace::span(n0, jdirs);
    if (jline.dim() != 1 || !jline.contains(cert.z))
      throw Error(Errc::verification_failed, "J(P0^2, P0, P0) is not the chosen central line");
    MalcevAlgebra p0_mod_z = quotient(cert.p0, Subspace::span(n0, {cert.z})).algebra;
    cert.p0_mod_z_passes_nl2 = nlk_test(p0_mod_z, 2).pass;
  }

  MalcevAlgebra p1 = make_fixture("P1");
  MalcevAlgebra glued = direct_sum(cert.p0, p1);
  const int gd = glued.dim();
  const int p0d = cert.p0.dim();
  int c_idx = glued.label_index("c");
  Vec glue = unit_vec(gd, c_idx);
  for (int i = 0; i < p0d; ++i) glue[i] -= cert.z[i];
  QuotientResult qp = quotient(glued, Subspace::span(gd, {glue}));
  cert.p = qp.algebra;

  cert.identities_pass = check_identities(cert.p).malcev_ok();
  cert.nlk2 = nlk_test(cert.p, 2);
  cert.nlk3 = nlk_test(cert.p, 3);

  std::vector<Vec> p0_img, p1_img;
  for (int i = 0; i < p0d; ++i) p0_img.push_back(qp.projection.col(i));
  for (int i = p0d; i < gd; ++i) p1_img.push_back(qp.projection.col(i));
  Subspace p0_part = Subspace::span(cert.p.dim(), p0_img);
  Subspace p1_part = Subspace::span(cert.p.dim(), p1_img);
  cert.p1_in_lie_center = lie_center(cert.p).contains(p1_part);
  cert.parts_span = p0_part.sum(p1_part).dim() == cert.p.dim();
  return cert;
}

}  // namespace malcev
