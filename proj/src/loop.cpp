#include "malcev/loop.hpp"

#include <algorithm>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

bool coord_zero(const Rat& c) { return c == 0; }
bool coord_zero(const MPoly& p) { return p.is_zero(); }

template <class T>
std::vector<T> gv_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

template <class T>
std::vector<T> gv_sub(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

template <class T>
std::vector<T> gv_scale(const std::vector<T>& a, const Rat& c) {
  std::vector<T> r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] * c;
  return r;
}

template <class T>
std::vector<T> gv_neg(const std::vector<T>& a) {
  return gv_scale(a, Rat(-1));
}

template <class T>
bool gv_zero(const std::vector<T>& a) {
  for (const T& c : a)
    if (!coord_zero(c)) return false;
  return true;
}

// Pair products u_i v_j - u_j v_i are computed once per tensor pair (phase 1,
// parallel for polynomial coordinates), then distributed to the output
// coordinates (phase 2). Bit-identical to the serial order.
template <class T>
std::vector<T> g_bracket(const MalcevAlgebra& m, const std::vector<T>& u, const std::vector<T>& v,
                         const T& zero, bool parallel) {
  const int n = m.dim();
  struct Pair {
    int i, j;
    const SparseVec* row;
  };
  std::vector<Pair> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const SparseVec& row = m.bracket_basis(i, j);
      if (!row.empty()) pairs.push_back({i, j, &row});
    }
  std::vector<T> prod(pairs.size(), zero);
  const int np = static_cast<int>(pairs.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int p = 0; p < np; ++p)
    prod[p] = u[pairs[p].i] * v[pairs[p].j] - u[pairs[p].j] * v[pairs[p].i];

  std::vector<std::vector<std::pair<int, Rat>>> contrib(n);
  for (int p = 0; p < np; ++p)
    for (const auto& [r, c] : pairs[p].row->terms) contrib[r].emplace_back(p, c);
  std::vector<T> out(n, zero);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int r = 0; r < n; ++r)
    for (const auto& [p, c] : contrib[r]) out[r] = out[r] + prod[p] * c;
  return out;
}

// x + y + 1/2 [x,y] - 1/12 [[x,y],x] + 1/12 [[x,y],y]
template <class T>
std::vector<T> g_product(const FormalLoop& l, const std::vector<T>& x, const std::vector<T>& y,
                         const T& zero, bool parallel) {
  const MalcevAlgebra& m = l.algebra();
  std::vector<T> w1 = g_bracket(m, x, y, zero, parallel);
  std::vector<T> w2 = g_bracket(m, w1, x, zero, parallel);
  std::vector<T> w3 = g_bracket(m, w1, y, zero, parallel);
  std::vector<T> r = gv_add(x, y);
  r = gv_add(r, gv_scale(w1, Rat(1, 2)));
  r = gv_sub(r, gv_scale(w2, rat(1, 12)));
  r = gv_add(r, gv_scale(w3, rat(1, 12)));
  return r;
}

// Solve a z = b; the correction terms raise the bracket degree, so three
// refinements are exact at class <= 3. Resubstitution is asserted.
template <class T>
std::vector<T> g_left_divide(const FormalLoop& l, const std::vector<T>& a, const std::vector<T>& b,
                             const T& zero, bool parallel) {
  std::vector<T> z = gv_sub(b, a);
  for (int iter = 0; iter < 3; ++iter) {
    std::vector<T> corr = gv_sub(g_product(l, a, z, zero, parallel), gv_add(a, z));
    z = gv_sub(gv_sub(b, a), corr);
  }
  if (!gv_zero(gv_sub(g_product(l, a, z, zero, parallel), b)))
    throw Error(Errc::verification_failed, "left division failed resubstitution");
  return z;
}

template <class T>
std::vector<T> g_right_divide(const FormalLoop& l, const std::vector<T>& b, const std::vector<T>& a,
                              const T& zero, bool parallel) {
  std::vector<T> z = gv_sub(b, a);
  for (int iter = 0; iter < 3; ++iter) {
    std::vector<T> corr = gv_sub(g_product(l, z, a, zero, parallel), gv_add(z, a));
    z = gv_sub(gv_sub(b, a), corr);
  }
  if (!gv_zero(gv_sub(g_product(l, z, a, zero, parallel), b)))
    throw Error(Errc::verification_failed, "right division failed resubstitution");
  return z;
}

template <class T>
std::vector<T> g_commutator(const FormalLoop& l, const std::vector<T>& x, const std::vector<T>& y,
                            const T& zero, bool parallel) {
  std::vector<T> w = g_product(l, gv_neg(x), gv_neg(y), zero, parallel);
  w = g_product(l, w, x, zero, parallel);
  return g_product(l, w, y, zero, parallel);
}

template <class T>
std::vector<T> g_associator(const FormalLoop& l, const std::vector<T>& x, const std::vector<T>& y,
                            const std::vector<T>& z, const T& zero, bool parallel) {
  std::vector<T> lhs = g_product(l, g_product(l, x, y, zero, parallel), z, zero, parallel);
  std::vector<T> rhs = g_product(l, x, g_product(l, y, z, zero, parallel), zero, parallel);
  return g_product(l, lhs, gv_neg(rhs), zero, parallel);
}

}  // namespace

FormalLoop::FormalLoop(MalcevAlgebra algebra) : alg_(std::move(algebra)) {
  IdentityReport rep = check_identities(alg_);
  if (!rep.malcev_ok())
    throw Error(Errc::not_malcev, "loop construction needs a Malcev algebra");
  SeriesReport series = lower_central_series(alg_);
  if (!series.nilpotent || series.nilpotency_class.value_or(0) > 3)
    throw Error(Errc::unsupported_class,
                "loop construction needs a nilpotent algebra of class <= 3");
  cls_ = series.nilpotency_class.value_or(0);
}

PolyVec symbolic_point(const FormalLoop& l, int point_index, int total_points) {
  const int n = l.dim();
  PolyVec v;
  v.reserve(n);
  for (int r = 0; r < n; ++r) v.push_back(MPoly::variable(total_points * n, point_index * n + r));
  return v;
}

std::vector<std::string> symbolic_var_names(const FormalLoop& l, int total_points) {
  static const char* kPoints[] = {"x", "y", "z", "u", "v", "w"};
  std::vector<std::string> names;
  for (int p = 0; p < total_points; ++p) {
    std::string pn = p < 6 ? kPoints[p] : "p" + std::to_string(p);
    for (const std::string& lab : l.algebra().labels()) names.push_back(pn + "." + lab);
  }
  return names;
}

Vec loop_product(const FormalLoop& l, const Vec& x, const Vec& y) {
  if (static_cast<int>(x.size()) != l.dim() || static_cast<int>(y.size()) != l.dim())
    throw Error(Errc::dimension_mismatch, "loop points must match the algebra dimension");
  return g_product(l, x, y, Rat(0), false);
}

PolyVec loop_product(const FormalLoop& l, const PolyVec& x, const PolyVec& y, Exec ex) {
  if (static_cast<int>(x.size()) != l.dim() || static_cast<int>(y.size()) != l.dim())
    throw Error(Errc::dimension_mismatch, "loop points must match the algebra dimension");
  const int nv = x.empty() ? 0 : x.front().nvars();
  return g_product(l, x, y, MPoly(nv), ex == Exec::parallel);
}

Vec loop_inverse(const FormalLoop& l, const Vec& x) { return gv_neg(x); }
PolyVec loop_inverse(const FormalLoop& l, const PolyVec& x) {
  (void)l;
  return gv_neg(x);
}

Vec left_divide(const FormalLoop& l, const Vec& a, const Vec& b) {
  return g_left_divide(l, a, b, Rat(0), false);
}
PolyVec left_divide(const FormalLoop& l, const PolyVec& a, const PolyVec& b, Exec ex) {
  const int nv = a.empty() ? 0 : a.front().nvars();
  return g_left_divide(l, a, b, MPoly(nv), ex == Exec::parallel);
}
Vec right_divide(const FormalLoop& l, const Vec& b, const Vec& a) {
  return g_right_divide(l, b, a, Rat(0), false);
}
PolyVec right_divide(const FormalLoop& l, const PolyVec& b, const PolyVec& a, Exec ex) {
  const int nv = a.empty() ? 0 : a.front().nvars();
  return g_right_divide(l, b, a, MPoly(nv), ex == Exec::parallel);
}

Vec loop_commutator(const FormalLoop& l, const Vec& x, const Vec& y) {
  return g_commutator(l, x, y, Rat(0), false);
}
PolyVec loop_commutator(const FormalLoop& l, const PolyVec& x, const PolyVec& y, Exec ex) {
  const int nv = x.empty() ? 0 : x.front().nvars();
  return g_commutator(l, x, y, MPoly(nv), ex == Exec::parallel);
}

Vec loop_associator(const FormalLoop& l, const Vec& x, const Vec& y, const Vec& z) {
  return g_associator(l, x, y, z, Rat(0), false);
}
PolyVec loop_associator(const FormalLoop& l, const PolyVec& x, const PolyVec& y, const PolyVec& z,
                        Exec ex) {
  const int nv = x.empty() ? 0 : x.front().nvars();
  return g_associator(l, x, y, z, MPoly(nv), ex == Exec::parallel);
}

bool polyvec_zero(const PolyVec& v) { return gv_zero(v); }

std::map<MPoly::Exponents, Vec> coefficient_vectors(const PolyVec& v) {
  std::map<MPoly::Exponents, Vec> out;
  const int n = static_cast<int>(v.size());
  for (int r = 0; r < n; ++r)
    for (const auto& [e, c] : v[r].terms()) {
      auto [it, fresh] = out.emplace(e, Vec());
      if (fresh) it->second = zero_vec(n);
      it->second[r] = c;
    }
  return out;
}

const LoopCheck* LoopIdentityReport::find(const std::string& name) const {
  for (const LoopCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool LoopIdentityReport::moufang_ok() const {
  const LoopCheck* c = find("moufang");
  return c && c->pass;
}

namespace {

std::string first_nonzero_coord(const PolyVec& v, const FormalLoop& l, int total_points) {
  std::vector<std::string> vars = symbolic_var_names(l, total_points);
  for (size_t r = 0; r < v.size(); ++r)
    if (!v[r].is_zero())
      return l.algebra().labels()[r] + "-coordinate: " + v[r].to_string(vars);
  return "";
}

uint64_t lcg_next(uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 33;
}

Vec random_point(int dim, uint64_t& state) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) {
    long num = static_cast<long>(lcg_next(state) % 19) - 9;
    long den = static_cast<long>(lcg_next(state) % 9) + 1;
    v[i] = rat(num, den);
  }
  return v;
}

}  // namespace

LoopIdentityReport check_loop_identities(const FormalLoop& l, Exec ex) {
  LoopIdentityReport rep;
  const int n = l.dim();
  const int pts = 3;
  PolyVec x = symbolic_point(l, 0, pts);
  PolyVec y = symbolic_point(l, 1, pts);
  PolyVec z = symbolic_point(l, 2, pts);
  PolyVec zero_pt(n, MPoly(pts * n));

  auto add = [&](const std::string& name, const std::string& anchor, const PolyVec& diff) {
    LoopCheck c{name, anchor, polyvec_zero(diff), ""};
    if (!c.pass) c.witness = first_nonzero_coord(diff, l, pts);
    rep.checks.push_back(std::move(c));
    return rep.checks.back().pass;
  };

  add("identity_element", "x 0 = 0 x = x",
      gv_add(gv_sub(loop_product(l, x, zero_pt, ex), x),
             gv_sub(loop_product(l, zero_pt, x, ex), x)));
  add("inverse", "x (-x) = (-x) x = 0",
      gv_add(loop_product(l, x, loop_inverse(l, x), ex),
             loop_product(l, loop_inverse(l, x), x, ex)));
  add("left_division", "a (a\\b) = b",
      gv_sub(loop_product(l, x, left_divide(l, x, y, ex), ex), y));
  add("right_division", "(b/a) a = b",
      gv_sub(loop_product(l, right_divide(l, y, x, ex), x, ex), y));

  PolyVec moufang_diff = gv_sub(
      loop_product(l, loop_product(l, x, y, ex), loop_product(l, z, x, ex), ex),
      loop_product(l, x, loop_product(l, loop_product(l, y, z, ex), x, ex), ex));
  add("moufang", "(x y)(z x) = x ((y z) x)", moufang_diff);
  add("moufang_variant", "(x y)(z x) = (x (y z)) x",
      gv_sub(loop_product(l, loop_product(l, x, y, ex), loop_product(l, z, x, ex), ex),
             loop_product(l, loop_product(l, x, loop_product(l, y, z, ex), ex), x, ex)));
  PolyVec left_alt_diff = gv_sub(loop_product(l, x, loop_product(l, x, y, ex), ex),
                                 loop_product(l, loop_product(l, x, x, ex), y, ex));
  add("left_alternative", "x (x y) = (x x) y", left_alt_diff);
  PolyVec right_alt_diff = gv_sub(loop_product(l, loop_product(l, y, x, ex), x, ex),
                                  loop_product(l, y, loop_product(l, x, x, ex), ex));
  add("right_alternative", "(y x) x = y (x x)", right_alt_diff);
  PolyVec flex_diff = gv_sub(loop_product(l, x, loop_product(l, y, x, ex), ex),
                             loop_product(l, loop_product(l, x, y, ex), x, ex));
  add("flexible", "x (y x) = (x y) x", flex_diff);
  add("diassociative_witness", "(x, y, x y) = 0",
      loop_associator(l, x, y, loop_product(l, x, y, ex), ex));
  add("associativity", "(x y) z = x (y z)",
      gv_sub(loop_product(l, loop_product(l, x, y, ex), z, ex),
             loop_product(l, x, loop_product(l, y, z, ex), ex)));

  // {x,y} - [x,y] is supported on M^3.
  {
    PolyVec comm_diff = gv_sub(loop_commutator(l, x, y, ex),
                               g_bracket(l.algebra(), x, y, MPoly(pts * n), ex == Exec::parallel));
    SeriesReport series = lower_central_series(l.algebra());
    const Subspace& m3 = series.term(3);
    bool ok = true;
    std::string witness;
    for (const auto& [e, vec] : coefficient_vectors(comm_diff))
      if (!m3.contains(vec)) {
        ok = false;
        witness = "coefficient direction " + vec_to_string(vec, l.algebra().labels()) +
                  " is outside M^3";
        break;
      }
    rep.checks.push_back({"commutator_leading_term", "{x,y} - [x,y] in M^3", ok, witness});
  }

  // (x, y, z) = J(x,y,z)/6, exactly.
  {
    const MalcevAlgebra& m = l.algebra();
    bool par = ex == Exec::parallel;
    MPoly zc(pts * n);
    PolyVec jxyz = g_bracket(m, g_bracket(m, x, y, zc, par), z, zc, par);
    jxyz = gv_add(jxyz, g_bracket(m, g_bracket(m, y, z, zc, par), x, zc, par));
    jxyz = gv_add(jxyz, g_bracket(m, g_bracket(m, z, x, zc, par), y, zc, par));
    PolyVec diff = gv_sub(loop_associator(l, x, y, z, ex), gv_scale(jxyz, rat(1, 6)));
    add("associator_jacobian", "(x, y, z) = J(x,y,z)/6", diff);
  }

  // Identity transfer: symbolic zero stays zero at 100 deterministic rational
  // points (polynomials vanishing near 0 vanish everywhere).
  {
    const PolyVec* diffs[] = {&moufang_diff, &left_alt_diff, &right_alt_diff, &flex_diff};
    bool ok = true;
    std::string witness;
    uint64_t state = 0x9e3779b97f4a7c15ULL;
    std::vector<Vec> points;
    for (int p = 0; p < 100; ++p) {
      Vec full;
      for (int q = 0; q < pts; ++q) {
        Vec part = random_point(n, state);
        full.insert(full.end(), part.begin(), part.end());
      }
      points.push_back(std::move(full));
    }
    const int npts = static_cast<int>(points.size());
    int bad = npts;
#pragma omp parallel for schedule(dynamic) reduction(min : bad) if (ex == Exec::parallel)
    for (int p = 0; p < npts; ++p) {
      for (const PolyVec* d : diffs)
        for (const MPoly& coord : *d)
          if (coord.eval(points[p]) != 0) bad = std::min(bad, p);
    }
    if (ex == Exec::serial) {
      bad = npts;
      for (int p = 0; p < npts && bad == npts; ++p)
        for (const PolyVec* d : diffs)
          for (const MPoly& coord : *d)
            if (coord.eval(points[p]) != 0) bad = p;
    }
    if (bad < npts) {
      ok = false;
      witness = "identity difference is nonzero at sample point " + std::to_string(bad);
    }
    rep.checks.push_back(
        {"identity_transfer", "symbolic identities hold at rational points", ok, witness});
  }

  return rep;
}

Subspace nucleus(const FormalLoop& l, Exec ex) {
  const int n = l.dim();
  if (n == 0) return Subspace::zero(0);
  PolyVec w = symbolic_point(l, 0, 3);
  PolyVec x = symbolic_point(l, 1, 3);
  PolyVec y = symbolic_point(l, 2, 3);
  PolyVec assoc = loop_associator(l, w, x, y, ex);

  // The associator is linear in w; rows are indexed by residual monomial and
  // output coordinate, columns by the w coordinate.
  std::map<std::pair<MPoly::Exponents, int>, Vec> rows;
  for (int r = 0; r < n; ++r)
    for (const auto& [e, c] : assoc[r].terms()) {
      if (MPoly::block_degree(e, 0, n) != 1)
        throw Error(Errc::verification_failed, "associator is not linear in its first argument");
      int k = -1;
      for (int i = 0; i < n; ++i)
        if (e[i] == 1) {
          k = i;
          break;
        }
      MPoly::Exponents residual = e;
      for (int i = 0; i < n; ++i) residual[i] = 0;
      auto [it, fresh] = rows.emplace(std::make_pair(residual, r), Vec());
      if (fresh) it->second = zero_vec(n);
      it->second[k] += c;
    }
  if (rows.empty()) return l.algebra().full_space();
  std::vector<Vec> stacked;
  for (auto& [key, row] : rows)
    if (!is_zero(row)) stacked.push_back(std::move(row));
  if (stacked.empty()) return l.algebra().full_space();
  return kernel(Matrix::from_rows(stacked, n));
}

GkResult gk_test(const FormalLoop& l, int k, Exec ex) {
  if (k < 2) throw Error(Errc::bad_k, "gk test needs k >= 2");
  GkResult res;
  res.k = k;
  res.parenthesization = "left-normed";
  const int pts = k + 2;
  PolyVec w = symbolic_point(l, 0, pts);
  for (int i = 1; i < k; ++i) w = loop_commutator(l, w, symbolic_point(l, i, pts), ex);
  PolyVec assoc =
      loop_associator(l, w, symbolic_point(l, k, pts), symbolic_point(l, k + 1, pts), ex);
  res.pass = polyvec_zero(assoc);
  if (!res.pass) res.witness = first_nonzero_coord(assoc, l, pts);
  return res;
}

Subspace commutator_subloop_span(const FormalLoop& l, int k, Exec ex) {
  if (k != 2 && k != 3) throw Error(Errc::bad_k, "commutator subloop span supports k in {2, 3}");
  const int n = l.dim();
  std::vector<Vec> gens;
  auto collect = [&](const PolyVec& word) {
    for (const auto& [e, vec] : coefficient_vectors(word)) gens.push_back(vec);
  };
  if (k == 2) {
    PolyVec x = symbolic_point(l, 0, 2), y = symbolic_point(l, 1, 2);
    collect(loop_commutator(l, x, y, ex));
  } else {
    PolyVec x = symbolic_point(l, 0, 3), y = symbolic_point(l, 1, 3), z = symbolic_point(l, 2, 3);
    collect(loop_commutator(l, loop_commutator(l, x, y, ex), z, ex));
    collect(loop_commutator(l, x, loop_commutator(l, y, z, ex), ex));
  }
  Subspace span = Subspace::span(n, gens);
  SeriesReport series = lower_central_series(l.algebra());
  if (!(span == series.term(k)))
    throw Error(Errc::verification_failed,
                "commutator subloop span disagrees with M^" + std::to_string(k));
  return span;
}

// ---------------------------------------------------------------------------
// Semidirect loop pairs

namespace {

// action(r) g = g + sum_t sum_j E_t[i][j] r_t g_j
template <class T>
std::vector<T> apply_action(const std::vector<Matrix>& gens, const std::vector<T>& r,
                            const std::vector<T>& g, const T& zero) {
  std::vector<T> out = g;
  for (size_t t = 0; t < gens.size(); ++t)
    for (int i = 0; i < gens[t].rows(); ++i)
      for (int j = 0; j < gens[t].cols(); ++j)
        if (gens[t].at(i, j) != 0) out[i] = out[i] + r[t] * g[j] * gens[t].at(i, j);
  return out;
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> ext_product(const FormalLoop& q, const FormalLoop& g,
                                                      const std::vector<Matrix>& gens,
                                                      const std::pair<std::vector<T>, std::vector<T>>& p1,
                                                      const std::pair<std::vector<T>, std::vector<T>>& p2,
                                                      const T& zero, bool parallel) {
  std::vector<T> rq = g_product(q, p1.first, p2.first, zero, parallel);
  std::vector<T> twisted = apply_action(gens, p2.first, p1.second, zero);
  std::vector<T> rg = g_product(g, twisted, p2.second, zero, parallel);
  return {std::move(rq), std::move(rg)};
}

template <class T>
std::pair<std::vector<T>, std::vector<T>> ext_inverse(const FormalLoop& q, const FormalLoop& g,
                                                      const std::vector<Matrix>& gens,
                                                      const std::pair<std::vector<T>, std::vector<T>>& p,
                                                      const T& zero) {
  std::vector<T> rq = gv_neg(p.first);
  std::vector<T> rg = gv_neg(apply_action(gens, rq, p.second, zero));
  return {std::move(rq), std::move(rg)};
}

}  // namespace

LoopExtension::LoopExtension(FormalLoop q, FormalLoop g, std::vector<Matrix> action_gens, Exec ex)
    : q_(std::move(q)), g_(std::move(g)), action_gens_(std::move(action_gens)) {
  const int dq = q_.dim(), dg = g_.dim();
  const bool par = ex == Exec::parallel;
  if (!check_identities(g_.algebra()).is_lie())
    throw Error(Errc::extension_spec_violation, "g must be a group (its algebra must pass Jacobi)");
  if (static_cast<int>(action_gens_.size()) != dq)
    throw Error(Errc::extension_spec_violation, "action needs one generator matrix per q coordinate");
  for (const Matrix& e : action_gens_)
    if (e.rows() != dg || e.cols() != dg)
      throw Error(Errc::extension_spec_violation, "action generator matrices must be square on g");

  // Invertibility: the deviation from the identity must be nilpotent as a
  // symbolic matrix in r.
  {
    const int nv = dq;
    std::vector<std::vector<MPoly>> nmat(dg, std::vector<MPoly>(dg, MPoly(nv)));
    for (int t = 0; t < dq; ++t)
      for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j)
          if (action_gens_[t].at(i, j) != 0)
            nmat[i][j] = nmat[i][j] + MPoly::variable(nv, t) * action_gens_[t].at(i, j);
    auto mat_mul = [&](const auto& a, const auto& b) {
      std::vector<std::vector<MPoly>> r(dg, std::vector<MPoly>(dg, MPoly(nv)));
      for (int i = 0; i < dg; ++i)
        for (int kk = 0; kk < dg; ++kk)
          for (int j = 0; j < dg; ++j)
            if (!a[i][kk].is_zero() && !b[kk][j].is_zero())
              r[i][j] = r[i][j] + a[i][kk] * b[kk][j];
      return r;
    };
    auto mat_zero = [&](const auto& a) {
      for (int i = 0; i < dg; ++i)
        for (int j = 0; j < dg; ++j)
          if (!a[i][j].is_zero()) return false;
      return true;
    };
    auto power = nmat;
    bool nil = mat_zero(power);
    for (int p = 1; p <= dg && !nil; ++p) {
      nil = mat_zero(power);
      if (!nil) power = mat_mul(power, nmat);
    }
    nil = nil || mat_zero(power);
    if (!nil)
      throw Error(Errc::action_not_automorphism,
                  "action deviation from the identity is not nilpotent; invertibility not certified");
  }

  // The action preserves the g product, symbolically in (r, u, v).
  {
    const int nv = dq + 2 * dg;
    std::vector<MPoly> rr, uu, vv;
    for (int t = 0; t < dq; ++t) rr.push_back(MPoly::variable(nv, t));
    for (int i = 0; i < dg; ++i) uu.push_back(MPoly::variable(nv, dq + i));
    for (int i = 0; i < dg; ++i) vv.push_back(MPoly::variable(nv, dq + dg + i));
    MPoly zc(nv);
    std::vector<MPoly> lhs =
        g_product(g_, apply_action(action_gens_, rr, uu, zc), apply_action(action_gens_, rr, vv, zc),
                  zc, par);
    std::vector<MPoly> rhs = apply_action(action_gens_, rr, g_product(g_, uu, vv, zc, par), zc);
    if (!gv_zero(gv_sub(lhs, rhs)))
      throw Error(Errc::action_not_automorphism, "action does not preserve the g product");
  }

  // Trivial on associator values of q.
  for (const Vec& w : jacobian_ideal(q_.algebra()).basis()) {
    Matrix acc(dg, dg);
    for (int t = 0; t < dq; ++t)
      if (w[t] != 0) acc = acc + action_gens_[t] * w[t];
    if (!acc.is_zero())
      throw Error(Errc::action_not_associator_trivial,
                  "action is nontrivial on an associator value of q");
  }

  // Moufang identity and {e} x G in the nucleus, on symbolic pair points.
  {
    const int pd = dq + dg;
    const int nv = 3 * pd;
    MPoly zc(nv);
    auto pair_point = [&](int p) {
      std::pair<PolyVec, PolyVec> pt;
      for (int i = 0; i < dq; ++i) pt.first.push_back(MPoly::variable(nv, p * pd + i));
      for (int i = 0; i < dg; ++i) pt.second.push_back(MPoly::variable(nv, p * pd + dq + i));
      return pt;
    };
    auto p1 = pair_point(0), p2 = pair_point(1), p3 = pair_point(2);
    auto mul = [&](const auto& a, const auto& b) {
      return ext_product(q_, g_, action_gens_, a, b, zc, par);
    };
    auto lhs = mul(mul(p1, p2), mul(p3, p1));
    auto rhs = mul(p1, mul(mul(p2, p3), p1));
    if (!gv_zero(gv_sub(lhs.first, rhs.first)) || !gv_zero(gv_sub(lhs.second, rhs.second)))
      throw Error(Errc::verification_failed, "pair product fails the Moufang identity");

    auto e_g = pair_point(0);
    for (int i = 0; i < dq; ++i) e_g.first[i] = MPoly(nv);  // q part pinned to the identity
    auto a1 = mul(mul(e_g, p2), p3);
    auto a2 = ext_inverse(q_, g_, action_gens_, mul(e_g, mul(p2, p3)), zc);
    auto assoc = mul(a1, a2);
    if (!gv_zero(assoc.first) || !gv_zero(assoc.second))
      throw Error(Errc::verification_failed, "{identity} x G is not contained in the nucleus");
  }
}

std::pair<Vec, Vec> LoopExtension::product(const std::pair<Vec, Vec>& p1,
                                           const std::pair<Vec, Vec>& p2) const {
  return ext_product(q_, g_, action_gens_, p1, p2, Rat(0), false);
}

std::pair<Vec, Vec> LoopExtension::inverse(const std::pair<Vec, Vec>& p) const {
  return ext_inverse(q_, g_, action_gens_, p, Rat(0));
}

}  // namespace malcev
