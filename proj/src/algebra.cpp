#include "malcev/algebra.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <set>

#include "malcev/errors.hpp"

namespace malcev {

SparseVec SparseVec::from_dense(const Vec& v) {
  SparseVec s;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.terms.emplace_back(static_cast<int>(i), v[i]);
  return s;
}

Vec SparseVec::to_dense(int dim) const {
  Vec v = zero_vec(dim);
  for (const auto& [i, c] : terms) v[i] = c;
  return v;
}

namespace {

// Unsorted accumulation buffer; normalized once per defect evaluation. Keeps
// the hot identity sweeps free of dim-sized allocations.
using Accum = std::vector<std::pair<int, Rat>>;

void axpy(Accum& acc, const SparseVec& v, const Rat& coeff) {
  if (coeff == 0) return;
  for (const auto& [i, c] : v.terms) acc.emplace_back(i, coeff * c);
}

SparseVec normalize(Accum acc) {
  std::sort(acc.begin(), acc.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : acc) {
    if (!out.terms.empty() && out.terms.back().first == i)
      out.terms.back().second += c;
    else
      out.terms.emplace_back(i, c);
  }
  std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
  return out;
}

const SparseVec kEmptySparse{};

}  // namespace

MalcevAlgebra::MalcevAlgebra(std::vector<std::string> labels,
                             const std::vector<std::tuple<int, int, Vec>>& brackets,
                             std::vector<int> generators, std::string name)
    : dim_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      name_(std::move(name)),
      generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second)
      throw Error(Errc::parse_error, "duplicate basis label \"" + l + "\"");
  for (int g : generators_)
    if (g < 0 || g >= dim_) throw Error(Errc::parse_error, "generator index out of range");

  c_.assign(static_cast<size_t>(dim_) * dim_, SparseVec{});
  for (const auto& [i, j, value] : brackets) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_ || i >= j)
      throw Error(Errc::parse_error, "bracket entries must have i < j in range");
    if (static_cast<int>(value.size()) != dim_)
      throw Error(Errc::dimension_mismatch, "bracket value has wrong length");
    if (!c_[flat(i, j)].empty())
      throw Error(Errc::duplicate_bracket,
                  "bracket [" + labels_[i] + "," + labels_[j] + "] given twice");
    SparseVec sv = SparseVec::from_dense(value);
    if (sv.empty()) continue;
    SparseVec neg = sv;
    for (auto& [idx, c] : neg.terms) c = -c;
    c_[flat(i, j)] = std::move(sv);
    c_[flat(j, i)] = std::move(neg);
  }

  // Jacobian table over sorted triples.
  if (dim_ >= 3) {
    jtab_.resize(static_cast<size_t>(dim_) * (dim_ - 1) * (dim_ - 2) / 6);
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          Accum acc;
          for (const auto& [r, c] : bracket_basis(i, j).terms) axpy(acc, bracket_basis(r, k), c);
          for (const auto& [r, c] : bracket_basis(j, k).terms) axpy(acc, bracket_basis(r, i), c);
          for (const auto& [r, c] : bracket_basis(k, i).terms) axpy(acc, bracket_basis(r, j), c);
          jtab_[triple_index(i, j, k)] = normalize(std::move(acc));
        }
  }
}

int MalcevAlgebra::label_index(const std::string& label) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

size_t MalcevAlgebra::triple_index(int i, int j, int k) const {
  // Lexicographic rank of (i, j, k) with i < j < k < dim.
  const long n = dim_;
  auto c2 = [](long x) { return x >= 2 ? x * (x - 1) / 2 : 0L; };
  auto c3 = [](long x) { return x >= 3 ? x * (x - 1) * (x - 2) / 6 : 0L; };
  long rank = c3(n) - c3(n - i) + c2(n - i - 1) - c2(n - j) + (k - j - 1);
  return static_cast<size_t>(rank);
}

const SparseVec* MalcevAlgebra::jacobian_basis(int i, int j, int k, int& sign) const {
  if (i == j || j == k || i == k) return nullptr;
  sign = 1;
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  if (j > k) {
    std::swap(j, k);
    sign = -sign;
  }
  if (i > j) {
    std::swap(i, j);
    sign = -sign;
  }
  return &jtab_[triple_index(i, j, k)];
}

Vec MalcevAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw Error(Errc::dimension_mismatch, "bracket arguments must match the algebra dimension");
  Vec r = zero_vec(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const SparseVec& row = bracket_basis(i, j);
      if (row.empty()) continue;
      Rat coeff = x[i] * y[j];
      for (const auto& [idx, c] : row.terms) r[idx] += coeff * c;
    }
  }
  return r;
}

Vec MalcevAlgebra::jacobian(const Vec& x, const Vec& y, const Vec& z) const {
  Vec r = bracket(bracket(x, y), z);
  r = add(r, bracket(bracket(y, z), x));
  r = add(r, bracket(bracket(z, x), y));
  return r;
}

Matrix MalcevAlgebra::right_mult(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error(Errc::dimension_mismatch, "element must match the algebra dimension");
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int r = 0; r < dim_; ++r) {
      if (x[r] == 0) continue;
      for (const auto& [idx, c] : bracket_basis(j, r).terms) m.at(idx, j) += x[r] * c;
    }
  return m;
}

MalcevAlgebra MalcevAlgebra::renamed(std::string name) const {
  MalcevAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool MalcevAlgebra::operator==(const MalcevAlgebra& o) const {
  return dim_ == o.dim_ && labels_ == o.labels_ && c_ == o.c_ && generators_ == o.generators_ &&
         name_ == o.name_;
}

// ---------------------------------------------------------------------------
// Identity verification

const char* check_name(Check c) {
  switch (c) {
    case Check::anticommutative: return "anticommutative";
    case Check::jacobi: return "jacobi";
    case Check::malcev: return "malcev";
    case Check::malcev_linearized: return "malcev_linearized";
  }
  return "?";
}

bool IdentityReport::malcev_ok() const {
  return passes(Check::anticommutative) && passes(Check::malcev) &&
         passes(Check::malcev_linearized);
}

bool IdentityReport::is_lie() const { return malcev_ok() && passes(Check::jacobi); }

namespace {

// Smallest index failing `ok`, or -1. Blocked so the parallel path can stop
// early once a block contains a failure; results match the serial scan.
template <class Ok>
long min_fail(long count, Exec ex, Ok&& ok) {
  if (ex == Exec::serial) {
    for (long t = 0; t < count; ++t)
      if (!ok(t)) return t;
    return -1;
  }
  const long block = 1 << 15;
  for (long start = 0; start < count; start += block) {
    const long end = std::min(count, start + block);
    long found = LONG_MAX;
#pragma omp parallel for schedule(dynamic, 128) reduction(min : found)
    for (long t = start; t < end; ++t)
      if (!ok(t)) found = std::min(found, t);
    if (found != LONG_MAX) return found;
  }
  return -1;
}

SparseVec malcev_defect_sparse(const MalcevAlgebra& m, int i, int j, int k) {
  Accum acc;
  int s1;
  if (const SparseVec* j1 = m.jacobian_basis(i, j, k, s1))
    for (const auto& [r, c] : j1->terms) axpy(acc, m.bracket_basis(r, i), s1 < 0 ? -c : c);
  for (const auto& [r, c] : m.bracket_basis(i, k).terms) {
    int s2;
    if (const SparseVec* j2 = m.jacobian_basis(i, j, r, s2)) axpy(acc, *j2, s2 < 0 ? c : -c);
  }
  return normalize(std::move(acc));
}

SparseVec malcev_lin_defect_sparse(const MalcevAlgebra& m, int i1, int i2, int j, int k) {
  Accum acc;
  int s;
  if (const SparseVec* j1 = m.jacobian_basis(i1, j, k, s))
    for (const auto& [r, c] : j1->terms) axpy(acc, m.bracket_basis(r, i2), s < 0 ? -c : c);
  if (const SparseVec* j2 = m.jacobian_basis(i2, j, k, s))
    for (const auto& [r, c] : j2->terms) axpy(acc, m.bracket_basis(r, i1), s < 0 ? -c : c);
  for (const auto& [r, c] : m.bracket_basis(i2, k).terms)
    if (const SparseVec* jj = m.jacobian_basis(i1, j, r, s)) axpy(acc, *jj, s < 0 ? c : -c);
  for (const auto& [r, c] : m.bracket_basis(i1, k).terms)
    if (const SparseVec* jj = m.jacobian_basis(i2, j, r, s)) axpy(acc, *jj, s < 0 ? c : -c);
  return normalize(std::move(acc));
}

}  // namespace

IdentityReport check_identities(const MalcevAlgebra& m, Exec ex) {
  IdentityReport rep;
  const int n = m.dim();

  // Anticommutativity is enforced at construction; the scan is re-assurance
  // for algebras arriving through quotients and file parses.
  {
    bool ok = true;
    Witness w;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i; j < n && ok; ++j) {
        Accum acc;
        axpy(acc, m.bracket_basis(i, j), Rat(1));
        axpy(acc, m.bracket_basis(j, i), Rat(1));
        SparseVec d = normalize(std::move(acc));
        if (!d.empty()) {
          ok = false;
          w = Witness{{i, j}, d.to_dense(n)};
        }
      }
    rep.verdicts[Check::anticommutative] = ok;
    if (!ok) rep.witnesses[Check::anticommutative] = std::move(w);
  }

  // Jacobi on sorted triples (J is alternating, so this is complete).
  {
    const long triples = n >= 3 ? static_cast<long>(n) * (n - 1) * (n - 2) / 6 : 0;
    std::vector<std::array<int, 3>> unrank;
    unrank.reserve(triples);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) unrank.push_back({i, j, k});
    long bad = min_fail(triples, ex, [&](long t) {
      auto [i, j, k] = unrank[t];
      int s;
      return m.jacobian_basis(i, j, k, s)->empty();
    });
    rep.verdicts[Check::jacobi] = bad < 0;
    if (bad >= 0) {
      auto [i, j, k] = unrank[bad];
      int s;
      rep.witnesses[Check::jacobi] =
          Witness{{i, j, k}, m.jacobian_basis(i, j, k, s)->to_dense(n)};
    }
  }

  // Defining identity with x at basis elements.
  {
    const long count = static_cast<long>(n) * n * n;
    long bad = min_fail(count, ex, [&](long t) {
      int i = static_cast<int>(t / (static_cast<long>(n) * n));
      int j = static_cast<int>((t / n) % n);
      int k = static_cast<int>(t % n);
      return malcev_defect_sparse(m, i, j, k).empty();
    });
    rep.verdicts[Check::malcev] = bad < 0;
    if (bad >= 0) {
      int i = static_cast<int>(bad / (static_cast<long>(n) * n));
      int j = static_cast<int>((bad / n) % n);
      int k = static_cast<int>(bad % n);
      rep.witnesses[Check::malcev] = Witness{{i, j, k}, malcev_defect_sparse(m, i, j, k).to_dense(n)};
    }
  }

  // Full x-linearization on basis quadruples; symmetric in (x1, x2), so
  // scanning i1 <= i2 still finds the lexicographically minimal witness.
  {
    std::vector<std::pair<int, int>> pairs;
    for (int i1 = 0; i1 < n; ++i1)
      for (int i2 = i1; i2 < n; ++i2) pairs.emplace_back(i1, i2);
    const long count = static_cast<long>(pairs.size()) * n * n;
    long bad = min_fail(count, ex, [&](long t) {
      auto [i1, i2] = pairs[t / (static_cast<long>(n) * n)];
      int j = static_cast<int>((t / n) % n);
      int k = static_cast<int>(t % n);
      return malcev_lin_defect_sparse(m, i1, i2, j, k).empty();
    });
    rep.verdicts[Check::malcev_linearized] = bad < 0;
    if (bad >= 0) {
      auto [i1, i2] = pairs[bad / (static_cast<long>(n) * n)];
      int j = static_cast<int>((bad / n) % n);
      int k = static_cast<int>(bad % n);
      rep.witnesses[Check::malcev_linearized] =
          Witness{{i1, i2, j, k}, malcev_lin_defect_sparse(m, i1, i2, j, k).to_dense(n)};
    }
  }

  return rep;
}

Vec jacobi_defect(const MalcevAlgebra& m, const Vec& x, const Vec& y, const Vec& z) {
  return m.jacobian(x, y, z);
}

Vec malcev_defect(const MalcevAlgebra& m, const Vec& x, const Vec& y, const Vec& z) {
  return sub(m.bracket(m.jacobian(x, y, z), x), m.jacobian(x, y, m.bracket(x, z)));
}

Vec malcev_linearized_defect(const MalcevAlgebra& m, const Vec& x1, const Vec& x2, const Vec& y,
                             const Vec& z) {
  Vec r = m.bracket(m.jacobian(x1, y, z), x2);
  r = add(r, m.bracket(m.jacobian(x2, y, z), x1));
  r = sub(r, m.jacobian(x1, y, m.bracket(x2, z)));
  r = sub(r, m.jacobian(x2, y, m.bracket(x1, z)));
  return r;
}

// ---------------------------------------------------------------------------
// Subspace operations

Subspace subspace_bracket(const MalcevAlgebra& m, const Subspace& a, const Subspace& b) {
  if (a.ambient() != m.dim() || b.ambient() != m.dim())
    throw Error(Errc::ambient_mismatch, "subspaces do not live in the given algebra");
  std::vector<Vec> gens;
  for (const Vec& x : a.basis())
    for (const Vec& y : b.basis()) gens.push_back(m.bracket(x, y));
  return Subspace::span(m.dim(), gens);
}

Subspace ideal_closure(const MalcevAlgebra& m, const Subspace& gens) {
  Subspace w = gens;
  Subspace full = m.full_space();
  for (int iter = 0; iter <= m.dim(); ++iter) {
    Subspace next = w.sum(subspace_bracket(m, w, full));
    if (next == w) return w;
    w = std::move(next);
  }
  return w;
}

Subspace subalgebra_generated(const MalcevAlgebra& m, const Subspace& gens) {
  Subspace w = gens;
  for (int iter = 0; iter <= m.dim(); ++iter) {
    Subspace next = w.sum(subspace_bracket(m, w, w));
    if (next == w) return w;
    w = std::move(next);
  }
  return w;
}

const Subspace& SeriesReport::term(int k) const {
  if (k < 1) throw Error(Errc::bad_k, "series index starts at 1");
  if (k >= stabilized_at) return omega;
  return terms[k - 1];
}

namespace {

SeriesReport series_impl(const MalcevAlgebra& m, const Subspace& start) {
  SeriesReport rep;
  std::vector<Subspace> terms{start};
  const int cap = 4 * m.dim() + 8;
  int plateau_start = 0;  // 1-based; 0 = none yet
  for (int n = 2;; ++n) {
    if (n > cap)
      throw Error(Errc::series_not_stabilized, "lower central series did not stabilize");
    Subspace t = Subspace::zero(m.dim());
    for (int i = 1; i < n; ++i)
      t = t.sum(subspace_bracket(m, terms[i - 1], terms[n - i - 1]));
    terms.push_back(std::move(t));
    int s = n;
    while (s > 1 && terms[s - 2] == terms[n - 1]) --s;
    plateau_start = s;
    // Once the chain is constant on [s, n] with n >= 2s+1, every later term
    // repeats the plateau value, so the series is certified stable.
    if (s < n && (n >= 2 * s + 1 || terms[n - 1].is_zero())) break;
  }
  rep.omega = terms[plateau_start - 1];
  rep.stabilized_at = plateau_start;
  rep.nilpotent = rep.omega.is_zero();
  if (rep.nilpotent) rep.nilpotency_class = plateau_start - 1;
  rep.terms.assign(terms.begin(), terms.begin() + plateau_start);
  if (!rep.omega.is_zero()) rep.terms.push_back(rep.omega);  // confirming repeat

  // Derived series; a plateau here is stable outright.
  std::vector<Subspace> derived{start};
  for (int iter = 0; iter <= m.dim() + 1; ++iter) {
    Subspace next = subspace_bracket(m, derived.back(), derived.back());
    if (next == derived.back()) break;
    derived.push_back(std::move(next));
    if (derived.back().is_zero()) break;
  }
  rep.solvable = derived.back().is_zero();
  rep.derived = std::move(derived);
  return rep;
}

}  // namespace

SeriesReport lower_central_series(const MalcevAlgebra& m) {
  return series_impl(m, m.full_space());
}

SeriesReport series_of_subspace(const MalcevAlgebra& m, const Subspace& w) {
  return series_impl(m, w);
}

Subspace lie_center(const MalcevAlgebra& m) {
  const int n = m.dim();
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool any = false;
      for (int k = 0; k < n && !any; ++k) {
        int s;
        const SparseVec* jv = m.jacobian_basis(k, i, j, s);
        any = jv && !jv->empty();
      }
      if (!any) continue;
      // Map x -> J(x, b_i, b_j); rows indexed by output coordinate.
      Matrix a(n, n);
      for (int k = 0; k < n; ++k) {
        int s;
        if (const SparseVec* jv = m.jacobian_basis(k, i, j, s))
          for (const auto& [r, c] : jv->terms) a.at(r, k) = s < 0 ? -c : c;
      }
      for (int r = 0; r < n; ++r) {
        Vec row = a.row(r);
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  if (rows.empty()) return m.full_space();
  return kernel(Matrix::from_rows(rows, n));
}

Subspace jacobian_ideal(const MalcevAlgebra& m) {
  const int n = m.dim();
  std::vector<Vec> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        int s;
        const SparseVec* jv = m.jacobian_basis(i, j, k, s);
        if (jv && !jv->empty()) gens.push_back(jv->to_dense(n));
      }
  return ideal_closure(m, Subspace::span(n, gens));
}

Subspace centralizer(const MalcevAlgebra& m, const Subspace& a) {
  if (a.ambient() != m.dim())
    throw Error(Errc::ambient_mismatch, "subspace does not live in the given algebra");
  std::vector<Vec> rows;
  for (const Vec& v : a.basis()) {
    Matrix r = m.right_mult(v);  // x -> [x, v]
    for (int i = 0; i < m.dim(); ++i) {
      Vec row = r.row(i);
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return m.full_space();
  return kernel(Matrix::from_rows(rows, m.dim()));
}

namespace {

// J(w, b_i, b_j) = 0 for all rows w of the subspace and all basis pairs.
bool j_annihilates(const MalcevAlgebra& m, const Subspace& w, NlkResult* fail) {
  const int n = m.dim();
  for (const Vec& row : w.basis())
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Accum acc;
        for (int r = 0; r < n; ++r) {
          if (row[r] == 0) continue;
          int s;
          if (const SparseVec* jv = m.jacobian_basis(r, i, j, s))
            axpy(acc, *jv, s < 0 ? -row[r] : row[r]);
        }
        SparseVec d = normalize(std::move(acc));
        if (!d.empty()) {
          if (fail) {
            fail->witness_w = row;
            fail->witness_i = i;
            fail->witness_j = j;
            fail->defect = d.to_dense(n);
          }
          return false;
        }
      }
  return true;
}

}  // namespace

NlkResult nlk_test(const MalcevAlgebra& m, int k) {
  if (k < 2) throw Error(Errc::bad_k, "nlk test needs k >= 2");
  NlkResult res;
  res.k = k;
  SeriesReport series = lower_central_series(m);
  res.pass = j_annihilates(m, series.term(k), &res);
  return res;
}

std::optional<int> nl_class(const MalcevAlgebra& m) {
  SeriesReport series = lower_central_series(m);
  if (!j_annihilates(m, series.omega, nullptr)) return std::nullopt;
  for (int k = 2; k < series.stabilized_at; ++k)
    if (j_annihilates(m, series.term(k), nullptr)) return k;
  return std::max(2, series.stabilized_at);
}

QuotientResult quotient(const MalcevAlgebra& m, const Subspace& ideal) {
  if (ideal.ambient() != m.dim())
    throw Error(Errc::ambient_mismatch, "ideal does not live in the given algebra");
  if (!ideal.contains(subspace_bracket(m, ideal, m.full_space())))
    throw Error(Errc::not_an_ideal, "subspace is not closed under bracketing with the algebra");

  const std::vector<int> comp = ideal.complement_coords();
  const int qdim = static_cast<int>(comp.size());

  Matrix projection(qdim, m.dim());
  for (int j = 0; j < m.dim(); ++j) {
    Vec res = ideal.reduce(unit_vec(m.dim(), j));
    for (int q = 0; q < qdim; ++q) projection.at(q, j) = res[comp[q]];
  }

  std::vector<std::string> labels;
  for (int c : comp) labels.push_back(m.labels()[c]);
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int a = 0; a < qdim; ++a)
    for (int b = a + 1; b < qdim; ++b) {
      Vec value = projection.apply(m.bracket(unit_vec(m.dim(), comp[a]), unit_vec(m.dim(), comp[b])));
      if (!is_zero(value)) brackets.emplace_back(a, b, value);
    }
  std::vector<int> gens;
  for (int g : m.generators()) {
    auto it = std::find(comp.begin(), comp.end(), g);
    if (it != comp.end()) gens.push_back(static_cast<int>(it - comp.begin()));
  }
  MalcevAlgebra q(labels, brackets, gens,
                  m.name().empty() ? std::string{} : m.name() + "/ideal");

  // Projection must be a homomorphism on all basis pairs.
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      Vec lhs = projection.apply(m.bracket(unit_vec(m.dim(), i), unit_vec(m.dim(), j)));
      Vec rhs = q.bracket(projection.col(i), projection.col(j));
      if (lhs != rhs)
        throw Error(Errc::verification_failed, "quotient projection is not a homomorphism");
    }
  return QuotientResult{std::move(q), std::move(projection)};
}

MalcevAlgebra direct_sum(const MalcevAlgebra& a, const MalcevAlgebra& b) {
  std::vector<std::string> labels = a.labels();
  std::set<std::string> used(labels.begin(), labels.end());
  for (std::string l : b.labels()) {
    while (used.count(l)) l += "'";
    used.insert(l);
    labels.push_back(l);
  }
  const int da = a.dim();
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) {
      const SparseVec& row = a.bracket_basis(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(da + b.dim());
      for (const auto& [idx, c] : row.terms) v[idx] = c;
      brackets.emplace_back(i, j, std::move(v));
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      const SparseVec& row = b.bracket_basis(i, j);
      if (row.empty()) continue;
      Vec v = zero_vec(da + b.dim());
      for (const auto& [idx, c] : row.terms) v[da + idx] = c;
      brackets.emplace_back(da + i, da + j, std::move(v));
    }
  std::vector<int> gens = a.generators();
  for (int g : b.generators()) gens.push_back(da + g);
  return MalcevAlgebra(labels, brackets, gens, "");
}

}  // namespace malcev
