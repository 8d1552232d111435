#include "malcev/upoly.hpp"

#include <algorithm>

#include "malcev/errors.hpp"

namespace malcev {

UPoly::UPoly(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(Vec{c}); }

UPoly UPoly::x() { return UPoly(Vec{Rat(0), Rat(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UPoly::coeff(int i) const {
  static const Rat zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

Rat UPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

UPoly UPoly::operator+(const UPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const {
  Vec r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const UPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UPoly();
  Vec r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (c_[i] != 0 && o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
  return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rat& c) const {
  Vec r = c_;
  for (Rat& x : r) x *= c;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw Error(Errc::dimension_mismatch, "polynomial division by zero");
  Vec rem = c_;
  Vec quot(rem.size() > d.c_.size() ? rem.size() - d.c_.size() + 1 : 1, Rat(0));
  const int dd = d.degree();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat f = rem[i] / d.c_.back();
    quot[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  Vec r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / c_.back());
}

Rat UPoly::eval(const Rat& x) const {
  Rat r(0);
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) r = r * x + c_[i];
  return r;
}

Matrix UPoly::eval(const Matrix& a) const {
  Matrix r(a.rows(), a.cols());
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    r = r * a;
    for (int d = 0; d < a.rows(); ++d) r.at(d, d) += c_[i];
  }
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) out += rat_to_string(a);
    if (i > 0) {
      if (a != 1) out += " ";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

UPoly char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "characteristic polynomial of a non-square matrix");
  const int n = a.rows();
  Vec c(n + 1, Rat(0));
  c[n] = 1;
  Matrix m = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Rat ck = -m.trace() / Rat(k);
    c[n - k] = ck;
    for (int d = 0; d < n; ++d) m.at(d, d) += ck;
  }
  return UPoly(std::move(c));
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& value) {
  mpz_class n = abs(value);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      if (d * d != n) divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Integer-coefficient image of p (denominators cleared, content removed).
std::vector<mpz_class> primitive_integer_coeffs(const UPoly& p) {
  mpz_class l(1);
  for (const Rat& c : p.coeffs()) l = lcm(l, c.get_den());
  std::vector<mpz_class> z;
  mpz_class content(0);
  for (const Rat& c : p.coeffs()) {
    Rat scaled = c * Rat(l);
    z.push_back(scaled.get_num());
    content = gcd(content, z.back());
  }
  if (content > 1)
    for (mpz_class& v : z) v /= content;
  return z;
}

}  // namespace

RootSplit rational_roots(const UPoly& p) {
  RootSplit out;
  UPoly cur = p;
  if (cur.is_zero() || cur.degree() == 0) {
    out.rootless = cur;
    return out;
  }
  // Roots at zero first.
  int zero_mult = 0;
  while (cur.degree() > 0 && cur.coeff(0) == 0) {
    cur = cur.divmod(UPoly::x()).first;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);

  while (cur.degree() > 0) {
    std::vector<mpz_class> z = primitive_integer_coeffs(cur);
    std::vector<mpz_class> nums = positive_divisors(z.front());
    std::vector<mpz_class> dens = positive_divisors(z.back());
    bool found = false;
    for (const mpz_class& num : nums) {
      for (const mpz_class& den : dens) {
        for (int sign : {1, -1}) {
          Rat r(sign * num, den);
          r.canonicalize();
          if (cur.eval(r) != 0) continue;
          int mult = 0;
          UPoly lin(Vec{-r, Rat(1)});
          while (true) {
            auto [q, rem] = cur.divmod(lin);
            if (!rem.is_zero()) break;
            cur = q;
            ++mult;
          }
          out.roots.emplace_back(r, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.rootless = cur;
  return out;
}

EigenDecomposition eigen_decompose(const Matrix& a) {
  UPoly chi = char_poly(a);
  RootSplit rs = rational_roots(chi);
  if (rs.rootless.degree() > 0)
    throw NonRationalSpectrumError(rs.rootless.monic().to_string());
  EigenDecomposition out;
  int total = 0;
  for (const auto& [value, mult] : rs.roots) {
    Matrix shifted = a;
    for (int d = 0; d < a.rows(); ++d) shifted.at(d, d) -= value;
    EigenPair pair{value, mult, kernel(shifted)};
    total += pair.space.dim();
    out.pairs.push_back(std::move(pair));
  }
  out.diagonalizable = total == a.rows();
  return out;
}

namespace {

// Extended Euclid: returns (g, u, v) with u a + v b = g, g monic.
std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b;
  UPoly s0 = UPoly::constant(Rat(1)), s1;
  UPoly t0, t1 = UPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    UPoly s = s0 - q * s1;
    UPoly t = t0 - q * t1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
    t0 = t1;
    t1 = t;
  }
  Rat lead = r0.leading();
  if (lead != 0 && lead != 1) {
    Rat inv = 1 / lead;
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

}  // namespace

JordanSplit jordan_additive_split(const Matrix& a) {
  if (a.rows() != a.cols()) throw Error(Errc::dimension_mismatch, "Jordan split of a non-square matrix");
  UPoly chi = char_poly(a);
  RootSplit rs = rational_roots(chi);
  if (rs.rootless.degree() > 0)
    throw NonRationalSpectrumError(rs.rootless.monic().to_string());

  // CRT: p = lambda_i mod (x - lambda_i)^{m_i}; plus p = 0 mod x when 0 is
  // not an eigenvalue, so that p has zero constant term.
  std::vector<std::pair<UPoly, UPoly>> congruences;  // (residue, modulus)
  bool zero_is_root = false;
  for (const auto& [value, mult] : rs.roots) {
    if (value == 0) zero_is_root = true;
    UPoly lin(Vec{-value, Rat(1)});
    UPoly mod = UPoly::constant(Rat(1));
    for (int i = 0; i < mult; ++i) mod = mod * lin;
    congruences.emplace_back(UPoly::constant(value), mod);
  }
  if (!zero_is_root) congruences.emplace_back(UPoly(), UPoly::x());

  UPoly residue = congruences.front().first;
  UPoly modulus = congruences.front().second;
  for (size_t i = 1; i < congruences.size(); ++i) {
    const auto& [ri, mi] = congruences[i];
    auto [g, u, v] = ext_gcd(modulus, mi);
    // residue' = residue * v * mi + ri * u * modulus  (mod modulus * mi)
    UPoly merged = residue * (v * mi) + ri * (u * modulus);
    modulus = modulus * mi;
    residue = merged.divmod(modulus).second;
  }

  JordanSplit out;
  out.p = residue;
  out.semisimple = residue.eval(a);
  out.nilpotent = a - out.semisimple;
  return out;
}

}  // namespace malcev
