#include "malcev/rational.hpp"

#include <cctype>

#include "malcev/errors.hpp"

namespace malcev {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    neg = t[0] == '-';
    t = t.substr(1);
  }
  std::string num = t, den = "1";
  if (auto slash = t.find('/'); slash != std::string::npos) {
    num = t.substr(0, slash);
    den = t.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::bad_rational, "not a rational literal: \"" + s + "\"");
  if (mpz_class(den) == 0)
    throw Error(Errc::bad_rational, "zero denominator in \"" + s + "\"");
  Rat q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

Vec zero_vec(int dim) { return Vec(dim, Rat(0)); }

Vec unit_vec(int dim, int i) {
  Vec v = zero_vec(dim);
  v[i] = 1;
  return v;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Vec& a, const Rat& c) {
  Vec r = a;
  for (Rat& x : r) x *= c;
  return r;
}

Vec negate(const Vec& a) { return scale(a, Rat(-1)); }

std::string vec_to_string(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat c = v[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += rat_to_string(c) + " ";
    out += i < labels.size() ? labels[i] : "#" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace malcev
