#include "malcev/mpoly.hpp"

#include <numeric>

#include "malcev/errors.hpp"

namespace malcev {

MPoly MPoly::constant(int nvars, const Rat& c) {
  MPoly p(nvars);
  if (c != 0) p.terms_.emplace(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw Error(Errc::variable_mismatch, "variable index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), Rat(1));
  return p;
}

void MPoly::check_vars(const MPoly& o) const {
  if (nvars_ != o.nvars_)
    throw Error(Errc::variable_mismatch, "operands have different variable counts");
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = std::accumulate(e.begin(), e.end(), 0);
    if (t > d) d = t;
  }
  return d;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  check_vars(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  check_vars(o);
  MPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  check_vars(o);
  MPoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      int total = 0;
      for (int i = 0; i < nvars_; ++i) {
        e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
        total += e[i];
      }
      if (total > kMaxTotalDegree)
        throw Error(Errc::degree_overflow,
                    "product exceeds the total-degree cap of " + std::to_string(kMaxTotalDegree));
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r(nvars_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

MPoly MPoly::substitute(const std::vector<MPoly>& replacements) const {
  if (static_cast<int>(replacements.size()) != nvars_)
    throw Error(Errc::variable_mismatch, "substitution needs one polynomial per variable");
  int out_vars = replacements.empty() ? 0 : replacements.front().nvars();
  for (const MPoly& p : replacements)
    if (p.nvars() != out_vars)
      throw Error(Errc::variable_mismatch, "replacement polynomials disagree on variable count");
  MPoly result(out_vars);
  for (const auto& [e, c] : terms_) {
    MPoly term = MPoly::constant(out_vars, c);
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) term = term * replacements[i];
    result = result + term;
  }
  return result;
}

Rat MPoly::eval(const Vec& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error(Errc::variable_mismatch, "evaluation point has wrong length");
  Rat r(0);
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    r += t;
  }
  return r;
}

int MPoly::block_degree(const Exponents& e, int first, int count) {
  int d = 0;
  for (int i = first; i < first + count; ++i) d += e[i];
  return d;
}

std::string MPoly::to_string(const std::vector<std::string>& var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
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
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(var_names.size()) ? var_names[i] : "v" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += rat_to_string(a);
    } else {
      if (a != 1) out += rat_to_string(a) + " ";
      out += mono;
    }
  }
  return out;
}

}  // namespace malcev
