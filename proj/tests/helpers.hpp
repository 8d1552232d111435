#ifndef MALCEV_TESTS_HELPERS_HPP
#define MALCEV_TESTS_HELPERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "malcev/algebra.hpp"
#include "malcev/fixtures.hpp"

namespace testutil {

using namespace malcev;

// Deterministic generator for property-style tests.
struct Lcg {
  uint64_t state = 0x853c49e6748fea9bULL;
  uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  }
  long uniform(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
  Rat small_rat() { return rat(uniform(-9, 9), uniform(1, 9)); }
  Vec vec(int dim) {
    Vec v(dim);
    for (Rat& x : v) x = small_rat();
    return v;
  }
  Matrix matrix(int rows, int cols) {
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = small_rat();
    return m;
  }
};

inline Vec unit_of(const MalcevAlgebra& m, const std::string& label) {
  return unit_vec(m.dim(), m.label_index(label));
}

inline Subspace span_labels(const MalcevAlgebra& m, const std::vector<std::string>& labels) {
  std::vector<Vec> gens;
  for (const std::string& l : labels) gens.push_back(unit_of(m, l));
  return Subspace::span(m.dim(), gens);
}

// [y,x] = y+z, [z,x] = z: solvable Lie algebra whose R_x has a nontrivial
// Jordan split.
inline MalcevAlgebra split_fixture() {
  Vec yz = zero_vec(3);
  yz[1] = -1;
  yz[2] = -1;  // [x,y] = -(y+z)
  Vec zz = zero_vec(3);
  zz[2] = -1;  // [x,z] = -z
  return MalcevAlgebra({"x", "y", "z"}, {{0, 1, yz}, {0, 2, zz}}, {}, "split-fixture");
}

// [y,x] = z, [z,x] = -y: R_x has eigenvalues +-i.
inline MalcevAlgebra nonrational_fixture() {
  Vec a = zero_vec(3);
  a[2] = -1;  // [x,y] = -z
  Vec b = zero_vec(3);
  b[1] = 1;  // [x,z] = y
  return MalcevAlgebra({"x", "y", "z"}, {{0, 1, a}, {0, 2, b}}, {}, "nonrational-fixture");
}

// sl2 acting on its natural 2-dim module, optionally with a trivial line.
inline MalcevAlgebra sl2_semidirect_v2(bool with_trivial_line) {
  std::vector<std::string> labels = {"e", "h", "f", "u", "v"};
  if (with_trivial_line) labels.push_back("z0");
  const int n = static_cast<int>(labels.size());
  auto ax = [&](int i, long c) {
    Vec v = zero_vec(n);
    v[i] = c;
    return v;
  };
  std::vector<std::tuple<int, int, Vec>> br = {
      {0, 1, ax(0, -2)},  // [e,h] = -2e
      {0, 2, ax(1, 1)},   // [e,f] = h
      {1, 2, ax(2, -2)},  // [h,f] = -2f
      {0, 4, ax(3, 1)},   // [e,v] = u
      {1, 3, ax(3, 1)},   // [h,u] = u
      {1, 4, ax(4, -1)},  // [h,v] = -v
      {2, 3, ax(4, 1)},   // [f,u] = v
  };
  return MalcevAlgebra(labels, br, {}, with_trivial_line ? "sl2xV2z" : "sl2xV2");
}

}  // namespace testutil

#endif
