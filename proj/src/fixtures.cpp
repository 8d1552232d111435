#include "malcev/fixtures.hpp"

#include <array>

#include "malcev/errors.hpp"
#include "malcev/extensions.hpp"

namespace malcev {

namespace {

using Entry = std::tuple<int, int, Vec>;

Vec axis(int dim, int i, long c) {
  Vec v = zero_vec(dim);
  v[i] = c;
  return v;
}

MalcevAlgebra make_h3() {
  return MalcevAlgebra({"e1", "e2", "e3"}, {{0, 1, axis(3, 2, 1)}}, {0, 1}, "h3");
}

MalcevAlgebra make_sl2() {
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h on basis (e, h, f).
  std::vector<Entry> br = {
      {0, 1, axis(3, 0, -2)},
      {0, 2, axis(3, 1, 1)},
      {1, 2, axis(3, 2, -2)},
  };
  return MalcevAlgebra({"e", "h", "f"}, br, {}, "sl2");
}

MalcevAlgebra make_so3() {
  std::vector<Entry> br = {
      {0, 1, axis(3, 2, 1)},   // [x,y] = z
      {0, 2, axis(3, 1, -1)},  // [x,z] = -y
      {1, 2, axis(3, 0, 1)},   // [y,z] = x
  };
  return MalcevAlgebra({"x", "y", "z"}, br, {}, "so3");
}

MalcevAlgebra make_p1() {
  // [a,t] = a, [b,t] = -b, [a,b] = c on basis (t, a, b, c).
  std::vector<Entry> br = {
      {0, 1, axis(4, 1, -1)},  // [t,a] = -a
      {0, 2, axis(4, 2, 1)},   // [t,b] = b
      {1, 2, axis(4, 3, 1)},   // [a,b] = c
  };
  return MalcevAlgebra({"t", "a", "b", "c"}, br, {}, "P1");
}

// Octonion basis products by Cayley-Dickson doubling; (index, sign) pairs.
std::array<std::array<std::pair<int, int>, 8>, 8> octonion_table() {
  std::vector<std::vector<std::pair<int, int>>> t = {{{0, 1}}};
  for (int n = 1; n < 8; n *= 2) {
    std::vector<std::vector<std::pair<int, int>>> d(2 * n,
                                                    std::vector<std::pair<int, int>>(2 * n));
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) {
        if (i < n && j < n) {
          d[i][j] = t[i][j];
        } else if (i < n && j >= n) {
          auto [k, s] = t[j - n][i];  // (x,0)(0,y) = (0, yx)
          d[i][j] = {k + n, s};
        } else if (i >= n && j < n) {
          auto [k, s] = t[i - n][j];  // (0,x)(y,0) = (0, x conj(y))
          d[i][j] = {k + n, j == 0 ? s : -s};
        } else {
          auto [k, s] = t[j - n][i - n];  // (0,x)(0,y) = (-conj(y) x, 0)
          d[i][j] = {k, j - n == 0 ? -s : s};
        }
      }
    t = std::move(d);
  }
  std::array<std::array<std::pair<int, int>, 8>, 8> out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out[i][j] = t[i][j];
  return out;
}

MalcevAlgebra make_m7() {
  auto mul = octonion_table();
  std::vector<std::string> labels;
  for (int i = 1; i <= 7; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<Entry> br;
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      // [e_i, e_j] = e_i e_j - e_j e_i = 2 e_i e_j for distinct imaginary units.
      auto [k, s] = mul[i][j];
      if (k == 0) continue;
      br.emplace_back(i - 1, j - 1, axis(7, k - 1, 2L * s));
    }
  return MalcevAlgebra(labels, br, {}, "M7");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"h3", "sl2", "so3", "P1", "M7", "FNM-2-3", "FNM-3-3", "FAC-3-4"};
}

MalcevAlgebra make_fixture(const std::string& name) {
  if (name == "h3") return make_h3();
  if (name == "sl2") return make_sl2();
  if (name == "so3") return make_so3();
  if (name == "P1") return make_p1();
  if (name == "M7") return make_m7();
  if (name == "FNM-2-3") return free_nilpotent_malcev(2, 3).renamed("FNM-2-3");
  if (name == "FNM-3-3") return free_nilpotent_malcev(3, 3).renamed("FNM-3-3");
  if (name == "FAC-3-4") return free_anticommutative_nilpotent(3, 4).renamed("FAC-3-4");
  throw Error(Errc::usage_error, "unknown fixture \"" + name + "\"");
}

}  // namespace malcev
