#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "malcev/errors.hpp"
#include "malcev/mpoly.hpp"

using namespace malcev;
using testutil::Lcg;

TEST_CASE("product of sum and difference") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = (x + y) * (x - y);
  MPoly expected = x * x - y * y;
  CHECK(p == expected);
  CHECK(p.term_count() == 2);
}

TEST_CASE("evaluation") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * x - y * y;
  CHECK(p.eval({Rat(3), Rat(2)}) == 5);
}

TEST_CASE("canonical zero") {
  MPoly x = MPoly::variable(1, 0);
  MPoly z = x - x;
  CHECK(z.is_zero());
  CHECK(z == MPoly(1));
  CHECK((x * Rat(0)).is_zero());
}

TEST_CASE("substitute then evaluate agrees with evaluate after substitution") {
  Lcg gen;
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * x * y - y * y * Rat(3) + x * rat(1, 2) + MPoly::constant(2, rat(-2, 7));
  // replacements in 3 fresh variables
  MPoly u = MPoly::variable(3, 0), v = MPoly::variable(3, 1), w = MPoly::variable(3, 2);
  std::vector<MPoly> repl = {u * v + w, v - u * rat(5, 3)};
  MPoly q = p.substitute(repl);
  for (int trial = 0; trial < 30; ++trial) {
    Vec point = gen.vec(3);
    Vec inner = {repl[0].eval(point), repl[1].eval(point)};
    CHECK(q.eval(point) == p.eval(inner));
  }
}

TEST_CASE("variable mismatch is an error") {
  MPoly x = MPoly::variable(2, 0);
  MPoly other = MPoly::variable(3, 0);
  CHECK_THROWS_AS((void)(x + other), Error);
  CHECK_THROWS_AS((void)x.eval({Rat(1)}), Error);
}

TEST_CASE("total degree cap is enforced") {
  MPoly x = MPoly::variable(1, 0);
  MPoly p = MPoly::constant(1, Rat(1));
  for (int i = 0; i < 33; ++i) p = p * x;  // degree 33
  CHECK(p.total_degree() == 33);
  CHECK_THROWS_AS((void)(p * p), Error);  // degree 66 > 64
}

TEST_CASE("rendering") {
  MPoly x = MPoly::variable(2, 0), y = MPoly::variable(2, 1);
  MPoly p = x * y * rat(-1, 2) + x * x;
  CHECK(p.to_string({"x", "y"}) == "-1/2 x*y + x^2");
}
