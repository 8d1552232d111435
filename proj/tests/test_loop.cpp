#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "malcev/errors.hpp"
#include "malcev/extensions.hpp"
#include "malcev/loop.hpp"

using namespace malcev;
using testutil::Lcg;
using testutil::unit_of;

TEST_CASE("loop construction accepts class <= 3 Malcev algebras only") {
  CHECK_NOTHROW(FormalLoop(make_fixture("h3")));
  CHECK_NOTHROW(FormalLoop(make_fixture("FNM-3-3")));
  CHECK_THROWS_AS(FormalLoop(make_fixture("FAC-3-4")), Error);       // not Malcev
  CHECK_THROWS_AS(FormalLoop(free_nilpotent_malcev(3, 4)), Error);   // class 4
  CHECK_THROWS_AS(FormalLoop(make_fixture("P1")), Error);            // not nilpotent
}

TEST_CASE("product examples") {
  FormalLoop h3(make_fixture("h3"));
  Vec p = loop_product(h3, unit_vec(3, 0), unit_vec(3, 1));
  CHECK(p == Vec{Rat(1), Rat(1), rat(1, 2)});

  FormalLoop f(make_fixture("FNM-3-3"));
  const MalcevAlgebra& m = f.algebra();
  Vec x1 = unit_vec(15, 0), x2 = unit_vec(15, 1);
  Vec b = m.bracket(x1, x2);
  Vec expected = add(x1, x2);
  expected = add(expected, scale(b, rat(1, 2)));
  expected = sub(expected, scale(m.bracket(b, x1), rat(1, 12)));
  expected = add(expected, scale(m.bracket(b, x2), rat(1, 12)));
  CHECK(loop_product(f, x1, x2) == expected);

  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec x = gen.vec(15);
    CHECK(loop_product(f, x, zero_vec(15)) == x);
    CHECK(loop_product(f, zero_vec(15), x) == x);
    CHECK(is_zero(loop_product(f, x, loop_inverse(f, x))));
  }
}

TEST_CASE("divisions solve and re-substitute") {
  FormalLoop f(make_fixture("FNM-3-3"));
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec a = gen.vec(15), b = gen.vec(15);
    Vec z = left_divide(f, a, b);
    CHECK(loop_product(f, a, z) == b);
    Vec w = right_divide(f, b, a);
    CHECK(loop_product(f, w, a) == b);
  }
  FormalLoop h3(make_fixture("h3"));
  Vec prod = loop_product(h3, unit_vec(3, 0), unit_vec(3, 1));
  CHECK(left_divide(h3, unit_vec(3, 0), prod) == unit_vec(3, 1));
}

TEST_CASE("commutators") {
  FormalLoop h3(make_fixture("h3"));
  CHECK(loop_commutator(h3, unit_vec(3, 0), unit_vec(3, 1)) == unit_vec(3, 2));

  FormalLoop f(make_fixture("FNM-3-3"));
  PolyVec x = symbolic_point(f, 0, 2), y = symbolic_point(f, 1, 2);
  CHECK(polyvec_zero(loop_commutator(f, x, x)));

  // {x,y} - [x,y] lands in M^3, and its degree-3 monomials are really there
  PolyVec diff = loop_commutator(f, x, y);
  Vec vx(15), vy(15);
  Lcg gen;
  vx = gen.vec(15);
  vy = gen.vec(15);
  Vec num = sub(loop_commutator(f, vx, vy), f.algebra().bracket(vx, vy));
  CHECK(lower_central_series(f.algebra()).term(3).contains(num));
}

TEST_CASE("associator equals one sixth of the Jacobian") {
  FormalLoop f(make_fixture("FNM-3-3"));
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec x = gen.vec(15), y = gen.vec(15), z = gen.vec(15);
    CHECK(loop_associator(f, x, y, z) == scale(f.algebra().jacobian(x, y, z), rat(1, 6)));
  }
  PolyVec sx = symbolic_point(f, 0, 2), sy = symbolic_point(f, 1, 2);
  CHECK(polyvec_zero(loop_associator(f, sx, sx, sy)));

  FormalLoop h3(make_fixture("h3"));
  for (int t = 0; t < 5; ++t)
    CHECK(is_zero(loop_associator(h3, gen.vec(3), gen.vec(3), gen.vec(3))));
}

TEST_CASE("symbolic identity suite") {
  for (const std::string& name : {"h3", "FNM-2-3", "FNM-3-3"}) {
    CAPTURE(name);
    FormalLoop l(make_fixture(name));
    LoopIdentityReport rep = check_loop_identities(l);
    for (const LoopCheck& c : rep.checks) {
      if (c.name == "associativity") continue;
      CAPTURE(c.name);
      CHECK(c.pass);
    }
    const LoopCheck* assoc = rep.find("associativity");
    REQUIRE(assoc);
    // class-2 loops are groups; the nonzero Jacobian of FNM-3-3 forces
    // non-associativity, with the witness polynomial recorded
    if (name == "FNM-3-3") {
      CHECK_FALSE(assoc->pass);
      CHECK_FALSE(assoc->witness.empty());
    } else {
      CHECK(assoc->pass);
    }
  }
}

TEST_CASE("nucleus equals the Lie center") {
  for (const std::string& name : {"h3", "FNM-2-3", "FNM-3-3"}) {
    CAPTURE(name);
    FormalLoop l(make_fixture(name));
    Subspace nuc = nucleus(l);
    CHECK(nuc == lie_center(l.algebra()));
  }
  FormalLoop f(make_fixture("FNM-3-3"));
  CHECK(nucleus(f).dim() == 12);
  FormalLoop h3(make_fixture("h3"));
  CHECK(nucleus(h3) == h3.algebra().full_space());
}

TEST_CASE("gk test agrees with the algebra-side nlk test") {
  for (const std::string& name : {"h3", "FNM-2-3", "FNM-3-3"}) {
    CAPTURE(name);
    FormalLoop l(make_fixture(name));
    for (int k = 2; k <= 3; ++k) {
      CAPTURE(k);
      CHECK(gk_test(l, k).pass == nlk_test(l.algebra(), k).pass);
    }
  }
  CHECK_THROWS_AS((void)gk_test(FormalLoop(make_fixture("h3")), 1), Error);
}

TEST_CASE("gk verdicts are parenthesization independent at k = 3") {
  for (const std::string& name : {"h3", "FNM-3-3"}) {
    CAPTURE(name);
    FormalLoop l(make_fixture(name));
    GkResult left = gk_test(l, 3);
    // right-assembled commutator {x, {y, z}} with two more symbolic points
    PolyVec x = symbolic_point(l, 0, 5), y = symbolic_point(l, 1, 5), z = symbolic_point(l, 2, 5);
    PolyVec w = loop_commutator(l, x, loop_commutator(l, y, z));
    PolyVec assoc = loop_associator(l, w, symbolic_point(l, 3, 5), symbolic_point(l, 4, 5));
    CHECK(left.pass == polyvec_zero(assoc));
  }
}

TEST_CASE("commutator subloop spans recover the series terms") {
  FormalLoop h3(make_fixture("h3"));
  CHECK(commutator_subloop_span(h3, 2) == testutil::span_labels(h3.algebra(), {"e3"}));
  CHECK(commutator_subloop_span(h3, 3).is_zero());

  FormalLoop f(make_fixture("FNM-3-3"));
  SeriesReport s = lower_central_series(f.algebra());
  CHECK(commutator_subloop_span(f, 2) == s.term(2));
  CHECK(commutator_subloop_span(f, 2).dim() == 12);
  CHECK(commutator_subloop_span(f, 3) == s.term(3));
  CHECK(commutator_subloop_span(f, 3).dim() == 9);
  CHECK_THROWS_AS((void)commutator_subloop_span(f, 4), Error);
}

namespace {

LoopExtension make_h3_extension() {
  FormalLoop q(make_fixture("h3"));
  MalcevAlgebra plane({"g1", "g2"}, {});
  FormalLoop g(plane);
  std::vector<Matrix> gens(3, Matrix(2, 2));
  gens[0].at(1, 0) = 1;  // action(r) = I + r_1 E, E nilpotent
  return LoopExtension(std::move(q), std::move(g), std::move(gens));
}

}  // namespace

TEST_CASE("loop extension: unipotent action on an abelian group") {
  LoopExtension ext = make_h3_extension();  // construction runs the symbolic checks

  // Eq-style product on rational pairs: (r1,g1)(r2,g2) = (r1 r2, g1^{r2} g2)
  Lcg gen;
  FormalLoop q(make_fixture("h3"));
  for (int t = 0; t < 10; ++t) {
    std::pair<Vec, Vec> p1{gen.vec(3), gen.vec(2)}, p2{gen.vec(3), gen.vec(2)};
    auto prod = ext.product(p1, p2);
    CHECK(prod.first == loop_product(q, p1.first, p2.first));
    Vec twisted = p1.second;
    twisted[1] += p2.first[0] * p1.second[0];
    CHECK(prod.second == add(twisted, p2.second));

    auto inv = ext.inverse(p1);
    auto unit = ext.product(p1, inv);
    CHECK(is_zero(unit.first));
    CHECK(is_zero(unit.second));
  }
}

TEST_CASE("loop extension: trivial action is the direct product") {
  FormalLoop q(make_fixture("FNM-2-3"));
  MalcevAlgebra plane({"g1", "g2"}, {});
  FormalLoop g(plane);
  LoopExtension ext(q, g, std::vector<Matrix>(5, Matrix(2, 2)));
  Lcg gen;
  std::pair<Vec, Vec> p1{gen.vec(5), gen.vec(2)}, p2{gen.vec(5), gen.vec(2)};
  auto prod = ext.product(p1, p2);
  CHECK(prod.first == loop_product(q, p1.first, p2.first));
  CHECK(prod.second == add(p1.second, p2.second));
}

TEST_CASE("loop extension: trivial g leaves q unchanged") {
  FormalLoop q(make_fixture("h3"));
  FormalLoop g(MalcevAlgebra({}, {}));
  LoopExtension ext(q, g, std::vector<Matrix>(3, Matrix(0, 0)));
  Lcg gen;
  std::pair<Vec, Vec> p1{gen.vec(3), {}}, p2{gen.vec(3), {}};
  CHECK(ext.product(p1, p2).first == loop_product(q, p1.first, p2.first));
}

TEST_CASE("loop extension rejections") {
  // action must be trivial on associator values of q
  FormalLoop q(make_fixture("FNM-3-3"));
  MalcevAlgebra plane({"g1", "g2"}, {});
  Subspace j = jacobian_ideal(q.algebra());
  REQUIRE(j.dim() == 1);
  int coord = j.pivots()[0];
  std::vector<Matrix> gens(15, Matrix(2, 2));
  gens[coord].at(1, 0) = 1;
  CHECK_THROWS_AS(LoopExtension(q, FormalLoop(plane), gens), Error);

  // non-unipotent action families are not certified invertible
  FormalLoop h3q(make_fixture("h3"));
  MalcevAlgebra line({"g1"}, {});
  std::vector<Matrix> scalegens(3, Matrix(1, 1));
  scalegens[0].at(0, 0) = 1;
  CHECK_THROWS_AS(LoopExtension(h3q, FormalLoop(line), scalegens), Error);

  // g must be a group
  FormalLoop f33(make_fixture("FNM-3-3"));
  CHECK_THROWS_AS(LoopExtension(h3q, f33, std::vector<Matrix>(3, Matrix(15, 15))), Error);
}
