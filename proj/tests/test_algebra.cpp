#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "malcev/errors.hpp"
#include "malcev/extensions.hpp"

using namespace malcev;
using testutil::Lcg;
using testutil::span_labels;
using testutil::unit_of;

TEST_CASE("bracket is the bilinear extension of the table") {
  MalcevAlgebra p1 = make_fixture("P1");
  CHECK(p1.bracket(unit_of(p1, "a"), unit_of(p1, "t")) == unit_of(p1, "a"));
  CHECK(p1.bracket(unit_of(p1, "b"), unit_of(p1, "t")) == negate(unit_of(p1, "b")));
  CHECK(p1.bracket(unit_of(p1, "a"), unit_of(p1, "b")) == unit_of(p1, "c"));

  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(sl2.bracket(unit_of(sl2, "e"), unit_of(sl2, "f")) == unit_of(sl2, "h"));

  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec x = gen.vec(p1.dim());
    CHECK(is_zero(p1.bracket(x, x)));
  }
}

TEST_CASE("jacobian: cyclic form and alternation") {
  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(is_zero(sl2.jacobian(unit_of(sl2, "h"), unit_of(sl2, "e"), unit_of(sl2, "f"))));

  MalcevAlgebra m7 = make_fixture("M7");
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec x = gen.vec(7), y = gen.vec(7), z = gen.vec(7);
    CHECK(is_zero(m7.jacobian(x, x, y)));
    CHECK(m7.jacobian(x, y, z) == negate(m7.jacobian(y, x, z)));
    CHECK(m7.jacobian(x, y, z) == negate(m7.jacobian(x, z, y)));
  }

  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  Vec x1 = unit_of(f33, "x1"), x2 = unit_of(f33, "x2"), x3 = unit_of(f33, "x3");
  Vec j = f33.jacobian(x1, x2, x3);
  CHECK_FALSE(is_zero(j));
  Vec expected = f33.bracket(f33.bracket(x1, x2), x3);
  expected = add(expected, f33.bracket(f33.bracket(x2, x3), x1));
  expected = add(expected, f33.bracket(f33.bracket(x3, x1), x2));
  CHECK(j == expected);
}

TEST_CASE("identity suite across fixtures") {
  for (const std::string& name : {"sl2", "so3", "h3", "P1", "FNM-2-3", "FNM-3-3"}) {
    IdentityReport rep = check_identities(make_fixture(name));
    CAPTURE(name);
    CHECK(rep.passes(Check::anticommutative));
    CHECK(rep.passes(Check::malcev));
    CHECK(rep.passes(Check::malcev_linearized));
    if (name != "FNM-3-3" && name != "FNM-2-3") CHECK(rep.passes(Check::jacobi));
  }
}

TEST_CASE("M7 is Malcev but not Lie, with a reproducible Jacobi witness") {
  MalcevAlgebra m7 = make_fixture("M7");
  IdentityReport rep = check_identities(m7);
  CHECK(rep.passes(Check::anticommutative));
  CHECK_FALSE(rep.passes(Check::jacobi));
  CHECK(rep.passes(Check::malcev));
  CHECK(rep.passes(Check::malcev_linearized));
  CHECK(rep.malcev_ok());
  CHECK_FALSE(rep.is_lie());

  const Witness& w = rep.witnesses.at(Check::jacobi);
  REQUIRE(w.tuple.size() == 3);
  Vec again = jacobi_defect(m7, unit_vec(7, w.tuple[0]), unit_vec(7, w.tuple[1]),
                            unit_vec(7, w.tuple[2]));
  CHECK(again == w.defect);
  CHECK_FALSE(is_zero(w.defect));
}

TEST_CASE("FAC(3,4) fails the Malcev linearization with a degree-4 witness") {
  MalcevAlgebra fac = make_fixture("FAC-3-4");
  CHECK(fac.dim() == 45);
  IdentityReport rep = check_identities(fac);
  CHECK(rep.passes(Check::anticommutative));
  CHECK_FALSE(rep.malcev_ok());
  CHECK_FALSE(rep.passes(Check::malcev_linearized));
  const Witness& w = rep.witnesses.at(Check::malcev_linearized);
  // degree-4 block starts after 3 + 3 + 9 monomials
  for (int i = 0; i < 15; ++i) CHECK(w.defect[i] == 0);
  CHECK_FALSE(is_zero(w.defect));
  Vec again = malcev_linearized_defect(fac, unit_vec(45, w.tuple[0]), unit_vec(45, w.tuple[1]),
                                       unit_vec(45, w.tuple[2]), unit_vec(45, w.tuple[3]));
  CHECK(again == w.defect);
}

TEST_CASE("subspace bracket") {
  MalcevAlgebra h3 = make_fixture("h3");
  CHECK(subspace_bracket(h3, h3.full_space(), h3.full_space()) == span_labels(h3, {"e3"}));
  MalcevAlgebra p1 = make_fixture("P1");
  CHECK(subspace_bracket(p1, span_labels(p1, {"a"}), span_labels(p1, {"b"})) ==
        span_labels(p1, {"c"}));
  CHECK(subspace_bracket(p1, p1.full_space(), Subspace::zero(4)).is_zero());
}

TEST_CASE("ideal closure and generated subalgebra") {
  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(ideal_closure(sl2, span_labels(sl2, {"e"})) == sl2.full_space());
  CHECK(subalgebra_generated(sl2, span_labels(sl2, {"h"})) == span_labels(sl2, {"h"}));

  MalcevAlgebra h3 = make_fixture("h3");
  CHECK(ideal_closure(h3, span_labels(h3, {"e3"})) == span_labels(h3, {"e3"}));
  CHECK(subalgebra_generated(h3, span_labels(h3, {"e1", "e2"})) == h3.full_space());
  CHECK(subalgebra_generated(h3, Subspace::zero(3)).is_zero());

  MalcevAlgebra p1 = make_fixture("P1");
  CHECK(ideal_closure(p1, span_labels(p1, {"a"})) == span_labels(p1, {"a", "c"}));
}

TEST_CASE("lower central series of the named fixtures") {
  MalcevAlgebra h3 = make_fixture("h3");
  SeriesReport sh = lower_central_series(h3);
  REQUIRE(sh.terms.size() == 3);
  CHECK(sh.terms[0] == h3.full_space());
  CHECK(sh.terms[1] == span_labels(h3, {"e3"}));
  CHECK(sh.terms[2].is_zero());
  CHECK(sh.nilpotent);
  CHECK(sh.nilpotency_class == 2);
  CHECK(sh.solvable);

  MalcevAlgebra p1 = make_fixture("P1");
  SeriesReport sp = lower_central_series(p1);
  REQUIRE(sp.terms.size() == 3);
  CHECK(sp.terms[0] == p1.full_space());
  CHECK(sp.terms[1] == span_labels(p1, {"a", "b", "c"}));
  CHECK(sp.terms[2] == span_labels(p1, {"a", "b", "c"}));
  CHECK(sp.omega == span_labels(p1, {"a", "b", "c"}));
  CHECK(sp.stabilized_at == 2);
  CHECK_FALSE(sp.nilpotent);
  CHECK(sp.solvable);

  MalcevAlgebra m7 = make_fixture("M7");
  SeriesReport sm = lower_central_series(m7);
  CHECK(sm.omega == m7.full_space());
  CHECK(sm.stabilized_at == 1);
  CHECK_FALSE(sm.nilpotent);
  CHECK_FALSE(sm.solvable);
}

TEST_CASE("series invariants on all fixtures") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    MalcevAlgebra m = make_fixture(name);
    SeriesReport s = lower_central_series(m);
    for (size_t i = 0; i + 1 < s.terms.size(); ++i) CHECK(s.terms[i].contains(s.terms[i + 1]));
    const int len = static_cast<int>(s.terms.size());
    for (int i = 1; i <= len; ++i)
      for (int j = 1; i + j <= len + 1 && j <= len; ++j)
        CHECK(s.term(i + j).contains(subspace_bracket(m, s.term(i), s.term(j))));
  }
}

TEST_CASE("lie center") {
  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(lie_center(sl2) == sl2.full_space());
  MalcevAlgebra m7 = make_fixture("M7");
  CHECK(lie_center(m7).is_zero());

  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  Subspace center = lie_center(f33);
  CHECK(center.dim() == 12);
  CHECK(center == lower_central_series(f33).term(2));

  // Lie center is everything exactly when Jacobi passes.
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    MalcevAlgebra m = make_fixture(name);
    bool jac = check_identities(m).passes(Check::jacobi);
    CHECK((lie_center(m) == m.full_space()) == jac);
  }
}

TEST_CASE("jacobian ideal") {
  CHECK(jacobian_ideal(make_fixture("sl2")).is_zero());
  CHECK(jacobian_ideal(make_fixture("h3")).is_zero());
  MalcevAlgebra m7 = make_fixture("M7");
  CHECK(jacobian_ideal(m7) == m7.full_space());

  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  Subspace j = jacobian_ideal(f33);
  CHECK(j.dim() == 1);
  Vec jv = f33.jacobian(unit_of(f33, "x1"), unit_of(f33, "x2"), unit_of(f33, "x3"));
  CHECK(j.contains(jv));
}

TEST_CASE("Filippov and the omega specialization") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    MalcevAlgebra m = make_fixture(name);
    if (!check_identities(m).malcev_ok()) continue;
    Subspace jm = jacobian_ideal(m);
    CHECK(subspace_bracket(m, jm, lie_center(m)).is_zero());
    if (nl_class(m)) CHECK(subspace_bracket(m, jm, lower_central_series(m).omega).is_zero());
  }
}

TEST_CASE("nlk membership") {
  for (const std::string& name : {"sl2", "so3", "h3", "P1"}) {
    CAPTURE(name);
    MalcevAlgebra m = make_fixture(name);
    for (int k = 2; k <= 5; ++k) CHECK(nlk_test(m, k).pass);
  }
  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  CHECK(nlk_test(f33, 2).pass);

  MalcevAlgebra m7 = make_fixture("M7");
  for (int k = 2; k <= 5; ++k) {
    NlkResult res = nlk_test(m7, k);
    CHECK_FALSE(res.pass);
    Vec defect = jacobi_defect(m7, res.witness_w, unit_vec(7, res.witness_i),
                               unit_vec(7, res.witness_j));
    CHECK(defect == res.defect);
    CHECK_FALSE(is_zero(defect));
  }
  CHECK_THROWS_AS((void)nlk_test(m7, 1), Error);
}

TEST_CASE("nlk monotonicity across fixtures") {
  for (const std::string& name : fixture_names()) {
    CAPTURE(name);
    MalcevAlgebra m = make_fixture(name);
    if (!check_identities(m).malcev_ok()) continue;
    bool prev = nlk_test(m, 2).pass;
    for (int k = 3; k <= 6; ++k) {
      bool cur = nlk_test(m, k).pass;
      if (prev) CHECK(cur);
      prev = cur;
    }
  }
}

TEST_CASE("nl_class") {
  CHECK(nl_class(make_fixture("sl2")) == 2);
  CHECK(nl_class(make_fixture("FNM-3-3")) == 2);
  CHECK_FALSE(nl_class(make_fixture("M7")).has_value());
}

TEST_CASE("centralizer") {
  MalcevAlgebra h3 = make_fixture("h3");
  CHECK(centralizer(h3, h3.full_space()) == span_labels(h3, {"e3"}));
  MalcevAlgebra p1 = make_fixture("P1");
  CHECK(centralizer(p1, span_labels(p1, {"t"})) == span_labels(p1, {"t", "c"}));
  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(centralizer(sl2, sl2.full_space()).is_zero());
}

TEST_CASE("quotient") {
  MalcevAlgebra h3 = make_fixture("h3");
  QuotientResult q = quotient(h3, span_labels(h3, {"e3"}));
  CHECK(q.algebra.dim() == 2);
  CHECK(subspace_bracket(q.algebra, q.algebra.full_space(), q.algebra.full_space()).is_zero());

  MalcevAlgebra p1 = make_fixture("P1");
  QuotientResult qp = quotient(p1, span_labels(p1, {"a", "c"}));
  CHECK(qp.algebra.dim() == 2);
  CHECK(qp.algebra.labels() == std::vector<std::string>{"t", "b"});
  Vec bt = qp.algebra.bracket(unit_of(qp.algebra, "b"), unit_of(qp.algebra, "t"));
  CHECK(bt == negate(unit_of(qp.algebra, "b")));

  CHECK_THROWS_AS((void)quotient(h3, span_labels(h3, {"e1"})), Error);

  // projection is a homomorphism on random elements
  Lcg gen;
  for (int t = 0; t < 10; ++t) {
    Vec x = gen.vec(4), y = gen.vec(4);
    CHECK(qp.projection.apply(p1.bracket(x, y)) ==
          qp.algebra.bracket(qp.projection.apply(x), qp.projection.apply(y)));
  }
}

TEST_CASE("direct sum") {
  MalcevAlgebra h3 = make_fixture("h3");
  MalcevAlgebra line({"z"}, {});
  MalcevAlgebra s = direct_sum(h3, line);
  CHECK(s.dim() == 4);
  SeriesReport series = lower_central_series(s);
  CHECK(series.nilpotency_class == 2);

  MalcevAlgebra sl2 = make_fixture("sl2");
  MalcevAlgebra ss = direct_sum(sl2, sl2);
  CHECK(ss.dim() == 6);
  CHECK(jacobian_ideal(ss).is_zero());
  CHECK(check_identities(ss).is_lie());
  // second copy relabeled
  CHECK(ss.label_index("e'") == 3);
}
