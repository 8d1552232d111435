#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "malcev/decomposition.hpp"
#include "malcev/errors.hpp"

using namespace malcev;
using testutil::span_labels;
using testutil::unit_of;

TEST_CASE("jordan split of elements") {
  MalcevAlgebra p1 = make_fixture("P1");
  ElementSplit s = jordan_split_element(p1, unit_of(p1, "t"));
  CHECK(s.semisimple_op == p1.right_mult(unit_of(p1, "t")));
  CHECK(s.nilpotent_op.is_zero());
  CHECK(s.splittable);

  MalcevAlgebra h3 = make_fixture("h3");
  ElementSplit sh = jordan_split_element(h3, unit_of(h3, "e1"));
  CHECK(sh.semisimple_op.is_zero());
  CHECK(sh.nilpotent_op == h3.right_mult(unit_of(h3, "e1")));
  CHECK(sh.splittable);
  CHECK(is_zero(h3.right_mult(sh.inducing_t).col(0)));

  MalcevAlgebra bad = testutil::nonrational_fixture();
  CHECK_THROWS_AS((void)jordan_split_element(bad, unit_of(bad, "x")), NonRationalSpectrumError);
}

TEST_CASE("split step adjoins a toral element") {
  MalcevAlgebra m = testutil::split_fixture();
  SplitStep step = split_step(m, unit_of(m, "x"));
  const MalcevAlgebra& ext = step.extended;
  REQUIRE(ext.dim() == 4);
  CHECK(step.toral_label == "t");
  Vec t = unit_vec(4, 3);
  auto lift = [&](const std::string& l) { return unit_vec(4, ext.label_index(l)); };
  CHECK(ext.bracket(lift("y"), t) == lift("y"));
  CHECK(ext.bracket(lift("z"), t) == lift("z"));
  CHECK(is_zero(ext.bracket(lift("x"), t)));
  // n = x - t acts y -> z, z -> 0
  Vec n = sub(lift("x"), t);
  CHECK(ext.bracket(lift("y"), n) == lift("z"));
  CHECK(is_zero(ext.bracket(lift("z"), n)));

  IdentityReport rep = check_identities(ext);
  CHECK(rep.malcev_ok());
  CHECK(eigen_decompose(ext.right_mult(t)).diagonalizable);
  CHECK(step.p.coeff(0) == 0);

  // extended M^2 = M^2, embedded
  auto embed = [&](const Subspace& s) {
    std::vector<Vec> gens;
    for (const Vec& row : s.basis()) {
      Vec v = row;
      v.push_back(Rat(0));
      gens.push_back(std::move(v));
    }
    return Subspace::span(4, gens);
  };
  SeriesReport base = lower_central_series(m);
  SeriesReport after = lower_central_series(ext);
  CHECK(embed(base.term(2)) == after.term(2));
  for (const Subspace& term : base.terms) {
    Subspace e = embed(term);
    CHECK(e.contains(subspace_bracket(ext, e, ext.full_space())));
  }
  CHECK(lie_center(ext).contains(embed(lie_center(m))));
}

TEST_CASE("split step rejections") {
  MalcevAlgebra h3 = make_fixture("h3");
  CHECK_THROWS_AS((void)split_step(h3, unit_of(h3, "e1")), Error);  // semisimple part 0
  MalcevAlgebra p1 = make_fixture("P1");
  CHECK_THROWS_AS((void)split_step(p1, unit_of(p1, "t")), Error);  // already semisimple
  try {
    (void)split_step(p1, unit_of(p1, "t"));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::already_split);
  }
  MalcevAlgebra bad = testutil::nonrational_fixture();
  CHECK_THROWS_AS((void)split_step(bad, unit_of(bad, "x")), NonRationalSpectrumError);
}

TEST_CASE("weight spaces of P1") {
  MalcevAlgebra p1 = make_fixture("P1");
  Subspace target = span_labels(p1, {"a", "b", "c"});
  WeightDecomposition wd = weight_spaces(p1, {unit_of(p1, "t")}, target);
  REQUIRE(wd.spaces.size() == 3);
  CHECK(wd.spaces[0].weight == Weight{Rat(-1)});
  CHECK(wd.spaces[0].space == span_labels(p1, {"b"}));
  CHECK(wd.spaces[1].weight == Weight{Rat(0)});
  CHECK(wd.spaces[1].space == span_labels(p1, {"c"}));
  CHECK(wd.spaces[2].weight == Weight{Rat(1)});
  CHECK(wd.spaces[2].space == span_labels(p1, {"a"}));

  // [N_1, N_{-1}] = span{c} <= N_0 appears among the containment checks.
  bool found = false;
  for (const ContainmentCheck& c : wd.containments) {
    CHECK(c.applicable);
    CHECK(c.pass);
    if ((c.alpha == Weight{Rat(-1)} && c.beta == Weight{Rat(1)}) ||
        (c.alpha == Weight{Rat(1)} && c.beta == Weight{Rat(-1)}))
      found = true;
  }
  CHECK(found);
}

TEST_CASE("weight spaces degenerate and error cases") {
  MalcevAlgebra p1 = make_fixture("P1");
  Subspace target = span_labels(p1, {"a", "b", "c"});
  WeightDecomposition empty = weight_spaces(p1, {}, target);
  REQUIRE(empty.spaces.size() == 1);
  CHECK(empty.spaces[0].weight.empty());
  CHECK(empty.spaces[0].space == target);

  // zero and dependent toral vectors are dropped before decomposing
  WeightDecomposition dup = weight_spaces(
      p1, {zero_vec(4), unit_of(p1, "t"), scale(unit_of(p1, "t"), Rat(3))}, target);
  CHECK(dup.toral.size() == 1);
  CHECK(dup.spaces.size() == 3);

  Vec mixed = add(unit_of(p1, "a"), unit_of(p1, "b"));
  CHECK_THROWS_AS((void)weight_spaces(p1, {unit_of(p1, "t")}, Subspace::span(4, {mixed})), Error);

  MalcevAlgebra bad = testutil::nonrational_fixture();
  CHECK_THROWS_AS(
      (void)weight_spaces(bad, {unit_of(bad, "x")}, span_labels(bad, {"y", "z"})),
      NonRationalSpectrumError);

  MalcevAlgebra h3 = make_fixture("h3");
  CHECK_THROWS_AS((void)weight_spaces(h3, {unit_of(h3, "e1")}, h3.full_space()), Error);
}

TEST_CASE("levi data verification") {
  MalcevAlgebra p1 = make_fixture("P1");
  LeviData good = make_levi_data(p1, Subspace::zero(4), span_labels(p1, {"t"}),
                                 span_labels(p1, {"a", "b", "c"}));
  CHECK(good.n.dim() == 3);

  CHECK_THROWS_AS((void)make_levi_data(p1, Subspace::zero(4), span_labels(p1, {"t"}),
                                       span_labels(p1, {"a", "b"})),
                  Error);  // not an ideal
  CHECK_THROWS_AS((void)make_levi_data(p1, Subspace::zero(4), span_labels(p1, {"t"}),
                                       span_labels(p1, {"a", "c"})),
                  Error);  // does not sum to the algebra
  CHECK_THROWS_AS((void)make_levi_data(p1, span_labels(p1, {"t"}), span_labels(p1, {"t"}),
                                       span_labels(p1, {"a", "b", "c"})),
                  Error);  // S and T intersect
}

TEST_CASE("theorem1 parts on sl2 semidirect V2") {
  MalcevAlgebra m = testutil::sl2_semidirect_v2(false);
  REQUIRE(check_identities(m).is_lie());
  LeviData levi = make_levi_data(m, span_labels(m, {"e", "h", "f"}), Subspace::zero(5),
                                 span_labels(m, {"u", "v"}));
  Theorem1Parts parts = theorem1_parts(m, levi);
  CHECK(parts.n00.is_zero());
  CHECK(parts.n0 == span_labels(m, {"u", "v"}));
  CHECK(parts.n01 == span_labels(m, {"u", "v"}));
  CHECK(parts.m1 == m.full_space());
  CHECK(parts.nl_k == 2);
  CHECK(parts.all_applicable_pass());
}

TEST_CASE("theorem1 parts with a trivial module line") {
  MalcevAlgebra m = testutil::sl2_semidirect_v2(true);
  REQUIRE(check_identities(m).is_lie());
  LeviData levi = make_levi_data(m, span_labels(m, {"e", "h", "f"}), Subspace::zero(6),
                                 span_labels(m, {"u", "v", "z0"}));
  Theorem1Parts parts = theorem1_parts(m, levi);
  CHECK(parts.n00 == span_labels(m, {"z0"}));
  Subspace sn = subspace_bracket(m, levi.s, levi.n);
  CHECK(sn == span_labels(m, {"u", "v"}));
  CHECK(parts.all_applicable_pass());
}

TEST_CASE("theorem1 parts on P1") {
  MalcevAlgebra p1 = make_fixture("P1");
  LeviData levi = make_levi_data(p1, Subspace::zero(4), span_labels(p1, {"t"}),
                                 span_labels(p1, {"a", "b", "c"}));
  Theorem1Parts parts = theorem1_parts(p1, levi);
  CHECK(parts.n0 == span_labels(p1, {"c"}));
  CHECK(parts.n00 == span_labels(p1, {"c"}));
  CHECK(parts.n01.is_zero());
  CHECK(parts.m11 == span_labels(p1, {"a", "b"}));
  CHECK(parts.m1 == p1.full_space());
  CHECK(parts.nl_k == 2);
  // With S = 0 the nonzero weights come from T alone, so the N-splitting
  // statement does not apply and its verdict is an honest fail; everything
  // else holds.
  for (const NamedVerdict& v : parts.checks) {
    CAPTURE(v.name);
    if (v.name == "n_splits")
      CHECK_FALSE(v.pass);
    else if (v.applicable)
      CHECK(v.pass);
  }
}
