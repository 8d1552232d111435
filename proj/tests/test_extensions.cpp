#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "malcev/errors.hpp"
#include "malcev/extensions.hpp"

using namespace malcev;
using testutil::span_labels;
using testutil::unit_of;

TEST_CASE("derivation check") {
  MalcevAlgebra sl2 = make_fixture("sl2");
  CHECK(is_derivation(sl2, sl2.right_mult(unit_of(sl2, "h"))).pass);

  MalcevAlgebra h3 = make_fixture("h3");
  DerivationCheck bad = is_derivation(h3, Matrix::identity(3));
  CHECK_FALSE(bad.pass);
  CHECK(bad.i == 0);
  CHECK(bad.j == 1);
  CHECK(bad.defect == negate(unit_of(h3, "e3")));  // e3 - 2 e3

  Matrix grading(3, 3);
  grading.at(0, 0) = 1;
  grading.at(1, 1) = 1;
  grading.at(2, 2) = 2;
  CHECK(is_derivation(h3, grading).pass);
}

TEST_CASE("decomposable extension: h3 acting on a line") {
  MalcevAlgebra h3 = make_fixture("h3");
  MalcevAlgebra line({"w"}, {});
  std::vector<Matrix> action(3, Matrix(1, 1));
  action[0].at(0, 0) = 1;  // e1 acts by 1, e2 and e3 act by 0
  ExtensionSpec spec{h3, Subspace::zero(3), line, action};
  MalcevAlgebra ext = decomposable_extension(spec);
  CHECK(ext.dim() == 4);
  CHECK(check_identities(ext).is_lie());
  // (a,l)(b,r) = ([a,b], l^b - r^a + [l,r]): [e1, w] = -w
  CHECK(ext.bracket(unit_vec(4, 0), unit_vec(4, 3)) == negate(unit_vec(4, 3)));
}

TEST_CASE("decomposable extension with zero action is the direct sum") {
  MalcevAlgebra h3 = make_fixture("h3");
  MalcevAlgebra sl2 = make_fixture("sl2");
  ExtensionSpec spec{h3, Subspace::zero(3), sl2,
                     std::vector<Matrix>(3, Matrix(3, 3))};
  MalcevAlgebra ext = decomposable_extension(spec);
  MalcevAlgebra expected = direct_sum(h3, sl2);
  CHECK(ext == expected);
}

TEST_CASE("decomposable extension on the free Malcev base") {
  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  MalcevAlgebra sl2 = make_fixture("sl2");
  ExtensionSpec spec{f33, jacobian_ideal(f33), sl2,
                     std::vector<Matrix>(15, Matrix(3, 3))};
  MalcevAlgebra ext = decomposable_extension(spec);
  CHECK(check_identities(ext).malcev_ok());

  // embedded n_tilde keeps its structure constants
  for (int i = 0; i < 15; ++i)
    for (int j = 0; j < 15; ++j) {
      Vec v = ext.bracket(unit_vec(18, i), unit_vec(18, j));
      Vec w = f33.bracket(unit_vec(15, i), unit_vec(15, j));
      w.resize(18, Rat(0));
      CHECK(v == w);
    }
  // J(result) sits inside the embedded n_tilde part
  std::vector<Vec> nt_gens;
  for (int i = 0; i < 15; ++i) nt_gens.push_back(unit_vec(18, i));
  CHECK(Subspace::span(18, nt_gens).contains(jacobian_ideal(ext)));
  // the lie part lands in the Lie center
  std::vector<Vec> l_gens;
  for (int i = 15; i < 18; ++i) l_gens.push_back(unit_vec(18, i));
  CHECK(lie_center(ext).contains(Subspace::span(18, l_gens)));
}

TEST_CASE("decomposable extension rejects bad specs") {
  MalcevAlgebra h3 = make_fixture("h3");
  MalcevAlgebra m7 = make_fixture("M7");
  MalcevAlgebra line({"w"}, {});

  // l must be Lie
  ExtensionSpec bad_l{h3, Subspace::zero(3), m7, std::vector<Matrix>(3, Matrix(7, 7))};
  CHECK_THROWS_AS((void)decomposable_extension(bad_l), Error);

  // J(n_tilde) must land in the ideal
  MalcevAlgebra f33 = make_fixture("FNM-3-3");
  ExtensionSpec bad_i{f33, Subspace::zero(15), line, std::vector<Matrix>(15, Matrix(1, 1))};
  CHECK_THROWS_AS((void)decomposable_extension(bad_i), Error);

  // action matrices must be derivations
  MalcevAlgebra h3l = make_fixture("h3");
  std::vector<Matrix> not_der(3, Matrix(3, 3));
  not_der[0] = Matrix::identity(3);
  ExtensionSpec bad_d{h3, Subspace::zero(3), h3l, not_der};
  CHECK_THROWS_AS((void)decomposable_extension(bad_d), Error);
}

TEST_CASE("free nilpotent algebras: dimensions and labels") {
  MalcevAlgebra f23 = free_nilpotent_malcev(2, 3);
  CHECK(f23.dim() == 5);
  CHECK(f23.labels() ==
        std::vector<std::string>{"x1", "x2", "[x1,x2]", "[[x1,x2],x1]", "[[x1,x2],x2]"});
  CHECK(f23.generators() == std::vector<int>{0, 1});

  CHECK(free_nilpotent_malcev(3, 3).dim() == 15);
  CHECK(free_anticommutative_nilpotent(3, 4).dim() == 45);

  // class-4 free Malcev: dimension produced by the identity-quotient oracle
  MalcevAlgebra f34 = free_nilpotent_malcev(3, 4);
  CHECK(f34.dim() == 36);
  CHECK(check_identities(f34).malcev_ok());

  CHECK_THROWS_AS((void)free_nilpotent_malcev(1, 3), Error);
  CHECK_THROWS_AS((void)free_nilpotent_malcev(2, 5), Error);
}

TEST_CASE("free nilpotent algebras: class exactness and generation") {
  for (auto [rank, cls] : {std::pair{2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
    CAPTURE(rank);
    CAPTURE(cls);
    MalcevAlgebra f = free_nilpotent_malcev(rank, cls);
    CHECK(check_identities(f).malcev_ok());
    SeriesReport s = lower_central_series(f);
    CHECK(s.nilpotent);
    CHECK(s.nilpotency_class == cls);
    std::vector<Vec> gens;
    for (int g : f.generators()) gens.push_back(unit_vec(f.dim(), g));
    CHECK(subalgebra_generated(f, Subspace::span(f.dim(), gens)) == f.full_space());
  }
}

TEST_CASE("separation example certificate") {
  SeparationCertificate cert = separation_example(2);
  CHECK(cert.free_dim == 36);
  CHECK(cert.w_dim == 3);
  CHECK(cert.z_description == "[[x1,x2],[x1,x3]]");
  CHECK(cert.p0.dim() == 16);
  CHECK(cert.p.dim() == 19);

  CHECK(cert.identities_pass);
  CHECK_FALSE(cert.nlk2.pass);
  CHECK(cert.nlk3.pass);
  CHECK(cert.p0_mod_z_passes_nl2);
  CHECK(cert.p1_in_lie_center);
  CHECK(cert.parts_span);

  // the failing witness re-evaluates to its defect
  Vec defect = jacobi_defect(cert.p, cert.nlk2.witness_w,
                             unit_vec(cert.p.dim(), cert.nlk2.witness_i),
                             unit_vec(cert.p.dim(), cert.nlk2.witness_j));
  CHECK(defect == cert.nlk2.defect);
  CHECK_FALSE(is_zero(defect));

  CHECK_THROWS_AS((void)separation_example(3), Error);
}
