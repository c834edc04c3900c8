#include <doctest.h>

#include "plectic/errors.hpp"
#include "plectic/lie_algebra.hpp"
#include "plectic/linalg.hpp"
#include "test_helpers.hpp"

using namespace plectic;

TEST_CASE("validate: the standard fixtures pass") {
  CHECK(validate(make_so(3)).all_pass());
  CHECK(validate(make_abelian(3)).all_pass());
  CHECK(validate(make_heisenberg()).all_pass());
}

TEST_CASE("validate: constructed antisymmetry violation is located") {
  LieAlgebra g(3);
  g.c(0, 1, 2) = Rational(1);
  g.c(1, 0, 2) = Rational(1);  // should be -1
  const auto report = validate(g);
  CHECK_FALSE(report.all_pass());
  const LawCheck* fail = report.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->law == "antisymmetry");
  CHECK(fail->witness == std::vector<int>{1, 2, 3});
}

TEST_CASE("validate: constructed Jacobi violation is located") {
  LieAlgebra g(3);
  g.c(0, 1, 2) = Rational(1);
  g.c(1, 0, 2) = Rational(-1);
  g.c(0, 2, 0) = Rational(1);
  g.c(2, 0, 0) = Rational(-1);
  const auto report = validate(g);
  CHECK_FALSE(report.all_pass());
  REQUIRE(report.first_failure() != nullptr);
  CHECK(report.first_failure()->law == "jacobi");
  CHECK_FALSE(report.first_failure()->witness.empty());
}

TEST_CASE("so(3): cross-product table and Killing form -2I") {
  const LieAlgebra g = make_so(3);
  CHECK(g.dim() == 3);
  CHECK(g.bracket_basis(0, 1) == unit_vec(3, 2));
  CHECK(g.bracket_basis(1, 2) == unit_vec(3, 0));
  CHECK(g.bracket_basis(2, 0) == unit_vec(3, 1));
  CHECK(killing_form(g) == Rational(-2) * Matrix::identity(3));
}

TEST_CASE("so(n): higher rank constructors validate") {
  const LieAlgebra so4 = make_so(4);
  CHECK(so4.dim() == 6);
  CHECK(validate(so4).all_pass());
  CHECK(killing_form(so4) == Rational(-4) * Matrix::identity(6));

  const LieAlgebra so5 = make_so(5);
  CHECK(so5.dim() == 10);
  CHECK(validate(so5).all_pass());

  CHECK_THROWS_AS(make_so(2), BadParameter);
}

TEST_CASE("su(2): integral constants, twice the so(3) table") {
  const LieAlgebra su2 = make_su(2);
  const LieAlgebra so3 = make_so(3);
  CHECK(su2.dim() == 3);
  CHECK(validate(su2).all_pass());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) CHECK(su2.c(i, j, k) == Rational(2) * so3.c(i, j, k));
  CHECK(killing_form(su2) == Rational(-8) * Matrix::identity(3));
  CHECK(InnerProduct(Rational(-1) * killing_form(su2)).is_positive_definite());
}

TEST_CASE("su(3): dimension, axioms, semisimplicity") {
  const LieAlgebra su3 = make_su(3);
  CHECK(su3.dim() == 8);
  CHECK(validate(su3).all_pass());
  CHECK(is_semisimple(su3));
  CHECK_THROWS_AS(make_su(1), BadParameter);
}

TEST_CASE("constructors stay valid at higher rank") {
  const LieAlgebra so6 = make_so(6);
  CHECK(so6.dim() == 15);
  CHECK(validate(so6).all_pass());
  const LieAlgebra su4 = make_su(4);
  CHECK(su4.dim() == 15);
  CHECK(validate(su4).all_pass());
  CHECK(testing::negative_killing(su4).is_positive_definite());
}

TEST_CASE("direct sums and the abelian algebra") {
  const LieAlgebra so3 = make_so(3);
  const LieAlgebra sum = direct_sum(so3, so3);
  CHECK(sum.dim() == 6);
  CHECK(validate(sum).all_pass());

  // the Killing form of a sum is block-diagonal in the summands
  const Matrix k = killing_form(sum);
  const Matrix k3 = killing_form(so3);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const bool same_block = (i < 3) == (j < 3);
      CHECK(k.at(i, j) == (same_block ? k3.at(i % 3, j % 3) : Rational(0)));
    }

  CHECK(killing_form(make_abelian(3)).is_zero());
  const LieAlgebra mixed = direct_sum(so3, make_abelian(1));
  CHECK(mixed.dim() == 4);
  CHECK(validate(mixed).all_pass());
}

TEST_CASE("Killing form is ad-invariant across constructors and random bases") {
  std::mt19937_64 rng(20240911);
  std::vector<LieAlgebra> algebras = {make_so(3), make_so(4),  make_su(2),
                                      make_su(3), make_heisenberg(),
                                      direct_sum(make_so(3), make_abelian(2))};
  for (int iter = 0; iter < 5; ++iter) {
    const LieAlgebra base = iter % 2 == 0 ? make_so(3) : make_su(2);
    algebras.push_back(testing::conjugate_basis(base, testing::random_invertible(rng, 3)));
  }
  for (const LieAlgebra& g : algebras) {
    CHECK(validate(g).all_pass());
    CHECK(is_ad_invariant(g, InnerProduct(killing_form(g))));
  }
}

TEST_CASE("ad-invariance detects a skewed metric") {
  const LieAlgebra so3 = make_so(3);
  CHECK(is_ad_invariant(so3, testing::negative_killing(so3)));

  Matrix skew = Matrix::identity(3);
  skew.at(2, 2) = Rational(2);
  CHECK_FALSE(is_ad_invariant(so3, InnerProduct(skew)));

  CHECK(is_ad_invariant(make_abelian(3), InnerProduct(Matrix::identity(3))));
}

TEST_CASE("negative Killing form is positive-definite for the compact constructors") {
  for (const LieAlgebra& g : {make_so(3), make_so(4), make_so(5), make_su(2), make_su(3)})
    CHECK(testing::negative_killing(g).is_positive_definite());
}

TEST_CASE("derived subalgebra and perfectness") {
  CHECK(derived_subalgebra(make_so(3)).size() == 3);
  CHECK(is_perfect(make_so(3)));

  CHECK(derived_subalgebra(make_abelian(3)).empty());
  CHECK_FALSE(is_perfect(make_abelian(3)));

  const LieAlgebra mixed = direct_sum(make_so(3), make_abelian(1));
  CHECK(derived_subalgebra(mixed).size() == 3);
  CHECK_FALSE(is_perfect(mixed));
}

TEST_CASE("Cartan criterion") {
  CHECK(is_semisimple(make_so(3)));
  CHECK(determinant(killing_form(make_so(3))) == Rational(-8));
  CHECK_FALSE(is_semisimple(make_abelian(2)));
  CHECK_FALSE(is_semisimple(make_heisenberg()));
  CHECK(is_semisimple(make_su(3)));
}

TEST_CASE("named fixtures") {
  CHECK(make_fixture("so3").dim() == 3);
  CHECK(make_fixture("so5").dim() == 10);
  CHECK(make_fixture("su3").dim() == 8);
  CHECK(make_fixture("abelian7").dim() == 7);
  CHECK(make_fixture("heisenberg3").dim() == 3);
  const LieAlgebra sum = make_fixture("sum:so3+abelian1");
  CHECK(sum.dim() == 4);
  CHECK(sum.name() == "so3+abelian1");
  CHECK(make_fixture("sum:so3+so3+abelian2").dim() == 8);
  CHECK_THROWS_AS(make_fixture("sp4"), BadParameter);
  CHECK_THROWS_AS(make_fixture("so"), BadParameter);
  CHECK_THROWS_AS(make_fixture("sum:"), BadParameter);
  CHECK_THROWS_AS(make_fixture("abelian0"), BadParameter);
}

TEST_CASE("inner product construction rejects asymmetry") {
  Matrix m = Matrix::identity(2);
  m.at(0, 1) = Rational(1);
  CHECK_THROWS_AS(InnerProduct{m}, BadParameter);
  CHECK_THROWS_AS(InnerProduct{Matrix(2, 3)}, BadParameter);
}

TEST_CASE("bracket is bilinear and matches the structure constants") {
  std::mt19937_64 rng(20240912);
  const LieAlgebra g = make_su(2);
  for (int iter = 0; iter < 30; ++iter) {
    const Vec x = testing::random_vec(rng, 3);
    const Vec y = testing::random_vec(rng, 3);
    const Vec z = testing::random_vec(rng, 3);
    const Rational c = testing::random_rational(rng);
    CHECK(g.bracket(vec_add(x, vec_scale(c, y)), z) ==
          vec_add(g.bracket(x, z), vec_scale(c, g.bracket(y, z))));
    CHECK(g.bracket(x, y) == vec_scale(Rational(-1), g.bracket(y, x)));
  }
}
