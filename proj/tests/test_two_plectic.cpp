#include <doctest.h>

#include "plectic/errors.hpp"
#include "plectic/two_plectic.hpp"
#include "test_helpers.hpp"

using namespace plectic;

namespace {

PlecticStructure so3_structure(Rational k = Rational(1)) {
  const LieAlgebra g = make_so(3);
  return PlecticStructure::build(g, testing::negative_killing(g), std::move(k));
}

AltForm random_one_form(std::mt19937_64& rng, int dim) {
  return testing::random_form(rng, 1, dim);
}

}  // namespace

TEST_CASE("build verifies closedness, antisymmetry and nondegeneracy") {
  const PlecticStructure p = so3_structure();
  CHECK(p.nu().degree() == 3);
  CHECK(ce_differential(p.algebra(), p.nu()).is_zero());
  CHECK(is_nondegenerate(p.nu()));
  const int fwd[3] = {0, 1, 2};
  const int swapped[3] = {1, 0, 2};
  CHECK(p.nu().eval_basis(fwd) == Rational(2));
  CHECK(p.nu().eval_basis(swapped) == Rational(-2));
}

TEST_CASE("build rejections") {
  const LieAlgebra so3 = make_so(3);

  SUBCASE("zero level") {
    CHECK_THROWS_AS(PlecticStructure::build(so3, testing::negative_killing(so3), Rational(0)),
                    ZeroLevel);
  }
  SUBCASE("abelian: theta vanishes identically") {
    CHECK_THROWS_AS(
        PlecticStructure::build(make_abelian(3), InnerProduct(Matrix::identity(3)), Rational(1)),
        Degenerate);
  }
  SUBCASE("abelian summand lies in the kernel") {
    const LieAlgebra mixed = direct_sum(so3, make_abelian(1));
    Matrix block(4, 4);
    const Matrix k3 = Rational(-1) * killing_form(so3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) block.at(i, j) = k3.at(i, j);
    block.at(3, 3) = Rational(1);
    try {
      PlecticStructure::build(mixed, InnerProduct(block), Rational(1));
      FAIL("expected Degenerate");
    } catch (const Degenerate& e) {
      CHECK(e.witness() == std::vector<int>{4});  // the abelian direction
    }
  }
  SUBCASE("non-invariant pairing") {
    try {
      PlecticStructure::build(make_heisenberg(), InnerProduct(Matrix::identity(3)), Rational(1));
      FAIL("expected NotInvariant");
    } catch (const NotInvariant& e) {
      CHECK(e.witness().size() == 3);
    }
  }
  SUBCASE("indefinite but invariant pairing is refused after nondegeneracy") {
    CHECK_THROWS_AS(PlecticStructure::build(so3, InnerProduct(killing_form(so3)), Rational(1)),
                    NotDefinite);
  }
}

TEST_CASE("nondegeneracy checks") {
  CHECK_FALSE(is_nondegenerate(AltForm(3, 3)));
  const LieAlgebra so4 = make_so(4);
  CHECK(is_nondegenerate(invariant_three_form(so4, testing::negative_killing(so4), Rational(1))));
  CHECK_THROWS_AS(is_nondegenerate(AltForm(2, 3)), BadParameter);
}

TEST_CASE("Hamiltonian vector fields: pinned values and the defining identity") {
  const PlecticStructure p = so3_structure();

  CHECK(p.hamiltonian_vf(p.dual_basis_form(0)) == Vec{Rational(1, 2), Rational(0), Rational(0)});
  CHECK(p.hamiltonian_vf(AltForm(1, 3)) == zero_vec(3));

  std::mt19937_64 rng(20240913);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm alpha = random_one_form(rng, 3);
    const Vec v = p.hamiltonian_vf(alpha);
    // d(alpha) = -interior(v_alpha, nu), exactly
    CHECK(ce_differential(p.algebra(), alpha) == Rational(-1) * interior(v, p.nu()));
  }
}

TEST_CASE("phi_map: pinned values and inverse pairing with hamiltonian_vf") {
  const PlecticStructure p = so3_structure();
  AltForm expected(1, 3);
  expected.coeff(0) = Rational(2);
  CHECK(p.phi_map(unit_vec(3, 0)) == expected);
  CHECK(p.phi_map(zero_vec(3)).is_zero());

  const PlecticStructure pneg = so3_structure(Rational(-2));
  AltForm expected_neg(1, 3);
  expected_neg.coeff(2) = Rational(-4);
  CHECK(pneg.phi_map(unit_vec(3, 2)) == expected_neg);

  for (int i = 0; i < 3; ++i) {
    CHECK(p.hamiltonian_vf(p.phi_map(unit_vec(3, i))) == unit_vec(3, i));
    CHECK(p.phi_map(p.hamiltonian_vf(p.dual_basis_form(i))) == p.dual_basis_form(i));
  }
}

TEST_CASE("semi-bracket: transport, antisymmetry, bilinearity") {
  const PlecticStructure p = so3_structure();
  const AltForm f1 = p.phi_map(unit_vec(3, 0));
  const AltForm f2 = p.phi_map(unit_vec(3, 1));
  const AltForm f3 = p.phi_map(unit_vec(3, 2));

  CHECK(p.semi_bracket(f1, f2) == f3);
  CHECK(p.semi_bracket(f1, f1).is_zero());
  CHECK(p.semi_bracket(f1, f1 + f2) == f3);

  std::mt19937_64 rng(20240914);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm a = random_one_form(rng, 3);
    const AltForm b = random_one_form(rng, 3);
    CHECK(p.semi_bracket(a, b) == Rational(-1) * p.semi_bracket(b, a));
    // phi transports the Lie bracket of the Hamiltonian fields
    CHECK(p.semi_bracket(a, b) ==
          p.phi_map(p.algebra().bracket(p.hamiltonian_vf(a), p.hamiltonian_vf(b))));
  }
}

TEST_CASE("hemi-bracket equals the semi-bracket in the invariant sector") {
  std::mt19937_64 rng(20240915);
  for (const LieAlgebra& g : {make_so(3), make_su(2), make_so(4)}) {
    for (const char* klit : {"1", "-2", "1/2"}) {
      const PlecticStructure p =
          PlecticStructure::build(g, testing::negative_killing(g), Rational::parse(klit));
      for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j)
          CHECK(p.hemi_bracket(p.dual_basis_form(i), p.dual_basis_form(j)) ==
                p.semi_bracket(p.dual_basis_form(i), p.dual_basis_form(j)));
      const AltForm a = random_one_form(rng, g.dim());
      const AltForm b = random_one_form(rng, g.dim());
      CHECK(p.hemi_bracket(a, b) == p.semi_bracket(a, b));
    }
  }
}

TEST_CASE("hemi-bracket: Cartan composite equals the direct formula") {
  const PlecticStructure p = so3_structure();
  std::mt19937_64 rng(20240916);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm a = random_one_form(rng, 3);
    const AltForm b = random_one_form(rng, 3);
    const Vec va = p.hamiltonian_vf(a);

    // direct formula: y -> -beta([v_alpha, y])
    AltForm direct(1, 3);
    for (int y = 0; y < 3; ++y) {
      const Vec bracket = p.algebra().bracket(va, unit_vec(3, y));
      Rational s;
      for (int m = 0; m < 3; ++m) s += b.coeff(m) * bracket[static_cast<size_t>(m)];
      direct.coeff(y) = -s;
    }
    CHECK(p.hemi_bracket(a, b) == direct);

    // Cartan pieces: i_v d(beta) plus d(i_v beta), the latter identically 0
    CHECK(p.hemi_bracket(a, b) == interior(va, ce_differential(p.algebra(), b)));
    CHECK(ce_differential(p.algebra(), interior(va, b)).is_zero());
  }
  CHECK(p.hemi_bracket(AltForm(1, 3), random_one_form(rng, 3)).is_zero());
}

TEST_CASE("hemi-bracket satisfies the Jacobi identity exactly") {
  for (const LieAlgebra& g : {make_so(3), make_su(2)}) {
    const PlecticStructure p = PlecticStructure::build(g, testing::negative_killing(g), Rational(1));
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          const AltForm a = p.phi_map(unit_vec(n, i));
          const AltForm b = p.phi_map(unit_vec(n, j));
          const AltForm c = p.phi_map(unit_vec(n, k));
          CHECK(p.hemi_bracket(a, p.hemi_bracket(b, c)) ==
                p.hemi_bracket(p.hemi_bracket(a, b), c) + p.hemi_bracket(b, p.hemi_bracket(a, c)));
        }
  }
}

TEST_CASE("brackets are Hamiltonian with field [v_alpha, v_beta]") {
  const PlecticStructure p = so3_structure(Rational(1, 2));
  std::mt19937_64 rng(20240917);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm a = random_one_form(rng, 3);
    const AltForm b = random_one_form(rng, 3);
    const Vec commutator = p.algebra().bracket(p.hamiltonian_vf(a), p.hamiltonian_vf(b));
    CHECK(p.hamiltonian_vf(p.semi_bracket(a, b)) == commutator);
    // d{a,b}_s = -i_{[v_a, v_b]} nu
    CHECK(ce_differential(p.algebra(), p.semi_bracket(a, b)) ==
          Rational(-1) * interior(commutator, p.nu()));
  }
}

TEST_CASE("alternator: pinned values, symmetry, closed form") {
  const PlecticStructure p = so3_structure();
  const AltForm f1 = p.phi_map(unit_vec(3, 0));
  const AltForm f2 = p.phi_map(unit_vec(3, 1));

  CHECK(p.alternator_S(f1, f1) == Rational(-4));
  CHECK(p.alternator_S(f1, f2) == Rational(0));

  std::mt19937_64 rng(20240918);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm a = random_one_form(rng, 3);
    const AltForm b = random_one_form(rng, 3);
    CHECK(p.alternator_S(a, b) == p.alternator_S(b, a));
    CHECK(p.alternator_S(a, b) ==
          Rational(-2) * p.level() * p.ip().pairing(p.hamiltonian_vf(a), p.hamiltonian_vf(b)));
  }
}

TEST_CASE("skewness of the hemi-bracket holds verbatim with dS") {
  // {a,b}_h + d S_{a,b} = -{b,a}_h; in the invariant sector d S is zero, so
  // the hemi-bracket is antisymmetric on the nose.
  const PlecticStructure p = so3_structure();
  std::mt19937_64 rng(20240919);
  for (int iter = 0; iter < 20; ++iter) {
    const AltForm a = random_one_form(rng, 3);
    const AltForm b = random_one_form(rng, 3);
    CHECK(p.hemi_bracket(a, b) == Rational(-1) * p.hemi_bracket(b, a));
  }
}

TEST_CASE("Jacobiator: frozen oracle value and derived properties") {
  const PlecticStructure p = so3_structure();
  const AltForm f1 = p.phi_map(unit_vec(3, 0));
  const AltForm f2 = p.phi_map(unit_vec(3, 1));
  const AltForm f3 = p.phi_map(unit_vec(3, 2));

  SUBCASE("value fixed by the permutation-sum oracle before the build") {
    // J(a,b,c) = -(i_{v_a} i_{v_b} i_{v_c} nu), contracted right-to-left, so
    // the oracle evaluates nu at (v_c, v_b, v_a) by brute-force expansion.
    const Rational oracle = -testing::oracle_eval(
        p.nu(), {p.hamiltonian_vf(f3), p.hamiltonian_vf(f2), p.hamiltonian_vf(f1)});
    CHECK(oracle == Rational(2));
    CHECK(p.jacobiator_J(f1, f2, f3) == oracle);
  }
  SUBCASE("repeated arguments vanish") {
    CHECK(p.jacobiator_J(f1, f2, f1) == Rational(0));
    CHECK(p.jacobiator_J(f1, f1, f3) == Rational(0));
  }
  SUBCASE("multilinearity plus alternation") {
    CHECK(p.jacobiator_J(f1, f2, f1 + f3) == p.jacobiator_J(f1, f2, f3));
  }
  SUBCASE("oracle agreement on random arguments") {
    std::mt19937_64 rng(20240920);
    for (int iter = 0; iter < 20; ++iter) {
      const AltForm a = random_one_form(rng, 3);
      const AltForm b = random_one_form(rng, 3);
      const AltForm c = random_one_form(rng, 3);
      const Rational oracle = -testing::oracle_eval(
          p.nu(), {p.hamiltonian_vf(c), p.hamiltonian_vf(b), p.hamiltonian_vf(a)});
      CHECK(p.jacobiator_J(a, b, c) == oracle);
    }
  }
}

TEST_CASE("operations reject mismatched dimensions") {
  const PlecticStructure p = so3_structure();
  const AltForm wrong(1, 4);
  CHECK_THROWS_AS(p.hamiltonian_vf(wrong), DimensionMismatch);
  CHECK_THROWS_AS(p.phi_map(zero_vec(4)), DimensionMismatch);
  CHECK_THROWS_AS(p.semi_bracket(wrong, wrong), DimensionMismatch);
  CHECK_THROWS_AS(p.alternator_S(p.dual_basis_form(0), wrong), DimensionMismatch);
  CHECK_THROWS_AS(p.hamiltonian_vf(AltForm(2, 3)), DimensionMismatch);
}
