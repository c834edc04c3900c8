#ifndef PLECTIC_TWO_PLECTIC_HPP
#define PLECTIC_TWO_PLECTIC_HPP

#include "plectic/alt_form.hpp"
#include "plectic/lie_algebra.hpp"
#include "plectic/linalg.hpp"

namespace plectic {

/// The invariant 3-form nu(x,y,z) = k<x,[y,z]> as an AltForm. Requires an
/// ad-invariant pairing for the result to be totally antisymmetric; the
/// construction re-checks that and throws NotInvariant otherwise.
AltForm invariant_three_form(const LieAlgebra& g, const InnerProduct& ip, const Rational& k);

/// Nondegeneracy of a 3-form: the map x -> interior(x, nu) has trivial
/// kernel, i.e. the C(n,2) x n matrix of contractions has rank n.
bool is_nondegenerate(const AltForm& nu);

/// First kernel vector of x -> interior(x, nu), or nullopt when nondegenerate.
std::optional<Vec> degeneracy_witness(const AltForm& nu);

/// The invariant sector of the canonical 2-plectic structure on a compact
/// Lie group: the Lie algebra, an ad-invariant positive-definite pairing, a
/// nonzero level k, and the closed nondegenerate 3-form nu they induce.
///
/// Invariant 1-forms are AltForms of degree 1 in the dual-basis coordinates;
/// invariant functions are constants. Every operation below is exact.
class PlecticStructure {
public:
  /// Verifies, in order: k != 0 (ZeroLevel), dimensions, ad-invariance
  /// (NotInvariant), total antisymmetry and closedness of nu (construction
  /// guarantees, re-checked), nondegeneracy (Degenerate), positive
  /// definiteness (NotDefinite).
  static PlecticStructure build(LieAlgebra g, InnerProduct ip, Rational k);

  const LieAlgebra& algebra() const { return g_; }
  const InnerProduct& ip() const { return ip_; }
  const Rational& level() const { return k_; }
  const AltForm& nu() const { return nu_; }
  int dim() const { return g_.dim(); }

  /// Dual basis covector e^i.
  AltForm dual_basis_form(int i) const;

  /// The unique v with alpha = k<v, .>; satisfies d(alpha) = -interior(v, nu).
  Vec hamiltonian_vf(const AltForm& alpha) const;

  /// phi(v) = k<v, .>, the inverse of hamiltonian_vf.
  AltForm phi_map(const Vec& v) const;

  /// {alpha, beta}_s = interior(v_beta, interior(v_alpha, nu)).
  AltForm semi_bracket(const AltForm& alpha, const AltForm& beta) const;

  /// {alpha, beta}_h = Lie derivative along v_alpha, realized through the
  /// Cartan formula interior(v_alpha, d beta) + d(interior(v_alpha, beta));
  /// the second term is d of a constant and vanishes identically here.
  AltForm hemi_bracket(const AltForm& alpha, const AltForm& beta) const;

  /// S(alpha, beta) = -(beta(v_alpha) + alpha(v_beta)) = -2k<v_alpha, v_beta>.
  Rational alternator_S(const AltForm& alpha, const AltForm& beta) const;

  /// J(alpha, beta, gamma) = -(i_{v_alpha} i_{v_beta} i_{v_gamma} nu), with
  /// the innermost contraction applied first: the rightmost argument's field
  /// goes into nu's first slot, so the value is -nu(v_gamma, v_beta, v_alpha).
  Rational jacobiator_J(const AltForm& alpha, const AltForm& beta, const AltForm& gamma) const;

private:
  PlecticStructure(LieAlgebra g, InnerProduct ip, Rational k, AltForm nu, Matrix level_metric_inverse);

  void require_one_form(const AltForm& alpha, const char* where) const;

  LieAlgebra g_;
  InnerProduct ip_;
  Rational k_;
  AltForm nu_;
  Matrix level_metric_inverse_;  // (k G)^{-1}
};

}  // namespace plectic

#endif
