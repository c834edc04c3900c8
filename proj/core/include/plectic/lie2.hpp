#ifndef PLECTIC_LIE2_HPP
#define PLECTIC_LIE2_HPP

#include <string>

#include "plectic/matrix.hpp"
#include "plectic/report.hpp"

namespace plectic {

/// Two-term chain complex L_0 <-d- L_1. d is a dim0 x dim1 matrix; there is
/// nothing to check beyond shape (d composed with d is vacuous in two terms).
struct TwoTermComplex {
  int dim0 = 0;
  int dim1 = 0;
  Matrix d;

  TwoTermComplex() = default;
  TwoTermComplex(int n0, int n1) : dim0(n0), dim1(n1), d(n0, n1) {}

  friend bool operator==(const TwoTermComplex&, const TwoTermComplex&) = default;
};

/// Dense coefficient tensor of a bilinear map V_a x V_b -> V_out over basis
/// pairs. Application is bilinear extension with zero-skipping.
struct BilinearMap {
  int dim_a = 0, dim_b = 0, dim_out = 0;
  std::vector<Rational> t;

  BilinearMap() = default;
  BilinearMap(int a, int b, int out)
      : dim_a(a), dim_b(b), dim_out(out), t(static_cast<size_t>(a) * b * out) {}

  Rational& at(int i, int j, int k) { return t[idx(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return t[idx(i, j, k)]; }

  Vec on_basis(int i, int j) const;
  Vec apply(const Vec& x, const Vec& y) const;
  bool is_zero() const;

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_b + j) * dim_out + k;
  }
};

struct TrilinearMap {
  int dim_a = 0, dim_b = 0, dim_c = 0, dim_out = 0;
  std::vector<Rational> t;

  TrilinearMap() = default;
  TrilinearMap(int a, int b, int c, int out)
      : dim_a(a), dim_b(b), dim_c(c), dim_out(out), t(static_cast<size_t>(a) * b * c * out) {}

  Rational& at(int i, int j, int k, int l) { return t[idx(i, j, k, l)]; }
  const Rational& at(int i, int j, int k, int l) const { return t[idx(i, j, k, l)]; }

  Vec on_basis(int i, int j, int k) const;
  Vec apply(const Vec& x, const Vec& y, const Vec& z) const;
  bool is_zero() const;

  friend bool operator==(const TrilinearMap&, const TrilinearMap&) = default;

private:
  size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * dim_b + j) * dim_c + k) * dim_out + l;
  }
};

/// A Lie 2-algebra presented by coefficient data: a 2-term complex, the
/// bracket chain map (m0 in degree 0, l1/r1 in degree 1), the alternator
/// homotopy S and the Jacobiator homotopy J.
///
/// Conventions fixed library-wide:
///   - a chain homotopy h from f to g satisfies g - f = d∘h + h∘∂;
///   - the tensor-square differential is ∂(x⊗a) = x⊗da, ∂(a⊗x) = da⊗x, and
///     the triple tensor analogue has trivial Koszul signs because at most
///     one factor ever sits in degree 1.
struct Lie2Algebra {
  std::string name;
  TwoTermComplex complex;
  BilinearMap m0;   // L0 x L0 -> L0
  BilinearMap l1;   // L0 x L1 -> L1
  BilinearMap r1;   // L1 x L0 -> L1
  BilinearMap S;    // L0 x L0 -> L1
  TrilinearMap J;   // L0 x L0 x L0 -> L1, totally antisymmetric

  static Lie2Algebra zeros(std::string name, int dim0, int dim1);
};

/// Evaluates, on every basis tuple: the bracket chain-map laws, the
/// alternator and Jacobiator homotopy laws, J's antisymmetry, and the four
/// coherence equations. Failures are report content with the lowest-lex
/// witness; shape inconsistencies throw ShapeMismatch.
VerificationReport verify_lie2(const Lie2Algebra& L);

/// Jacobiator identically zero. Callers are expected to have run verify_lie2.
bool is_hemistrict(const Lie2Algebra& L);

/// Alternator identically zero.
bool is_semistrict(const Lie2Algebra& L);

/// Morphism data: chain map (phi0, phi1) and the bracket-compatibility
/// homotopy Phi from [phi x, phi y]' to phi([x, y]).
struct Lie2Morphism {
  Matrix phi0;      // dst.dim0 x src.dim0
  Matrix phi1;      // dst.dim1 x src.dim1
  BilinearMap Phi;  // src.L0 x src.L0 -> dst.L1
};

/// Chain-map law, Phi's homotopy laws in degrees 0 and 1, and the two
/// alternator/Jacobiator compatibility equations, all on basis tuples.
VerificationReport verify_morphism(const Lie2Morphism& f, const Lie2Algebra& src,
                                   const Lie2Algebra& dst);

Lie2Morphism identity_morphism(const Lie2Algebra& L);

/// Composite of f: A -> B and g: B -> C, with
/// Phi(x,y) = g.phi1(Phi_f(x,y)) + Phi_g(f.phi0 x, f.phi0 y). The result is
/// re-verified as a morphism A -> C; failure throws CompositionNotVerified
/// (a wrong composition convention must surface, never pass silently).
Lie2Morphism compose(const Lie2Morphism& f, const Lie2Morphism& g, const Lie2Algebra& A,
                     const Lie2Algebra& B, const Lie2Algebra& C);

/// Inverse data (phi0^{-1}, phi1^{-1}, -phi1^{-1}∘Phi∘(phi0^{-1}⊗phi0^{-1})).
/// Throws SingularMatrix when phi0 or phi1 is not invertible.
Lie2Morphism inverse_morphism(const Lie2Morphism& f);

/// True iff phi0, phi1 are invertible, the inverse data passes
/// verify_morphism, and both composites are the identity morphism on the
/// nose.
bool is_isomorphism(const Lie2Morphism& f, const Lie2Algebra& src, const Lie2Algebra& dst);

}  // namespace plectic

#endif
