#ifndef PLECTIC_ALT_FORM_HPP
#define PLECTIC_ALT_FORM_HPP

#include <span>
#include <vector>

#include "plectic/lie_algebra.hpp"
#include "plectic/matrix.hpp"

namespace plectic {

long binomial(int n, int k);

/// All strictly increasing p-tuples from {0..n-1} in colex order. Colex is
/// the serialization order: tuples compare by last entry first, so the list
/// for (n=4, p=2) is (0,1), (0,2), (1,2), (0,3), (1,3), (2,3).
std::vector<std::vector<int>> increasing_tuples(int n, int p);

/// Colex rank of a strictly increasing 0-based tuple.
int colex_rank(std::span<const int> tuple);

/// Alternating p-linear form on an n-dimensional space, p in 0..4, stored
/// densely over increasing basis tuples in colex order. A 0-form is a single
/// scalar. Evaluation on arbitrary tuples is the unique antisymmetric
/// multilinear extension of the stored coefficients.
class AltForm {
public:
  AltForm(int degree, int dim);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  int coeff_count() const { return static_cast<int>(coeffs_.size()); }

  Rational& coeff(int colex_index) { return coeffs_[static_cast<size_t>(colex_index)]; }
  const Rational& coeff(int colex_index) const { return coeffs_[static_cast<size_t>(colex_index)]; }

  Rational& coeff_at(std::span<const int> increasing_tuple);
  const Rational& coeff_at(std::span<const int> increasing_tuple) const;

  /// Value on an arbitrary basis tuple (0-based indices, repeats and any
  /// order allowed): 0 on repeats, otherwise sign * stored coefficient.
  Rational eval_basis(std::span<const int> tuple) const;

  /// Full multilinear antisymmetric evaluation; args.size() must equal the
  /// degree and every vector must have length dim.
  Rational eval(std::span<const Vec> args) const;

  bool is_zero() const;

  friend bool operator==(const AltForm& a, const AltForm& b) {
    return a.degree_ == b.degree_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
  }

private:
  int degree_;
  int dim_;
  std::vector<Rational> coeffs_;
};

AltForm operator+(const AltForm& a, const AltForm& b);
AltForm operator-(const AltForm& a, const AltForm& b);
AltForm operator*(const Rational& c, const AltForm& a);

/// Interior product: (interior(v, w))(x_1..x_{p-1}) = w(v, x_1, .., x_{p-1}).
/// Throws DegreeZero for 0-forms.
AltForm interior(const Vec& v, const AltForm& w);

/// Chevalley-Eilenberg differential on the invariant sector:
///   p = 0: zero 1-form (invariant functions are constants),
///   p >= 1: (dw)(x_0..x_p) = sum_{i<j} (-1)^{i+j} w([x_i,x_j], .. omit i,j ..).
/// For p = 1 this reads dw(x,y) = -w([x,y]). Degree is capped at 4; taking d
/// of a 4-form throws BadParameter.
AltForm ce_differential(const LieAlgebra& g, const AltForm& w);

}  // namespace plectic

#endif
