#ifndef PLECTIC_LIE_ALGEBRA_HPP
#define PLECTIC_LIE_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/matrix.hpp"
#include "plectic/report.hpp"

namespace plectic {

/// Lie algebra over ℚ given by structure constants: [e_i, e_j] = Σ_k c_{ij}^k e_k.
/// Antisymmetry and the Jacobi identity are not enforced on construction;
/// `validate` reports them so deliberately broken tables can be built in tests.
class LieAlgebra {
public:
  explicit LieAlgebra(int dim, std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Rational& c(int i, int j, int k) { return c_[index(i, j, k)]; }
  const Rational& c(int i, int j, int k) const { return c_[index(i, j, k)]; }

  /// [e_i, e_j] as a coefficient vector.
  Vec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Matrix of ad_{e_i}: column j is [e_i, e_j].
  Matrix ad_basis(int i) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

private:
  size_t index(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::string name_;
  std::vector<Rational> c_;
};

/// Symmetric bilinear pairing on a Lie algebra basis. Symmetry is enforced
/// at construction; ad-invariance and definiteness are separate queries
/// because the negative fixtures need to carry non-invariant pairings.
class InnerProduct {
public:
  explicit InnerProduct(Matrix m);

  int dim() const { return m_.rows; }
  const Matrix& matrix() const { return m_; }
  const Rational& at(int i, int j) const { return m_.at(i, j); }
  Rational pairing(const Vec& x, const Vec& y) const;
  bool is_positive_definite() const;

  friend bool operator==(const InnerProduct& a, const InnerProduct& b) { return a.m_ == b.m_; }

private:
  Matrix m_;
};

/// Checks antisymmetry and Jacobi on all basis tuples; failures are report
/// content with the first failing tuple, never exceptions.
VerificationReport validate(const LieAlgebra& g);

/// so(n), n >= 3, from exact commutators of E_{ab} - E_{ba}. For n = 3 the
/// basis is the cross-product one (e1 = E32-E23, e2 = E13-E31, e3 = E21-E12)
/// so that [e1,e2] = e3 cyclically; for n >= 4 the pairs a<b are taken in
/// lexicographic order.
LieAlgebra make_so(int n);

/// su(n), n >= 2: for each pair a<b the anti-Hermitian matrices
/// E_{ab}-E_{ba} and i(E_{ab}+E_{ba}), then the Cartan elements
/// i(E_{aa}-E_{a+1,a+1}). All structure constants come out integral.
LieAlgebra make_su(int n);

LieAlgebra make_abelian(int n);

/// 3-dimensional Heisenberg algebra: [e1,e2] = e3.
LieAlgebra make_heisenberg();

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2);

/// Named fixtures: so{n}, su{n}, abelian{n}, heisenberg3 and sums of those
/// written "sum:so3+abelian1". Throws BadParameter on anything else.
LieAlgebra make_fixture(std::string_view name);

/// K_{ij} = trace(ad_{e_i} ad_{e_j}), computed exactly from the structure
/// constants. Symmetric but not necessarily definite.
Matrix killing_form(const LieAlgebra& g);

/// True iff <[y,x],z> + <x,[y,z]> = 0 on all basis triples.
bool is_ad_invariant(const LieAlgebra& g, const InnerProduct& ip);

/// First basis triple (y,x,z), 0-based, violating ad-invariance; nullopt if
/// invariant.
std::optional<std::vector<int>> ad_invariance_witness(const LieAlgebra& g, const InnerProduct& ip);

/// Echelon basis of span{[e_i,e_j]}.
std::vector<Vec> derived_subalgebra(const LieAlgebra& g);

bool is_perfect(const LieAlgebra& g);

/// Cartan criterion: det(Killing form) != 0.
bool is_semisimple(const LieAlgebra& g);

}  // namespace plectic

#endif
