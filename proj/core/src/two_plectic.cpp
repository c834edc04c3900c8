#include "plectic/two_plectic.hpp"

#include <utility>

#include "plectic/errors.hpp"

namespace plectic {

AltForm invariant_three_form(const LieAlgebra& g, const InnerProduct& ip, const Rational& k) {
  if (g.dim() != ip.dim()) throw DimensionMismatch("invariant_three_form: dimension mismatch");
  const int n = g.dim();
  auto theta = [&](int i, int j, int l) {
    Rational s;
    for (int m = 0; m < n; ++m)
      if (!g.c(j, l, m).is_zero()) s += ip.at(i, m) * g.c(j, l, m);
    return k * s;
  };

  AltForm nu(3, n);
  const auto tuples = increasing_tuples(n, 3);
  for (size_t t = 0; t < tuples.size(); ++t)
    nu.coeff(static_cast<int>(t)) = theta(tuples[t][0], tuples[t][1], tuples[t][2]);

  // Total antisymmetry of the raw trilinear values against the alternating
  // extension of the stored coefficients; fails exactly when the pairing is
  // not ad-invariant.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const int idx[3] = {i, j, l};
        if (theta(i, j, l) != nu.eval_basis(idx))
          throw NotInvariant("invariant_three_form: trilinear form is not alternating",
                             {i + 1, j + 1, l + 1});
      }
  return nu;
}

std::optional<Vec> degeneracy_witness(const AltForm& nu) {
  if (nu.degree() != 3) throw BadParameter("degeneracy_witness: expected a 3-form");
  const int n = nu.dim();
  const int rows = static_cast<int>(binomial(n, 2));
  Matrix contraction(rows, n);
  for (int i = 0; i < n; ++i) {
    const AltForm column = interior(unit_vec(n, i), nu);
    for (int r = 0; r < rows; ++r) contraction.at(r, i) = column.coeff(r);
  }
  auto kernel = kernel_basis(contraction);
  if (kernel.empty()) return std::nullopt;
  return kernel.front();
}

bool is_nondegenerate(const AltForm& nu) { return !degeneracy_witness(nu).has_value(); }

PlecticStructure::PlecticStructure(LieAlgebra g, InnerProduct ip, Rational k, AltForm nu,
                                   Matrix level_metric_inverse)
    : g_(std::move(g)),
      ip_(std::move(ip)),
      k_(std::move(k)),
      nu_(std::move(nu)),
      level_metric_inverse_(std::move(level_metric_inverse)) {}

PlecticStructure PlecticStructure::build(LieAlgebra g, InnerProduct ip, Rational k) {
  if (k.is_zero()) throw ZeroLevel("build: level k must be nonzero");
  if (g.dim() != ip.dim()) throw DimensionMismatch("build: inner product dimension mismatch");

  if (auto w = ad_invariance_witness(g, ip))
    throw NotInvariant("build: inner product is not ad-invariant",
                       {(*w)[0] + 1, (*w)[1] + 1, (*w)[2] + 1});

  AltForm nu = invariant_three_form(g, ip, k);

  // Closedness holds for every ad-invariant pairing on a valid algebra; a
  // failure here means the algebra's own axioms are broken.
  if (!ce_differential(g, nu).is_zero())
    throw BadParameter("build: d(nu) != 0; structure constants violate the Lie algebra axioms");

  if (auto v = degeneracy_witness(nu)) {
    std::vector<int> witness;
    for (size_t i = 0; i < v->size(); ++i)
      if (!(*v)[i].is_zero()) witness.push_back(static_cast<int>(i) + 1);
    throw Degenerate("build: interior(x, nu) = 0 has a nonzero solution", std::move(witness));
  }

  if (!ip.is_positive_definite())
    throw NotDefinite("build: inner product is not positive-definite");

  Matrix level_metric_inverse = inverse(k * ip.matrix());
  return PlecticStructure(std::move(g), std::move(ip), std::move(k), std::move(nu),
                          std::move(level_metric_inverse));
}

AltForm PlecticStructure::dual_basis_form(int i) const {
  AltForm f(1, dim());
  f.coeff(i) = Rational(1);
  return f;
}

void PlecticStructure::require_one_form(const AltForm& alpha, const char* where) const {
  if (alpha.degree() != 1 || alpha.dim() != dim())
    throw DimensionMismatch(std::string(where) + ": expected a 1-form of matching dimension");
}

Vec PlecticStructure::hamiltonian_vf(const AltForm& alpha) const {
  require_one_form(alpha, "hamiltonian_vf");
  Vec a(static_cast<size_t>(dim()));
  for (int i = 0; i < dim(); ++i) a[static_cast<size_t>(i)] = alpha.coeff(i);
  return level_metric_inverse_ * a;
}

AltForm PlecticStructure::phi_map(const Vec& v) const {
  if (static_cast<int>(v.size()) != dim()) throw DimensionMismatch("phi_map: dimension mismatch");
  AltForm f(1, dim());
  for (int i = 0; i < dim(); ++i) {
    Rational s;
    for (int j = 0; j < dim(); ++j)
      if (!v[static_cast<size_t>(j)].is_zero()) s += ip_.at(j, i) * v[static_cast<size_t>(j)];
    f.coeff(i) = k_ * s;
  }
  return f;
}

AltForm PlecticStructure::semi_bracket(const AltForm& alpha, const AltForm& beta) const {
  require_one_form(alpha, "semi_bracket");
  require_one_form(beta, "semi_bracket");
  return interior(hamiltonian_vf(beta), interior(hamiltonian_vf(alpha), nu_));
}

AltForm PlecticStructure::hemi_bracket(const AltForm& alpha, const AltForm& beta) const {
  require_one_form(alpha, "hemi_bracket");
  require_one_form(beta, "hemi_bracket");
  const Vec v = hamiltonian_vf(alpha);
  // Cartan formula; d(interior(v, beta)) is d of a 0-form, kept in the sum
  // so the composite is literally the Lie derivative.
  return interior(v, ce_differential(g_, beta)) + ce_differential(g_, interior(v, beta));
}

Rational PlecticStructure::alternator_S(const AltForm& alpha, const AltForm& beta) const {
  require_one_form(alpha, "alternator_S");
  require_one_form(beta, "alternator_S");
  const Vec va = hamiltonian_vf(alpha);
  const Vec vb = hamiltonian_vf(beta);
  const Vec args_a[1] = {va};
  const Vec args_b[1] = {vb};
  return -(beta.eval(args_a) + alpha.eval(args_b));
}

Rational PlecticStructure::jacobiator_J(const AltForm& alpha, const AltForm& beta,
                                        const AltForm& gamma) const {
  require_one_form(alpha, "jacobiator_J");
  require_one_form(beta, "jacobiator_J");
  require_one_form(gamma, "jacobiator_J");
  // Innermost-right nesting: contract with v_gamma first, then v_beta, then
  // v_alpha, and negate.
  const AltForm inner = interior(hamiltonian_vf(alpha),
                                 interior(hamiltonian_vf(beta),
                                          interior(hamiltonian_vf(gamma), nu_)));
  return -inner.coeff(0);
}

}  // namespace plectic
