#ifndef PLECTIC_TEST_HELPERS_HPP
#define PLECTIC_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "plectic/alt_form.hpp"
#include "plectic/lie_algebra.hpp"
#include "plectic/linalg.hpp"

namespace plectic::testing {

inline Rational random_rational(std::mt19937_64& rng, int num_bound = 6, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline Vec random_vec(std::mt19937_64& rng, int dim) {
  Vec v(static_cast<size_t>(dim));
  for (auto& x : v) x = random_rational(rng);
  return v;
}

inline Matrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (auto& x : m.a) x = random_rational(rng);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (rank(m) == n) return m;
  }
}

inline AltForm random_form(std::mt19937_64& rng, int degree, int dim) {
  AltForm f(degree, dim);
  for (int i = 0; i < f.coeff_count(); ++i) f.coeff(i) = random_rational(rng);
  return f;
}

// ---- independent oracles -------------------------------------------------
//
// These re-derive form evaluation from the storage contract alone (colex
// order over increasing tuples) without touching AltForm::eval or
// eval_basis, so they can vouch for them.

inline long oracle_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline int oracle_colex_index(const std::vector<int>& increasing) {
  long r = 0;
  for (size_t i = 0; i < increasing.size(); ++i)
    r += oracle_binomial(increasing[i], static_cast<int>(i) + 1);
  return static_cast<int>(r);
}

/// Brute-force evaluation: sum over all injective index tuples, sign from
/// explicit inversion counting, coefficient looked up at the sorted tuple.
inline Rational oracle_eval(const AltForm& f, const std::vector<Vec>& args) {
  const int p = f.degree();
  const int n = f.dim();
  if (p == 0) return f.coeff(0);

  Rational total;
  std::vector<int> idx(static_cast<size_t>(p), 0);
  for (;;) {
    bool distinct = true;
    for (int a = 0; a < p && distinct; ++a)
      for (int b = a + 1; b < p; ++b)
        if (idx[static_cast<size_t>(a)] == idx[static_cast<size_t>(b)]) {
          distinct = false;
          break;
        }
    if (distinct) {
      int inversions = 0;
      for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
          if (idx[static_cast<size_t>(a)] > idx[static_cast<size_t>(b)]) ++inversions;
      std::vector<int> sorted = idx;
      std::sort(sorted.begin(), sorted.end());
      Rational term = f.coeff(oracle_colex_index(sorted));
      if (inversions % 2 == 1) term = -term;
      for (int b = 0; b < p; ++b)
        term *= args[static_cast<size_t>(b)][static_cast<size_t>(idx[static_cast<size_t>(b)])];
      total += term;
    }
    int pos = p - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - 1) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
  }
  return total;
}

/// Structure constants transported along a change of basis f_i = sum_j M_{ji} e_j.
inline LieAlgebra conjugate_basis(const LieAlgebra& g, const Matrix& m) {
  const int n = g.dim();
  const Matrix minv = inverse(m);
  LieAlgebra out(n, g.name() + "-conjugated");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec image = g.bracket(m.col(i), m.col(j));
      const Vec coeffs = minv * image;
      for (int k = 0; k < n; ++k) out.c(i, j, k) = coeffs[static_cast<size_t>(k)];
    }
  return out;
}

inline InnerProduct negative_killing(const LieAlgebra& g) {
  return InnerProduct(Rational(-1) * killing_form(g));
}

}  // namespace plectic::testing

#endif
