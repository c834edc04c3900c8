#include "plectic/alt_form.hpp"

#include <algorithm>

#include "plectic/errors.hpp"

namespace plectic {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

std::vector<std::vector<int>> increasing_tuples(int n, int p) {
  if (p == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int last = p - 1; last < n; ++last)
    for (const auto& prefix : increasing_tuples(last, p - 1)) {
      std::vector<int> t = prefix;
      t.push_back(last);
      out.push_back(std::move(t));
    }
  return out;
}

int colex_rank(std::span<const int> tuple) {
  long r = 0;
  for (size_t i = 0; i < tuple.size(); ++i) r += binomial(tuple[i], static_cast<int>(i) + 1);
  return static_cast<int>(r);
}

AltForm::AltForm(int degree, int dim) : degree_(degree), dim_(dim) {
  if (degree < 0 || degree > 4) throw BadParameter("AltForm: degree must be in 0..4");
  if (dim < 1) throw BadParameter("AltForm: dimension must be positive");
  coeffs_.resize(static_cast<size_t>(binomial(dim, degree)));
}

Rational& AltForm::coeff_at(std::span<const int> increasing_tuple) {
  return coeffs_[static_cast<size_t>(colex_rank(increasing_tuple))];
}

const Rational& AltForm::coeff_at(std::span<const int> increasing_tuple) const {
  return coeffs_[static_cast<size_t>(colex_rank(increasing_tuple))];
}

Rational AltForm::eval_basis(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != degree_)
    throw DimensionMismatch("AltForm: basis tuple arity mismatch");
  // Insertion sort, counting transpositions for the sign; repeats give zero.
  std::vector<int> idx(tuple.begin(), tuple.end());
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return Rational(0);
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  for (int v : idx)
    if (v < 0 || v >= dim_) throw DimensionMismatch("AltForm: basis index out of range");
  const Rational& c = coeff_at(idx);
  return sign == 1 ? c : -c;
}

namespace {

// Determinant of a p x p submatrix, p <= 4, by cofactor expansion.
Rational small_det(const std::vector<Rational>& m, int p) {
  if (p == 0) return Rational(1);
  if (p == 1) return m[0];
  if (p == 2) return m[0] * m[3] - m[1] * m[2];
  Rational det;
  for (int c = 0; c < p; ++c) {
    if (m[static_cast<size_t>(c)].is_zero()) continue;
    std::vector<Rational> minor;
    minor.reserve(static_cast<size_t>((p - 1) * (p - 1)));
    for (int r = 1; r < p; ++r)
      for (int cc = 0; cc < p; ++cc)
        if (cc != c) minor.push_back(m[static_cast<size_t>(r * p + cc)]);
    const Rational term = m[static_cast<size_t>(c)] * small_det(minor, p - 1);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

}  // namespace

Rational AltForm::eval(std::span<const Vec> args) const {
  if (static_cast<int>(args.size()) != degree_) throw DimensionMismatch("AltForm: arity mismatch");
  for (const Vec& a : args)
    if (static_cast<int>(a.size()) != dim_) throw DimensionMismatch("AltForm: argument dimension mismatch");
  if (degree_ == 0) return coeffs_[0];

  Rational total;
  const auto tuples = increasing_tuples(dim_, degree_);
  for (size_t t = 0; t < tuples.size(); ++t) {
    if (coeffs_[t].is_zero()) continue;
    // det of the degree x degree matrix M[a][b] = args[b][tuple[a]]
    std::vector<Rational> m(static_cast<size_t>(degree_) * degree_);
    for (int a = 0; a < degree_; ++a)
      for (int b = 0; b < degree_; ++b)
        m[static_cast<size_t>(a * degree_ + b)] = args[static_cast<size_t>(b)][static_cast<size_t>(tuples[t][static_cast<size_t>(a)])];
    total += coeffs_[t] * small_det(m, degree_);
  }
  return total;
}

bool AltForm::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

AltForm operator+(const AltForm& a, const AltForm& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim())
    throw DimensionMismatch("AltForm add: shape mismatch");
  AltForm r(a.degree(), a.dim());
  for (int i = 0; i < a.coeff_count(); ++i) r.coeff(i) = a.coeff(i) + b.coeff(i);
  return r;
}

AltForm operator-(const AltForm& a, const AltForm& b) {
  if (a.degree() != b.degree() || a.dim() != b.dim())
    throw DimensionMismatch("AltForm sub: shape mismatch");
  AltForm r(a.degree(), a.dim());
  for (int i = 0; i < a.coeff_count(); ++i) r.coeff(i) = a.coeff(i) - b.coeff(i);
  return r;
}

AltForm operator*(const Rational& c, const AltForm& a) {
  AltForm r(a.degree(), a.dim());
  for (int i = 0; i < a.coeff_count(); ++i) r.coeff(i) = c * a.coeff(i);
  return r;
}

AltForm interior(const Vec& v, const AltForm& w) {
  if (w.degree() == 0) throw DegreeZero("interior: cannot contract a 0-form");
  if (static_cast<int>(v.size()) != w.dim()) throw DimensionMismatch("interior: vector dimension mismatch");
  AltForm r(w.degree() - 1, w.dim());
  const auto tuples = increasing_tuples(w.dim(), w.degree() - 1);
  for (size_t t = 0; t < tuples.size(); ++t) {
    Rational s;
    std::vector<int> full(1 + tuples[t].size());
    std::copy(tuples[t].begin(), tuples[t].end(), full.begin() + 1);
    for (int m = 0; m < w.dim(); ++m) {
      if (v[static_cast<size_t>(m)].is_zero()) continue;
      full[0] = m;
      const Rational wm = w.eval_basis(full);
      if (!wm.is_zero()) s += v[static_cast<size_t>(m)] * wm;
    }
    r.coeff(static_cast<int>(t)) = s;
  }
  return r;
}

AltForm ce_differential(const LieAlgebra& g, const AltForm& w) {
  if (w.dim() != g.dim()) throw DimensionMismatch("ce_differential: form dimension differs from algebra");
  const int p = w.degree();
  const int n = w.dim();
  if (p == 0) return AltForm(1, n);
  if (p == 4) throw BadParameter("ce_differential: degree cap is 4");

  AltForm r(p + 1, n);
  const auto tuples = increasing_tuples(n, p + 1);
  for (size_t t = 0; t < tuples.size(); ++t) {
    const std::vector<int>& idx = tuples[t];
    Rational s;
    std::vector<int> rest(static_cast<size_t>(p));
    for (int a = 0; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) {
        // rest = (bracket slot, idx without positions a and b)
        size_t pos = 1;
        for (int q = 0; q <= p; ++q)
          if (q != a && q != b) rest[pos++] = idx[static_cast<size_t>(q)];
        Rational term;
        for (int k = 0; k < n; ++k) {
          const Rational& ck = g.c(idx[static_cast<size_t>(a)], idx[static_cast<size_t>(b)], k);
          if (ck.is_zero()) continue;
          rest[0] = k;
          const Rational wv = w.eval_basis(rest);
          if (!wv.is_zero()) term += ck * wv;
        }
        if ((a + b) % 2 == 0)
          s += term;
        else
          s -= term;
      }
    r.coeff(static_cast<int>(t)) = s;
  }
  return r;
}

}  // namespace plectic
