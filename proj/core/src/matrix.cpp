#include "plectic/matrix.hpp"

#include "plectic/errors.hpp"

namespace plectic {

Vec unit_vec(int dim, int i) {
  Vec v(static_cast<size_t>(dim));
  v[static_cast<size_t>(i)] = Rational(1);
  return v;
}

Vec zero_vec(int dim) { return Vec(static_cast<size_t>(dim)); }

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: size mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  a.resize(static_cast<size_t>(rows) * cols);
  int r = 0;
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols) throw DimensionMismatch("Matrix: ragged initializer");
    int c = 0;
    for (long v : row) at(r, c++) = Rational(v);
    ++r;
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Vec Matrix::col(int c) const {
  Vec v(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r) v[static_cast<size_t>(r)] = at(r, c);
  return v;
}

Vec Matrix::row(int r) const {
  Vec v(static_cast<size_t>(cols));
  for (int c = 0; c < cols; ++c) v[static_cast<size_t>(c)] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows != cols) return false;
  for (int r = 0; r < rows; ++r)
    for (int c = r + 1; c < cols; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("Matrix multiply: inner dimensions differ");
  Matrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& ykj = y.at(k, j);
        if (!ykj.is_zero()) r.at(i, j) += xik * ykj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("Matrix add: shape mismatch");
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionMismatch("Matrix sub: shape mismatch");
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

Matrix operator*(const Rational& c, const Matrix& x) {
  Matrix r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
  return r;
}

Vec operator*(const Matrix& m, const Vec& v) {
  if (m.cols != static_cast<int>(v.size())) throw DimensionMismatch("Matrix-vector multiply: shape mismatch");
  Vec r(static_cast<size_t>(m.rows));
  for (int i = 0; i < m.rows; ++i) {
    Rational s;
    for (int j = 0; j < m.cols; ++j) {
      const Rational& mij = m.at(i, j);
      if (!mij.is_zero() && !v[static_cast<size_t>(j)].is_zero()) s += mij * v[static_cast<size_t>(j)];
    }
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

}  // namespace plectic
