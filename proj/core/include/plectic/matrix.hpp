#ifndef PLECTIC_MATRIX_HPP
#define PLECTIC_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "plectic/rational.hpp"

namespace plectic {

using Vec = std::vector<Rational>;

Vec unit_vec(int dim, int i);
Vec zero_vec(int dim);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& a);
bool vec_is_zero(const Vec& a);
Rational dot(const Vec& a, const Vec& b);

/// Dense rational matrix, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Matrix(std::initializer_list<std::initializer_list<long>> init);

  static Matrix identity(int n);

  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  Vec col(int c) const;
  Vec row(int r) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

Matrix operator*(const Matrix& x, const Matrix& y);
Matrix operator+(const Matrix& x, const Matrix& y);
Matrix operator-(const Matrix& x, const Matrix& y);
Matrix operator*(const Rational& c, const Matrix& x);
Vec operator*(const Matrix& m, const Vec& v);

}  // namespace plectic

#endif
