#include "plectic/linalg.hpp"

#include <utility>

#include "plectic/errors.hpp"

namespace plectic {

Echelon bareiss_echelon(Matrix m) {
  Echelon e;
  Rational prev(1);
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = r;
    while (p < m.rows && m.at(p, c).is_zero()) ++p;
    if (p == m.rows) continue;
    if (p != r) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
      ++e.swaps;
    }
    const Rational pivot = m.at(r, c);
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) * pivot - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = Rational(0);
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

int rank(const Matrix& m) { return bareiss_echelon(m).rank(); }

Rational determinant(const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("determinant: matrix not square");
  if (m.rows == 0) return Rational(1);
  Echelon e = bareiss_echelon(m);
  if (e.rank() < m.rows) return Rational(0);
  Rational d = e.m.at(m.rows - 1, m.cols - 1);
  return (e.swaps % 2 == 0) ? d : -d;
}

namespace {

// Back-substitution on an echelon form of [A | b] restricted to the first
// `acols` columns as unknowns. Free variables get the provided values.
Vec back_substitute(const Echelon& e, int acols, const Vec& rhs_col, const Vec& free_values) {
  Vec x = free_values;
  for (int r = e.rank() - 1; r >= 0; --r) {
    const int pc = e.pivot_cols[static_cast<size_t>(r)];
    Rational s = rhs_col[static_cast<size_t>(r)];
    for (int j = pc + 1; j < acols; ++j)
      if (!e.m.at(r, j).is_zero() && !x[static_cast<size_t>(j)].is_zero())
        s -= e.m.at(r, j) * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(pc)] = s / e.m.at(r, pc);
  }
  return x;
}

Matrix augment(const Matrix& a, const Vec& b) {
  Matrix m(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) m.at(i, j) = a.at(i, j);
    m.at(i, a.cols) = b[static_cast<size_t>(i)];
  }
  return m;
}

}  // namespace

Vec solve_unique(const Matrix& a, const Vec& b) {
  if (a.rows != a.cols) throw DimensionMismatch("solve_unique: matrix not square");
  if (static_cast<int>(b.size()) != a.rows) throw DimensionMismatch("solve_unique: rhs size mismatch");
  Echelon e = bareiss_echelon(augment(a, b));
  for (int pc : e.pivot_cols)
    if (pc >= a.cols) throw SingularMatrix("solve_unique: inconsistent system");
  if (e.rank() < a.cols) throw SingularMatrix("solve_unique: singular matrix");
  Vec rhs(static_cast<size_t>(e.rank()));
  for (int r = 0; r < e.rank(); ++r) rhs[static_cast<size_t>(r)] = e.m.at(r, a.cols);
  return back_substitute(e, a.cols, rhs, zero_vec(a.cols));
}

std::optional<Vec> solve_any(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows) throw DimensionMismatch("solve_any: rhs size mismatch");
  Echelon e = bareiss_echelon(augment(a, b));
  for (int pc : e.pivot_cols)
    if (pc >= a.cols) return std::nullopt;
  Vec rhs(static_cast<size_t>(e.rank()));
  for (int r = 0; r < e.rank(); ++r) rhs[static_cast<size_t>(r)] = e.m.at(r, a.cols);
  return back_substitute(e, a.cols, rhs, zero_vec(a.cols));
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = bareiss_echelon(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int pc : e.pivot_cols) is_pivot[static_cast<size_t>(pc)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec free_values = zero_vec(m.cols);
    free_values[static_cast<size_t>(f)] = Rational(1);
    basis.push_back(back_substitute(e, m.cols, zero_vec(e.rank()), free_values));
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("inverse: matrix not square");
  Matrix inv(m.rows, m.cols);
  for (int c = 0; c < m.cols; ++c) {
    Vec x = solve_unique(m, unit_vec(m.rows, c));
    for (int r = 0; r < m.rows; ++r) inv.at(r, c) = x[static_cast<size_t>(r)];
  }
  return inv;
}

bool is_positive_definite(const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("is_positive_definite: matrix not square");
  for (int k = 1; k <= m.rows; ++k) {
    Matrix lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
    if (determinant(lead).sign() <= 0) return false;
  }
  return true;
}

}  // namespace plectic
