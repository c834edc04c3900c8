#ifndef PLECTIC_LINALG_HPP
#define PLECTIC_LINALG_HPP

#include <optional>
#include <vector>

#include "plectic/matrix.hpp"

namespace plectic {

/// Row echelon form computed by fraction-free (Bareiss) elimination with
/// column pivoting. Exact over the rationals; the fraction-free recurrence
/// keeps intermediate entries minor-sized, which matters once Killing-form
/// integers start compounding.
struct Echelon {
  Matrix m;
  std::vector<int> pivot_cols;  // one entry per pivot row, ascending
  int swaps = 0;

  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon bareiss_echelon(Matrix m);

/// Rank over the rationals.
int rank(const Matrix& m);

/// Determinant of a square matrix (Bareiss; trailing pivot up to swap sign).
Rational determinant(const Matrix& m);

/// Solves A x = b for invertible square A. Throws SingularMatrix when
/// det A = 0, DimensionMismatch on shape errors. The result is exact:
/// A x == b holds on the nose.
Vec solve_unique(const Matrix& a, const Vec& b);

/// Any solution of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<Vec> solve_any(const Matrix& a, const Vec& b);

/// Exact basis of the null space; empty iff rank = cols. Each basis vector
/// has one free coordinate set to 1 and the remaining free coordinates 0.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Inverse of a square matrix; throws SingularMatrix when not invertible.
Matrix inverse(const Matrix& m);

/// Sylvester criterion: all leading principal minors positive. Caller is
/// expected to pass a symmetric matrix.
bool is_positive_definite(const Matrix& m);

}  // namespace plectic

#endif
