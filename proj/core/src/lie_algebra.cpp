#include "plectic/lie_algebra.hpp"

#include <charconv>
#include <utility>

#include "plectic/errors.hpp"
#include "plectic/linalg.hpp"

namespace plectic {

LieAlgebra::LieAlgebra(int dim, std::string name)
    : dim_(dim), name_(std::move(name)), c_(static_cast<size_t>(dim) * dim * dim) {
  if (dim < 1) throw BadParameter("LieAlgebra: dimension must be positive");
}

Vec LieAlgebra::bracket_basis(int i, int j) const {
  Vec v(static_cast<size_t>(dim_));
  for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] = c(i, j, k);
  return v;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw DimensionMismatch("bracket: argument dimension mismatch");
  Vec v(static_cast<size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      const Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_; ++k)
        if (!c(i, j, k).is_zero()) v[static_cast<size_t>(k)] += f * c(i, j, k);
    }
  }
  return v;
}

Matrix LieAlgebra::ad_basis(int i) const {
  Matrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m.at(k, j) = c(i, j, k);
  return m;
}

InnerProduct::InnerProduct(Matrix m) : m_(std::move(m)) {
  if (m_.rows != m_.cols) throw BadParameter("InnerProduct: matrix not square");
  if (!m_.is_symmetric()) throw BadParameter("InnerProduct: matrix not symmetric");
}

Rational InnerProduct::pairing(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim() || static_cast<int>(y.size()) != dim())
    throw DimensionMismatch("InnerProduct: argument dimension mismatch");
  return dot(x, m_ * y);
}

bool InnerProduct::is_positive_definite() const { return plectic::is_positive_definite(m_); }

VerificationReport validate(const LieAlgebra& g) {
  const int n = g.dim();
  VerificationReport report;
  LawAccumulator acc(report);

  acc.begin("antisymmetry");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) acc.check_scalar({i, j, k}, g.c(i, j, k), -g.c(j, i, k));

  acc.begin("jacobi");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vec defect = vec_add(vec_add(g.bracket(g.bracket_basis(i, j), unit_vec(n, k)),
                                           g.bracket(g.bracket_basis(j, k), unit_vec(n, i))),
                                   g.bracket(g.bracket_basis(k, i), unit_vec(n, j)));
        for (int l = 0; l < n; ++l)
          acc.check_scalar({i, j, k, l}, defect[static_cast<size_t>(l)], Rational(0));
      }

  return report;
}

namespace {

// Real matrix realization: expands a skew-symmetric commutator over signed
// pair generators s * (E_{ab} - E_{ba}).
struct SignedPair {
  int sign;
  int a, b;  // a < b, 0-based
};

Matrix pair_matrix(int n, const SignedPair& p) {
  Matrix m(n, n);
  m.at(p.a, p.b) = Rational(p.sign);
  m.at(p.b, p.a) = Rational(-p.sign);
  return m;
}

LieAlgebra from_real_matrices(int n, const std::vector<SignedPair>& basis, std::string name) {
  const int dim = static_cast<int>(basis.size());
  LieAlgebra g(dim, std::move(name));
  std::vector<Matrix> mats;
  mats.reserve(basis.size());
  for (const auto& p : basis) mats.push_back(pair_matrix(n, p));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Matrix comm = mats[static_cast<size_t>(i)] * mats[static_cast<size_t>(j)] -
                          mats[static_cast<size_t>(j)] * mats[static_cast<size_t>(i)];
      for (int m = 0; m < dim; ++m) {
        const auto& p = basis[static_cast<size_t>(m)];
        g.c(i, j, m) = Rational(p.sign) * comm.at(p.a, p.b);
      }
    }
  return g;
}

struct ComplexMatrix {
  Matrix re, im;

  ComplexMatrix(int n) : re(n, n), im(n, n) {}

  friend ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix r(x.re.rows);
    r.re = x.re * y.re - x.im * y.im;
    r.im = x.re * y.im + x.im * y.re;
    return r;
  }

  friend ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
    ComplexMatrix r(x.re.rows);
    r.re = x.re - y.re;
    r.im = x.im - y.im;
    return r;
  }
};

}  // namespace

LieAlgebra make_so(int n) {
  if (n < 3) throw BadParameter("make_so: n must be at least 3");
  std::vector<SignedPair> basis;
  if (n == 3) {
    // Cross-product basis: [e1,e2] = e3 and cyclic.
    basis = {{-1, 1, 2}, {+1, 0, 2}, {-1, 0, 1}};
  } else {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) basis.push_back({+1, a, b});
  }
  return from_real_matrices(n, basis, "so" + std::to_string(n));
}

LieAlgebra make_su(int n) {
  if (n < 2) throw BadParameter("make_su: n must be at least 2");
  const int dim = n * n - 1;

  std::vector<ComplexMatrix> mats;
  mats.reserve(static_cast<size_t>(dim));
  // For each pair a<b: E_ab - E_ba, then i(E_ab + E_ba); Cartan elements last.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      ComplexMatrix x(n);
      x.re.at(a, b) = Rational(1);
      x.re.at(b, a) = Rational(-1);
      mats.push_back(x);
      ComplexMatrix y(n);
      y.im.at(a, b) = Rational(1);
      y.im.at(b, a) = Rational(1);
      mats.push_back(y);
    }
  for (int a = 0; a + 1 < n; ++a) {
    ComplexMatrix h(n);
    h.im.at(a, a) = Rational(1);
    h.im.at(a + 1, a + 1) = Rational(-1);
    mats.push_back(h);
  }

  // Expansion of an anti-Hermitian traceless matrix in that basis: the
  // off-diagonal entries read off the X/Y coefficients directly; the
  // diagonal i*t_a gives the Cartan coefficients as partial sums of t.
  auto expand = [&](const ComplexMatrix& m) {
    Vec coeffs(static_cast<size_t>(dim));
    int idx = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        coeffs[static_cast<size_t>(idx++)] = m.re.at(a, b);
        coeffs[static_cast<size_t>(idx++)] = m.im.at(a, b);
      }
    Rational partial;
    for (int a = 0; a + 1 < n; ++a) {
      partial += m.im.at(a, a);
      coeffs[static_cast<size_t>(idx++)] = partial;
    }
    return coeffs;
  };

  LieAlgebra g(dim, "su" + std::to_string(n));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const ComplexMatrix comm = mats[static_cast<size_t>(i)] * mats[static_cast<size_t>(j)] -
                                 mats[static_cast<size_t>(j)] * mats[static_cast<size_t>(i)];
      const Vec coeffs = expand(comm);
      for (int k = 0; k < dim; ++k) g.c(i, j, k) = coeffs[static_cast<size_t>(k)];
    }
  return g;
}

LieAlgebra make_abelian(int n) {
  if (n < 1) throw BadParameter("make_abelian: n must be positive");
  return LieAlgebra(n, "abelian" + std::to_string(n));
}

LieAlgebra make_heisenberg() {
  LieAlgebra g(3, "heisenberg3");
  g.c(0, 1, 2) = Rational(1);
  g.c(1, 0, 2) = Rational(-1);
  return g;
}

LieAlgebra direct_sum(const LieAlgebra& g1, const LieAlgebra& g2) {
  const int n1 = g1.dim();
  const int n2 = g2.dim();
  LieAlgebra g(n1 + n2, g1.name() + "+" + g2.name());
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k) g.c(i, j, k) = g1.c(i, j, k);
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k < n2; ++k) g.c(n1 + i, n1 + j, n1 + k) = g2.c(i, j, k);
  return g;
}

namespace {

int parse_positive_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 1)
    throw BadParameter("make_fixture: bad " + std::string(what) + " '" + std::string(s) + "'");
  return value;
}

LieAlgebra make_atomic_fixture(std::string_view name) {
  if (name.substr(0, 2) == "so") return make_so(parse_positive_int(name.substr(2), "so dimension"));
  if (name.substr(0, 2) == "su") return make_su(parse_positive_int(name.substr(2), "su dimension"));
  if (name.substr(0, 7) == "abelian")
    return make_abelian(parse_positive_int(name.substr(7), "abelian dimension"));
  if (name == "heisenberg3") return make_heisenberg();
  throw BadParameter("make_fixture: unknown algebra '" + std::string(name) + "'");
}

}  // namespace

LieAlgebra make_fixture(std::string_view name) {
  if (name.substr(0, 4) != "sum:") return make_atomic_fixture(name);
  std::string_view rest = name.substr(4);
  std::optional<LieAlgebra> acc;
  while (!rest.empty()) {
    const auto plus = rest.find('+');
    const std::string_view atom = rest.substr(0, plus);
    if (atom.empty()) throw BadParameter("make_fixture: empty summand in '" + std::string(name) + "'");
    LieAlgebra next = make_atomic_fixture(atom);
    acc = acc ? direct_sum(*acc, next) : std::move(next);
    rest = plus == std::string_view::npos ? std::string_view() : rest.substr(plus + 1);
  }
  if (!acc) throw BadParameter("make_fixture: empty sum '" + std::string(name) + "'");
  return *acc;
}

Matrix killing_form(const LieAlgebra& g) {
  const int n = g.dim();
  Matrix k(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rational s;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (!g.c(i, a, b).is_zero() && !g.c(j, b, a).is_zero()) s += g.c(i, a, b) * g.c(j, b, a);
      k.at(i, j) = s;
      k.at(j, i) = s;
    }
  return k;
}

std::optional<std::vector<int>> ad_invariance_witness(const LieAlgebra& g, const InnerProduct& ip) {
  if (g.dim() != ip.dim()) throw DimensionMismatch("ad_invariance: dimension mismatch");
  const int n = g.dim();
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      for (int z = 0; z < n; ++z) {
        Rational s;
        for (int m = 0; m < n; ++m) {
          if (!g.c(y, x, m).is_zero()) s += g.c(y, x, m) * ip.at(m, z);
          if (!g.c(y, z, m).is_zero()) s += ip.at(x, m) * g.c(y, z, m);
        }
        if (!s.is_zero()) return std::vector<int>{y, x, z};
      }
  return std::nullopt;
}

bool is_ad_invariant(const LieAlgebra& g, const InnerProduct& ip) {
  return !ad_invariance_witness(g, ip).has_value();
}

std::vector<Vec> derived_subalgebra(const LieAlgebra& g) {
  const int n = g.dim();
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = g.bracket_basis(i, j);
      if (!vec_is_zero(v)) rows.push_back(std::move(v));
    }
  if (rows.empty()) return {};
  Matrix m(static_cast<int>(rows.size()), n);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  Echelon e = bareiss_echelon(std::move(m));
  std::vector<Vec> basis;
  for (int r = 0; r < e.rank(); ++r) basis.push_back(e.m.row(r));
  return basis;
}

bool is_perfect(const LieAlgebra& g) {
  return static_cast<int>(derived_subalgebra(g).size()) == g.dim();
}

bool is_semisimple(const LieAlgebra& g) { return !determinant(killing_form(g)).is_zero(); }

}  // namespace plectic
