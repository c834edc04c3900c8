#include "plectic/lie2.hpp"

#include <utility>

#include "plectic/errors.hpp"
#include "plectic/linalg.hpp"

namespace plectic {

Vec BilinearMap::on_basis(int i, int j) const {
  Vec v(static_cast<size_t>(dim_out));
  for (int k = 0; k < dim_out; ++k) v[static_cast<size_t>(k)] = at(i, j, k);
  return v;
}

Vec BilinearMap::apply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim_a || static_cast<int>(y.size()) != dim_b)
    throw DimensionMismatch("BilinearMap: argument dimension mismatch");
  Vec v(static_cast<size_t>(dim_out));
  for (int i = 0; i < dim_a; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_b; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      const Rational f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_out; ++k)
        if (!at(i, j, k).is_zero()) v[static_cast<size_t>(k)] += f * at(i, j, k);
    }
  }
  return v;
}

bool BilinearMap::is_zero() const {
  for (const auto& x : t)
    if (!x.is_zero()) return false;
  return true;
}

Vec TrilinearMap::on_basis(int i, int j, int k) const {
  Vec v(static_cast<size_t>(dim_out));
  for (int l = 0; l < dim_out; ++l) v[static_cast<size_t>(l)] = at(i, j, k, l);
  return v;
}

Vec TrilinearMap::apply(const Vec& x, const Vec& y, const Vec& z) const {
  if (static_cast<int>(x.size()) != dim_a || static_cast<int>(y.size()) != dim_b ||
      static_cast<int>(z.size()) != dim_c)
    throw DimensionMismatch("TrilinearMap: argument dimension mismatch");
  Vec v(static_cast<size_t>(dim_out));
  for (int i = 0; i < dim_a; ++i) {
    if (x[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim_b; ++j) {
      if (y[static_cast<size_t>(j)].is_zero()) continue;
      const Rational xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim_c; ++k) {
        if (z[static_cast<size_t>(k)].is_zero()) continue;
        const Rational f = xy * z[static_cast<size_t>(k)];
        for (int l = 0; l < dim_out; ++l)
          if (!at(i, j, k, l).is_zero()) v[static_cast<size_t>(l)] += f * at(i, j, k, l);
      }
    }
  }
  return v;
}

bool TrilinearMap::is_zero() const {
  for (const auto& x : t)
    if (!x.is_zero()) return false;
  return true;
}

Lie2Algebra Lie2Algebra::zeros(std::string name, int dim0, int dim1) {
  Lie2Algebra L;
  L.name = std::move(name);
  L.complex = TwoTermComplex(dim0, dim1);
  L.m0 = BilinearMap(dim0, dim0, dim0);
  L.l1 = BilinearMap(dim0, dim1, dim1);
  L.r1 = BilinearMap(dim1, dim0, dim1);
  L.S = BilinearMap(dim0, dim0, dim1);
  L.J = TrilinearMap(dim0, dim0, dim0, dim1);
  return L;
}

namespace {

void require_shapes(const Lie2Algebra& L) {
  const int n0 = L.complex.dim0;
  const int n1 = L.complex.dim1;
  const bool ok = L.complex.d.rows == n0 && L.complex.d.cols == n1 &&
                  L.m0.dim_a == n0 && L.m0.dim_b == n0 && L.m0.dim_out == n0 &&
                  L.l1.dim_a == n0 && L.l1.dim_b == n1 && L.l1.dim_out == n1 &&
                  L.r1.dim_a == n1 && L.r1.dim_b == n0 && L.r1.dim_out == n1 &&
                  L.S.dim_a == n0 && L.S.dim_b == n0 && L.S.dim_out == n1 &&
                  L.J.dim_a == n0 && L.J.dim_b == n0 && L.J.dim_c == n0 && L.J.dim_out == n1;
  if (!ok) throw ShapeMismatch("Lie2Algebra '" + L.name + "': inconsistent component shapes");
}

Vec negate(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

}  // namespace

VerificationReport verify_lie2(const Lie2Algebra& L) {
  require_shapes(L);
  const int n0 = L.complex.dim0;
  const int n1 = L.complex.dim1;
  const Matrix& d = L.complex.d;

  VerificationReport report;
  LawAccumulator acc(report);

  auto e0 = [&](int i) { return unit_vec(n0, i); };
  auto e1 = [&](int a) { return unit_vec(n1, a); };

  // Bracket is a chain map: d [x,a] = [x, da], d [a,x] = [da, x], and the
  // degree-2 compatibility [da, b] = [a, db] forced by L_2 = 0.
  acc.begin("bracket.chain_map.l1");
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a)
      acc.check({x, a}, d * L.l1.on_basis(x, a), L.m0.apply(e0(x), d.col(a)));

  acc.begin("bracket.chain_map.r1");
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n0; ++x)
      acc.check({a, x}, d * L.r1.on_basis(a, x), L.m0.apply(d.col(a), e0(x)));

  acc.begin("bracket.chain_map.deg2");
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      acc.check({a, b}, L.l1.apply(d.col(a), e1(b)), L.r1.apply(e1(a), d.col(b)));

  // Alternator: homotopy from [x,y] to -[y,x].
  acc.begin("alternator.deg0");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      acc.check({x, y}, negate(vec_add(L.m0.on_basis(y, x), L.m0.on_basis(x, y))),
                d * L.S.on_basis(x, y));

  acc.begin("alternator.deg1.left");
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a)
      acc.check({x, a}, negate(vec_add(L.r1.on_basis(a, x), L.l1.on_basis(x, a))),
                L.S.apply(e0(x), d.col(a)));

  acc.begin("alternator.deg1.right");
  for (int a = 0; a < n1; ++a)
    for (int x = 0; x < n0; ++x)
      acc.check({a, x}, negate(vec_add(L.l1.on_basis(x, a), L.r1.on_basis(a, x))),
                L.S.apply(d.col(a), e0(x)));

  // Jacobiator: antisymmetric homotopy from [x,[y,z]] to [[x,y],z] + [y,[x,z]].
  acc.begin("jacobiator.antisymmetry");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z) {
        acc.check({x, y, z}, L.J.on_basis(x, y, z), negate(L.J.on_basis(y, x, z)));
        acc.check({x, y, z}, L.J.on_basis(x, y, z), negate(L.J.on_basis(x, z, y)));
      }

  acc.begin("jacobiator.deg0");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z) {
        Vec lhs = L.m0.apply(L.m0.on_basis(x, y), e0(z));
        lhs = vec_add(lhs, L.m0.apply(e0(y), L.m0.on_basis(x, z)));
        lhs = vec_sub(lhs, L.m0.apply(e0(x), L.m0.on_basis(y, z)));
        acc.check({x, y, z}, lhs, d * L.J.on_basis(x, y, z));
      }

  acc.begin("jacobiator.deg1.slot1");
  for (int a = 0; a < n1; ++a)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z) {
        Vec lhs = L.r1.apply(L.r1.on_basis(a, y), e0(z));
        lhs = vec_add(lhs, L.l1.apply(e0(y), L.r1.on_basis(a, z)));
        lhs = vec_sub(lhs, L.r1.apply(e1(a), L.m0.on_basis(y, z)));
        acc.check({a, y, z}, lhs, L.J.apply(d.col(a), e0(y), e0(z)));
      }

  acc.begin("jacobiator.deg1.slot2");
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a)
      for (int z = 0; z < n0; ++z) {
        Vec lhs = L.r1.apply(L.l1.on_basis(x, a), e0(z));
        lhs = vec_add(lhs, L.r1.apply(e1(a), L.m0.on_basis(x, z)));
        lhs = vec_sub(lhs, L.l1.apply(e0(x), L.r1.on_basis(a, z)));
        acc.check({x, a, z}, lhs, L.J.apply(e0(x), d.col(a), e0(z)));
      }

  acc.begin("jacobiator.deg1.slot3");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int a = 0; a < n1; ++a) {
        Vec lhs = L.l1.apply(L.m0.on_basis(x, y), e1(a));
        lhs = vec_add(lhs, L.l1.apply(e0(y), L.l1.on_basis(x, a)));
        lhs = vec_sub(lhs, L.l1.apply(e0(x), L.l1.on_basis(y, a)));
        acc.check({x, y, a}, lhs, L.J.apply(e0(x), e0(y), d.col(a)));
      }

  // The four coherence equations.
  acc.begin("coherence.1");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z)
        for (int w = 0; w < n0; ++w) {
          Vec lhs = L.l1.apply(e0(x), L.J.on_basis(y, z, w));
          lhs = vec_add(lhs, L.J.apply(e0(x), L.m0.on_basis(y, z), e0(w)));
          lhs = vec_add(lhs, L.J.apply(e0(x), e0(z), L.m0.on_basis(y, w)));
          lhs = vec_add(lhs, L.r1.apply(L.J.on_basis(x, y, z), e0(w)));
          lhs = vec_add(lhs, L.l1.apply(e0(z), L.J.on_basis(x, y, w)));

          Vec rhs = L.J.apply(e0(x), e0(y), L.m0.on_basis(z, w));
          rhs = vec_add(rhs, L.J.apply(L.m0.on_basis(x, y), e0(z), e0(w)));
          rhs = vec_add(rhs, L.l1.apply(e0(y), L.J.on_basis(x, z, w)));
          rhs = vec_add(rhs, L.J.apply(e0(y), L.m0.on_basis(x, z), e0(w)));
          rhs = vec_add(rhs, L.J.apply(e0(y), e0(z), L.m0.on_basis(x, w)));
          acc.check({x, y, z, w}, lhs, rhs);
        }

  acc.begin("coherence.2");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z)
        acc.check({x, y, z}, vec_add(L.J.on_basis(x, y, z), L.J.on_basis(y, x, z)),
                  negate(L.r1.apply(L.S.on_basis(x, y), e0(z))));

  acc.begin("coherence.3");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z) {
        Vec rhs = L.l1.apply(e0(x), L.S.on_basis(y, z));
        rhs = vec_sub(rhs, L.S.apply(L.m0.on_basis(x, y), e0(z)));
        rhs = vec_sub(rhs, L.S.apply(e0(y), L.m0.on_basis(x, z)));
        acc.check({x, y, z}, vec_add(L.J.on_basis(x, y, z), L.J.on_basis(x, z, y)), rhs);
      }

  acc.begin("coherence.4");
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      for (int z = 0; z < n0; ++z)
        acc.check({x, y, z}, L.S.apply(e0(x), L.m0.on_basis(y, z)),
                  L.S.apply(L.m0.on_basis(y, z), e0(x)));

  return report;
}

bool is_hemistrict(const Lie2Algebra& L) { return L.J.is_zero(); }

bool is_semistrict(const Lie2Algebra& L) { return L.S.is_zero(); }

namespace {

void require_morphism_shapes(const Lie2Morphism& f, const Lie2Algebra& src, const Lie2Algebra& dst) {
  const bool ok = f.phi0.rows == dst.complex.dim0 && f.phi0.cols == src.complex.dim0 &&
                  f.phi1.rows == dst.complex.dim1 && f.phi1.cols == src.complex.dim1 &&
                  f.Phi.dim_a == src.complex.dim0 && f.Phi.dim_b == src.complex.dim0 &&
                  f.Phi.dim_out == dst.complex.dim1;
  if (!ok)
    throw ShapeMismatch("Lie2Morphism: shapes do not match '" + src.name + "' -> '" + dst.name + "'");
}

}  // namespace

VerificationReport verify_morphism(const Lie2Morphism& f, const Lie2Algebra& src,
                                   const Lie2Algebra& dst) {
  require_shapes(src);
  require_shapes(dst);
  require_morphism_shapes(f, src, dst);
  const int sn0 = src.complex.dim0;
  const int sn1 = src.complex.dim1;

  VerificationReport report;
  LawAccumulator acc(report);

  auto e0 = [&](int i) { return unit_vec(sn0, i); };
  auto ph0 = [&](int i) { return f.phi0.col(i); };
  auto ph1 = [&](int a) { return f.phi1.col(a); };

  acc.begin("morphism.chain_map");
  for (int a = 0; a < sn1; ++a)
    acc.check({a}, f.phi0 * src.complex.d.col(a), dst.complex.d * ph1(a));

  acc.begin("morphism.homotopy.deg0");
  for (int x = 0; x < sn0; ++x)
    for (int y = 0; y < sn0; ++y)
      acc.check({x, y},
                vec_sub(f.phi0 * src.m0.on_basis(x, y), dst.m0.apply(ph0(x), ph0(y))),
                dst.complex.d * f.Phi.on_basis(x, y));

  acc.begin("morphism.homotopy.deg1.left");
  for (int x = 0; x < sn0; ++x)
    for (int a = 0; a < sn1; ++a)
      acc.check({x, a},
                vec_sub(f.phi1 * src.l1.on_basis(x, a), dst.l1.apply(ph0(x), ph1(a))),
                f.Phi.apply(e0(x), src.complex.d.col(a)));

  acc.begin("morphism.homotopy.deg1.right");
  for (int a = 0; a < sn1; ++a)
    for (int x = 0; x < sn0; ++x)
      acc.check({a, x},
                vec_sub(f.phi1 * src.r1.on_basis(a, x), dst.r1.apply(ph1(a), ph0(x))),
                f.Phi.apply(src.complex.d.col(a), e0(x)));

  acc.begin("morphism.alternator");
  for (int x = 0; x < sn0; ++x)
    for (int y = 0; y < sn0; ++y)
      acc.check({x, y},
                vec_sub(dst.S.apply(ph0(x), ph0(y)), f.phi1 * src.S.on_basis(x, y)),
                vec_add(f.Phi.on_basis(x, y), f.Phi.on_basis(y, x)));

  acc.begin("morphism.jacobiator");
  for (int x = 0; x < sn0; ++x)
    for (int y = 0; y < sn0; ++y)
      for (int z = 0; z < sn0; ++z) {
        const Vec lhs = vec_sub(dst.J.apply(ph0(x), ph0(y), ph0(z)),
                                f.phi1 * src.J.on_basis(x, y, z));
        Vec rhs = dst.l1.apply(ph0(x), f.Phi.on_basis(y, z));
        rhs = vec_sub(rhs, dst.l1.apply(ph0(y), f.Phi.on_basis(x, z)));
        rhs = vec_sub(rhs, dst.r1.apply(f.Phi.on_basis(x, y), ph0(z)));
        rhs = vec_sub(rhs, f.Phi.apply(src.m0.on_basis(x, y), e0(z)));
        rhs = vec_sub(rhs, f.Phi.apply(e0(y), src.m0.on_basis(x, z)));
        rhs = vec_add(rhs, f.Phi.apply(e0(x), src.m0.on_basis(y, z)));
        acc.check({x, y, z}, lhs, rhs);
      }

  return report;
}

Lie2Morphism identity_morphism(const Lie2Algebra& L) {
  Lie2Morphism id;
  id.phi0 = Matrix::identity(L.complex.dim0);
  id.phi1 = Matrix::identity(L.complex.dim1);
  id.Phi = BilinearMap(L.complex.dim0, L.complex.dim0, L.complex.dim1);
  return id;
}

Lie2Morphism compose(const Lie2Morphism& f, const Lie2Morphism& g, const Lie2Algebra& A,
                     const Lie2Algebra& B, const Lie2Algebra& C) {
  require_morphism_shapes(f, A, B);
  require_morphism_shapes(g, B, C);

  Lie2Morphism h;
  h.phi0 = g.phi0 * f.phi0;
  h.phi1 = g.phi1 * f.phi1;
  h.Phi = BilinearMap(A.complex.dim0, A.complex.dim0, C.complex.dim1);
  for (int x = 0; x < A.complex.dim0; ++x)
    for (int y = 0; y < A.complex.dim0; ++y) {
      const Vec v = vec_add(g.phi1 * f.Phi.on_basis(x, y),
                            g.Phi.apply(f.phi0.col(x), f.phi0.col(y)));
      for (int k = 0; k < C.complex.dim1; ++k) h.Phi.at(x, y, k) = v[static_cast<size_t>(k)];
    }

  const VerificationReport check = verify_morphism(h, A, C);
  if (!check.all_pass()) {
    const LawCheck* fail = check.first_failure();
    std::string witness;
    for (int i : fail->witness) witness += (witness.empty() ? "(" : ",") + std::to_string(i);
    throw CompositionNotVerified("compose: composite fails '" + fail->law + "' at " + witness + ")",
                                 fail->witness);
  }
  return h;
}

Lie2Morphism inverse_morphism(const Lie2Morphism& f) {
  Lie2Morphism inv;
  inv.phi0 = inverse(f.phi0);
  inv.phi1 = inverse(f.phi1);
  const int n0 = inv.phi0.cols;
  inv.Phi = BilinearMap(n0, n0, f.phi1.cols);
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y) {
      const Vec v = inv.phi1 * f.Phi.apply(inv.phi0.col(x), inv.phi0.col(y));
      for (int k = 0; k < inv.Phi.dim_out; ++k) inv.Phi.at(x, y, k) = -v[static_cast<size_t>(k)];
    }
  return inv;
}

bool is_isomorphism(const Lie2Morphism& f, const Lie2Algebra& src, const Lie2Algebra& dst) {
  require_morphism_shapes(f, src, dst);
  if (f.phi0.rows != f.phi0.cols || f.phi1.rows != f.phi1.cols) return false;

  Lie2Morphism inv;
  try {
    inv = inverse_morphism(f);
  } catch (const SingularMatrix&) {
    return false;
  }
  if (!verify_morphism(inv, dst, src).all_pass()) return false;

  const Lie2Morphism forward = compose(f, inv, src, dst, src);
  const Lie2Morphism backward = compose(inv, f, dst, src, dst);
  const Lie2Morphism id_src = identity_morphism(src);
  const Lie2Morphism id_dst = identity_morphism(dst);
  return forward.phi0 == id_src.phi0 && forward.phi1 == id_src.phi1 &&
         forward.Phi == id_src.Phi && backward.phi0 == id_dst.phi0 &&
         backward.phi1 == id_dst.phi1 && backward.Phi == id_dst.Phi;
}

}  // namespace plectic
