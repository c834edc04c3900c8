#ifndef PLECTIC_STRING_LIE2_HPP
#define PLECTIC_STRING_LIE2_HPP

#include <string>
#include <vector>

#include "plectic/lie2.hpp"
#include "plectic/two_plectic.hpp"

namespace plectic {

/// Classification data for the string Lie 2-algebra: the algebra, an
/// ad-invariant pairing, the level k, the trivial representation on a
/// 1-dimensional space of 1-chains, and the 3-cocycle
/// j(x,y,z) = k<x,[y,z]>. k = 0 is admitted (j vanishes identically and the
/// cohomology queries degenerate gracefully); the 2-plectic constructions
/// require k != 0 and enforce it themselves.
class StringData {
public:
  StringData(LieAlgebra g, InnerProduct ip, Rational k);

  const LieAlgebra& algebra() const { return g_; }
  const InnerProduct& ip() const { return ip_; }
  const Rational& level() const { return k_; }

  /// The cocycle as a degree-3 form.
  AltForm j_form() const;

  Rational j(const Vec& x, const Vec& y, const Vec& z) const;

private:
  LieAlgebra g_;
  InnerProduct ip_;
  Rational k_;
};

/// The hemistrict Lie 2-algebra of invariant observables: 0-chains are the
/// invariant 1-forms in dual-basis coordinates, 1-chains the constants,
/// d = 0, degree-0 bracket the hemi-bracket, alternator from alternator_S,
/// Jacobiator zero.
Lie2Algebra build_L_h(const PlecticStructure& P);

/// The semistrict counterpart: degree-0 bracket the semi-bracket, alternator
/// zero, Jacobiator from jacobiator_J.
Lie2Algebra build_L_s(const PlecticStructure& P);

/// The string Lie 2-algebra from classification data: 0-chains the algebra
/// itself, 1-chains the scalars, d = 0, degree-0 bracket the Lie bracket,
/// degree-1 brackets zero (trivial representation), S = 0, J = j.
Lie2Algebra build_string_s(const StringData& sd);

/// Roytenberg's hemistrict presentation: same complex and bracket,
/// S(x,y) = -2k<x,y>, J = 0.
Lie2Algebra build_string_h(const StringData& sd);

/// L(G,k)_h -> L(G,k)_s: identity chain map with Phi(alpha, beta) =
/// interior(v_alpha, beta).
Lie2Morphism iso_h_to_s(const PlecticStructure& P);

/// g_k^s -> L(G,k)_s: phi0 the matrix of v -> k<v,.>, phi1 = 1, Phi = 0.
/// Throws MismatchedData when P and sd disagree on (g, ip, k).
Lie2Morphism iso_string_to_Ls(const PlecticStructure& P, const StringData& sd);

/// g_k^h -> L(G,k)_h: the same chain map transports Roytenberg's alternator
/// to the geometric one on the nose, so Phi = 0 here as well.
Lie2Morphism iso_string_h_to_Lh(const PlecticStructure& P, const StringData& sd);

bool is_cocycle(const StringData& sd);

/// Solvability of d(b) = j over the 2-cochains.
bool is_coboundary(const StringData& sd);

struct AlgebraCertificate {
  std::string name;
  bool verified = false;
  bool hemistrict = false;
  bool semistrict = false;
  VerificationReport report;
};

struct MorphismCertificate {
  std::string from;
  std::string to;
  bool verified = false;
  bool isomorphism = false;
  VerificationReport report;
};

struct CocycleCertificate {
  bool cocycle = false;
  bool coboundary = false;
  bool nontrivial_class = false;
};

/// Machine certificate that the four Lie 2-algebras attached to (g, ip, k)
/// exist, satisfy all axioms, carry the expected strictness designations,
/// and are pairwise identified by verified isomorphisms. Everything is
/// recomputed from the inputs; nothing is shared between the four builds.
struct FourWayCertificate {
  LieAlgebra g;
  InnerProduct ip;
  Rational k;
  std::vector<AlgebraCertificate> algebras;      // L_h, L_s, string_s, string_h
  std::vector<MorphismCertificate> isomorphisms; // string_s->L_s, L_h->L_s, string_h->string_s
  CocycleCertificate cocycle;

  bool pass() const;
};

/// Builds the full certificate. Construction failures (ZeroLevel,
/// NotInvariant, Degenerate, NotDefinite) propagate as exceptions;
/// verification failures are recorded in the certificate.
FourWayCertificate four_way_certificate(const LieAlgebra& g, const InnerProduct& ip,
                                        const Rational& k);

}  // namespace plectic

#endif
