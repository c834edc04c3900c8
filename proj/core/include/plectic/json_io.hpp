#ifndef PLECTIC_JSON_IO_HPP
#define PLECTIC_JSON_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "plectic/alt_form.hpp"
#include "plectic/errors.hpp"
#include "plectic/lie2.hpp"
#include "plectic/report.hpp"
#include "plectic/string_lie2.hpp"
#include "plectic/two_plectic.hpp"

namespace plectic {

/// JSON serialization. Output is byte-deterministic: object keys appear in a
/// fixed order, rationals in canonical "p/q" form, arrays in basis/colex
/// order; indentation is two spaces with a trailing newline. Parsers throw
/// ParseError on malformed input.
///
/// Forms: {"degree": p, "dim": n, "coeffs": {"1,2,3": "2", ...}} with
/// increasing 1-based tuple keys in colex order; zero coefficients are
/// omitted. Lie algebras: {"dim", "name", "c": {"i,j": {"k": "q", ...}},
/// "inner_product"} with only i<j entries stored; the loader reconstructs
/// antisymmetry.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(std::string_view text);

std::string alt_form_to_json(const AltForm& f);
AltForm alt_form_from_json(std::string_view text);

struct LoadedAlgebra {
  LieAlgebra g;
  std::optional<InnerProduct> ip;
};

std::string lie_algebra_to_json(const LieAlgebra& g, const InnerProduct* ip = nullptr);
LoadedAlgebra lie_algebra_from_json(std::string_view text);

std::string plectic_to_json(const PlecticStructure& P);

std::string lie2_to_json(const Lie2Algebra& L);
Lie2Algebra lie2_from_json(std::string_view text);

std::string morphism_to_json(const Lie2Morphism& f);
Lie2Morphism morphism_from_json(std::string_view text);

std::string report_to_json(const VerificationReport& report);

std::string certificate_to_json(const FourWayCertificate& cert);

std::string error_to_json(const Error& e);

}  // namespace plectic

#endif
