#include "plectic/json_io.hpp"

#include <json.hpp>

#include "plectic/errors.hpp"

namespace plectic {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

Rational rational_field(const json& j) {
  if (!j.is_string()) throw ParseError("json: rationals must be strings like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

// Desk-scale bound on deserialized dimensions; dense tensors are cubic and
// quartic in this, so unvalidated sizes must not reach the allocators.
constexpr int kMaxDim = 64;

int dim_field(const json& j, const char* what, int min_value = 1) {
  if (!j.is_number_integer()) throw ParseError(std::string("json: ") + what + " must be an integer");
  const long long v = j.get<long long>();
  if (v < min_value || v > kMaxDim)
    throw ParseError(std::string("json: ") + what + " out of range [" + std::to_string(min_value) +
                     ", " + std::to_string(kMaxDim) + "]");
  return static_cast<int>(v);
}

std::string tuple_key(std::span<const int> tuple) {
  std::string key;
  for (int v : tuple) {
    if (!key.empty()) key += ',';
    key += std::to_string(v + 1);
  }
  return key;
}

std::vector<int> parse_tuple_key(const std::string& key) {
  std::vector<int> tuple;
  if (key.empty()) return tuple;  // the empty tuple of a 0-form
  size_t pos = 0;
  while (pos <= key.size()) {
    const size_t comma = key.find(',', pos);
    const std::string part = key.substr(pos, comma == std::string::npos ? comma : comma - pos);
    try {
      tuple.push_back(std::stoi(part) - 1);
    } catch (const std::exception&) {
      throw ParseError("json: malformed tuple key '" + key + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return tuple;
}

json matrix_to_value(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_value(const json& j) {
  if (!j.is_array()) throw ParseError("json: matrix must be an array of rows");
  const int rows = static_cast<int>(j.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j.at(static_cast<size_t>(r)).size()) != cols)
      throw ParseError("json: ragged matrix");
    for (int c = 0; c < cols; ++c)
      m.at(r, c) = rational_field(j.at(static_cast<size_t>(r)).at(static_cast<size_t>(c)));
  }
  return m;
}

json vec_to_value(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(x.str());
  return arr;
}

json alt_form_to_value(const AltForm& f) {
  json coeffs = json::object();
  const auto tuples = increasing_tuples(f.dim(), f.degree());
  for (size_t t = 0; t < tuples.size(); ++t)
    if (!f.coeff(static_cast<int>(t)).is_zero())
      coeffs[tuple_key(tuples[t])] = f.coeff(static_cast<int>(t)).str();
  return json{{"degree", f.degree()}, {"dim", f.dim()}, {"coeffs", std::move(coeffs)}};
}

AltForm alt_form_from_value(const json& j) {
  const int degree = dim_field(j.at("degree"), "degree", 0);
  const int dim = dim_field(j.at("dim"), "dim");
  AltForm f(degree, dim);
  for (const auto& [key, value] : j.at("coeffs").items()) {
    const std::vector<int> tuple = parse_tuple_key(key);
    if (static_cast<int>(tuple.size()) != degree)
      throw ParseError("json: coefficient key '" + key + "' has wrong arity");
    for (size_t i = 0; i < tuple.size(); ++i)
      if (tuple[i] < 0 || tuple[i] >= dim || (i > 0 && tuple[i] <= tuple[i - 1]))
        throw ParseError("json: coefficient key '" + key + "' is not increasing in range");
    f.coeff_at(tuple) = rational_field(value);
  }
  return f;
}

json lie_algebra_to_value(const LieAlgebra& g, const InnerProduct* ip) {
  json c = json::object();
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      json entry = json::object();
      for (int k = 0; k < g.dim(); ++k)
        if (!g.c(i, j, k).is_zero()) entry[std::to_string(k + 1)] = g.c(i, j, k).str();
      if (!entry.empty()) c[std::to_string(i + 1) + "," + std::to_string(j + 1)] = std::move(entry);
    }
  json out{{"dim", g.dim()}, {"name", g.name()}, {"c", std::move(c)}};
  if (ip != nullptr) out["inner_product"] = matrix_to_value(ip->matrix());
  return out;
}

LoadedAlgebra lie_algebra_from_value(const json& j) {
  const int dim = dim_field(j.at("dim"), "dim");
  LieAlgebra g(dim, j.contains("name") ? j.at("name").get<std::string>() : "");
  for (const auto& [key, entry] : j.at("c").items()) {
    const std::vector<int> pair = parse_tuple_key(key);
    if (pair.size() != 2 || pair[0] < 0 || pair[1] >= dim || pair[0] >= pair[1])
      throw ParseError("json: bracket key '" + key + "' must be \"i,j\" with i < j");
    for (const auto& [kkey, value] : entry.items()) {
      const std::vector<int> kidx = parse_tuple_key(kkey);
      if (kidx.size() != 1 || kidx[0] < 0 || kidx[0] >= dim)
        throw ParseError("json: bracket component '" + kkey + "' out of range");
      const Rational v = rational_field(value);
      g.c(pair[0], pair[1], kidx[0]) = v;
      g.c(pair[1], pair[0], kidx[0]) = -v;
    }
  }
  LoadedAlgebra out{std::move(g), std::nullopt};
  if (j.contains("inner_product")) out.ip = InnerProduct(matrix_from_value(j.at("inner_product")));
  return out;
}

json bilinear_to_value(const BilinearMap& m) {
  json out = json::array();
  for (int i = 0; i < m.dim_a; ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim_b; ++j) row.push_back(vec_to_value(m.on_basis(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

BilinearMap bilinear_from_value(const json& j, int a, int b, int out_dim, const char* what) {
  BilinearMap m(a, b, out_dim);
  if (static_cast<int>(j.size()) != a) throw ParseError(std::string("json: ") + what + " has wrong shape");
  for (int i = 0; i < a; ++i) {
    const json& row = j.at(static_cast<size_t>(i));
    if (static_cast<int>(row.size()) != b) throw ParseError(std::string("json: ") + what + " has wrong shape");
    for (int jj = 0; jj < b; ++jj) {
      const json& cell = row.at(static_cast<size_t>(jj));
      if (static_cast<int>(cell.size()) != out_dim)
        throw ParseError(std::string("json: ") + what + " has wrong shape");
      for (int k = 0; k < out_dim; ++k) m.at(i, jj, k) = rational_field(cell.at(static_cast<size_t>(k)));
    }
  }
  return m;
}

json trilinear_to_value(const TrilinearMap& m) {
  json out = json::array();
  for (int i = 0; i < m.dim_a; ++i) {
    json plane = json::array();
    for (int j = 0; j < m.dim_b; ++j) {
      json row = json::array();
      for (int k = 0; k < m.dim_c; ++k) row.push_back(vec_to_value(m.on_basis(i, j, k)));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

TrilinearMap trilinear_from_value(const json& j, int a, int b, int c, int out_dim, const char* what) {
  TrilinearMap m(a, b, c, out_dim);
  if (static_cast<int>(j.size()) != a) throw ParseError(std::string("json: ") + what + " has wrong shape");
  for (int i = 0; i < a; ++i)
    for (int jj = 0; jj < b; ++jj) {
      const json& row = j.at(static_cast<size_t>(i)).at(static_cast<size_t>(jj));
      if (static_cast<int>(row.size()) != c) throw ParseError(std::string("json: ") + what + " has wrong shape");
      for (int kk = 0; kk < c; ++kk) {
        const json& cell = row.at(static_cast<size_t>(kk));
        if (static_cast<int>(cell.size()) != out_dim)
          throw ParseError(std::string("json: ") + what + " has wrong shape");
        for (int l = 0; l < out_dim; ++l)
          m.at(i, jj, kk, l) = rational_field(cell.at(static_cast<size_t>(l)));
      }
    }
  return m;
}

json report_to_value(const VerificationReport& report) {
  json laws = json::array();
  for (const auto& l : report.laws) {
    json entry{{"law", l.law}, {"pass", l.pass}};
    entry["witness"] = l.witness;
    entry["lhs"] = vec_to_value(l.lhs);
    entry["rhs"] = vec_to_value(l.rhs);
    laws.push_back(std::move(entry));
  }
  return laws;
}

json failure_to_value(const VerificationReport& report) {
  const LawCheck* fail = report.first_failure();
  return json{{"law", fail->law},
              {"witness", fail->witness},
              {"lhs", vec_to_value(fail->lhs)},
              {"rhs", vec_to_value(fail->rhs)}};
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return dump(matrix_to_value(m)); }

Matrix matrix_from_json(std::string_view text) {
  try {
    return matrix_from_value(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string alt_form_to_json(const AltForm& f) { return dump(alt_form_to_value(f)); }

AltForm alt_form_from_json(std::string_view text) {
  try {
    return alt_form_from_value(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string lie_algebra_to_json(const LieAlgebra& g, const InnerProduct* ip) {
  return dump(lie_algebra_to_value(g, ip));
}

LoadedAlgebra lie_algebra_from_json(std::string_view text) {
  try {
    return lie_algebra_from_value(parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string plectic_to_json(const PlecticStructure& P) {
  json out{{"lie_algebra", lie_algebra_to_value(P.algebra(), nullptr)},
           {"inner_product", matrix_to_value(P.ip().matrix())},
           {"k", P.level().str()},
           {"nu", alt_form_to_value(P.nu())}};
  return dump(out);
}

std::string lie2_to_json(const Lie2Algebra& L) {
  json out{{"name", L.name},
           {"dim0", L.complex.dim0},
           {"dim1", L.complex.dim1},
           {"d", matrix_to_value(L.complex.d)},
           {"m0", bilinear_to_value(L.m0)},
           {"l1", bilinear_to_value(L.l1)},
           {"r1", bilinear_to_value(L.r1)},
           {"S", bilinear_to_value(L.S)},
           {"J", trilinear_to_value(L.J)}};
  return dump(out);
}

Lie2Algebra lie2_from_json(std::string_view text) {
  try {
    const json j = parse(text);
    const int n0 = dim_field(j.at("dim0"), "dim0");
    const int n1 = dim_field(j.at("dim1"), "dim1", 0);
    Lie2Algebra L = Lie2Algebra::zeros(j.contains("name") ? j.at("name").get<std::string>() : "", n0, n1);
    L.complex.d = matrix_from_value(j.at("d"));
    if (L.complex.d.rows != n0 || L.complex.d.cols != n1)
      throw ParseError("json: differential has wrong shape");
    L.m0 = bilinear_from_value(j.at("m0"), n0, n0, n0, "m0");
    L.l1 = bilinear_from_value(j.at("l1"), n0, n1, n1, "l1");
    L.r1 = bilinear_from_value(j.at("r1"), n1, n0, n1, "r1");
    L.S = bilinear_from_value(j.at("S"), n0, n0, n1, "S");
    L.J = trilinear_from_value(j.at("J"), n0, n0, n0, n1, "J");
    return L;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string morphism_to_json(const Lie2Morphism& f) {
  json out{{"phi0", matrix_to_value(f.phi0)},
           {"phi1", matrix_to_value(f.phi1)},
           {"Phi", bilinear_to_value(f.Phi)}};
  return dump(out);
}

Lie2Morphism morphism_from_json(std::string_view text) {
  try {
    const json j = parse(text);
    Lie2Morphism f;
    f.phi0 = matrix_from_value(j.at("phi0"));
    f.phi1 = matrix_from_value(j.at("phi1"));
    const json& phi = j.at("Phi");
    const int a = static_cast<int>(phi.size());
    const int b = a == 0 ? 0 : static_cast<int>(phi.at(0).size());
    const int out_dim = (a == 0 || b == 0) ? 0 : static_cast<int>(phi.at(0).at(0).size());
    f.Phi = bilinear_from_value(phi, a, b, out_dim, "Phi");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

std::string report_to_json(const VerificationReport& report) { return dump(report_to_value(report)); }

std::string certificate_to_json(const FourWayCertificate& cert) {
  json algebras = json::array();
  for (const auto& a : cert.algebras) {
    json entry{{"name", a.name},
               {"verified", a.verified},
               {"hemistrict", a.hemistrict},
               {"semistrict", a.semistrict}};
    if (!a.verified) entry["failure"] = failure_to_value(a.report);
    algebras.push_back(std::move(entry));
  }
  json isomorphisms = json::array();
  for (const auto& m : cert.isomorphisms) {
    json entry{{"from", m.from}, {"to", m.to}, {"verified", m.verified}, {"isomorphism", m.isomorphism}};
    if (!m.verified) entry["failure"] = failure_to_value(m.report);
    isomorphisms.push_back(std::move(entry));
  }
  json out{{"input",
            json{{"lie_algebra", lie_algebra_to_value(cert.g, nullptr)},
                 {"inner_product", matrix_to_value(cert.ip.matrix())},
                 {"k", cert.k.str()}}},
           {"algebras", std::move(algebras)},
           {"isomorphisms", std::move(isomorphisms)},
           {"cocycle", json{{"is_cocycle", cert.cocycle.cocycle},
                            {"is_coboundary", cert.cocycle.coboundary},
                            {"nontrivial_class", cert.cocycle.nontrivial_class}}},
           {"pass", cert.pass()}};
  return dump(out);
}

std::string error_to_json(const Error& e) {
  json out{{"error", json{{"kind", e.kind()}, {"message", e.what()}, {"witness", e.witness()}}}};
  return dump(out);
}

}  // namespace plectic
