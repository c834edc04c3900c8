// plectic: construct and machine-verify the Lie 2-algebras attached to the
// canonical invariant 2-plectic structure on a compact Lie algebra.
//
// Exit codes: 0 all verifications pass, 1 a verification or construction
// check failed (report on stdout), 2 input or usage error (message on
// stderr).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "plectic/errors.hpp"
#include "plectic/json_io.hpp"
#include "plectic/string_lie2.hpp"

namespace {

using namespace plectic;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string algebra;
  std::string algebra_file;
  std::string k_text = "1";
  std::string inner_product = "killing-negative";
  bool inner_product_given = false;
  std::string format = "text";
  std::string output;
  std::string what = "plectic";
  std::string file;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + opt.output + "'");
  out << text;
}

struct AlgebraInput {
  LieAlgebra g;
  InnerProduct ip;
};

AlgebraInput load_algebra(const Options& opt) {
  std::optional<LieAlgebra> g;
  std::optional<InnerProduct> embedded_ip;
  if (!opt.algebra.empty() && !opt.algebra_file.empty())
    throw BadParameter("give either --algebra or --algebra-file, not both");
  if (!opt.algebra.empty()) {
    g = make_fixture(opt.algebra);
  } else if (!opt.algebra_file.empty()) {
    LoadedAlgebra loaded = lie_algebra_from_json(read_file(opt.algebra_file));
    g = std::move(loaded.g);
    embedded_ip = std::move(loaded.ip);
  } else {
    throw BadParameter("an algebra is required (--algebra or --algebra-file)");
  }
  const auto report = validate(*g);
  if (!report.all_pass()) {
    const LawCheck* fail = report.first_failure();
    throw BadParameter("algebra fails '" + fail->law + "'; not a Lie algebra");
  }

  // precedence: explicit flag, then an inner product embedded in the
  // algebra file, then the killing-negative default
  std::optional<InnerProduct> ip;
  if (!opt.inner_product_given && embedded_ip)
    ip = std::move(embedded_ip);
  else if (opt.inner_product == "killing-negative")
    ip = InnerProduct(Rational(-1) * killing_form(*g));
  else if (opt.inner_product == "identity")
    ip = InnerProduct(Matrix::identity(g->dim()));
  else
    ip = InnerProduct(matrix_from_json(read_file(opt.inner_product)));
  return AlgebraInput{std::move(*g), std::move(*ip)};
}

Rational parse_level(const Options& opt, bool require_nonzero) {
  const Rational k = Rational::parse(opt.k_text);
  if (require_nonzero && k.is_zero()) throw BadParameter("k must be nonzero for this command");
  return k;
}

std::string witness_text(const std::vector<int>& witness) {
  std::string s = "(";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(witness[i]);
  }
  return s + ")";
}

std::string certificate_text(const FourWayCertificate& cert) {
  std::ostringstream os;
  os << "four-way certificate: " << cert.g.name() << ", k = " << cert.k.str() << "\n";
  for (const auto& a : cert.algebras) {
    os << "  algebra " << a.name << ": " << (a.verified ? "verified" : "FAILED");
    if (a.hemistrict) os << ", hemistrict";
    if (a.semistrict) os << ", semistrict";
    os << "\n";
    if (!a.verified) {
      const LawCheck* fail = a.report.first_failure();
      os << "    violated law " << fail->law << " at " << witness_text(fail->witness) << "\n";
    }
  }
  for (const auto& m : cert.isomorphisms) {
    os << "  isomorphism " << m.from << " -> " << m.to << ": "
       << (m.verified ? (m.isomorphism ? "verified isomorphism" : "verified, not invertible")
                      : "FAILED");
    os << "\n";
    if (!m.verified) {
      const LawCheck* fail = m.report.first_failure();
      os << "    violated law " << fail->law << " at " << witness_text(fail->witness) << "\n";
    }
  }
  os << "  cocycle: closed " << (cert.cocycle.cocycle ? "yes" : "no") << ", exact "
     << (cert.cocycle.coboundary ? "yes" : "no") << ", nontrivial class "
     << (cert.cocycle.nontrivial_class ? "yes" : "no") << "\n";
  os << "result: " << (cert.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int run_certify(const Options& opt) {
  const AlgebraInput in = load_algebra(opt);
  const Rational k = parse_level(opt, true);
  const FourWayCertificate cert = four_way_certificate(in.g, in.ip, k);
  emit(opt, opt.format == "json" ? certificate_to_json(cert) : certificate_text(cert));
  return cert.pass() ? kExitPass : kExitFail;
}

int run_build(const Options& opt) {
  const AlgebraInput in = load_algebra(opt);
  const Rational k = parse_level(opt, true);
  if (opt.what == "plectic") {
    const PlecticStructure p = PlecticStructure::build(in.g, in.ip, k);
    emit(opt, plectic_to_json(p));
    return kExitPass;
  }
  std::optional<Lie2Algebra> L;
  if (opt.what == "L_h")
    L = build_L_h(PlecticStructure::build(in.g, in.ip, k));
  else if (opt.what == "L_s")
    L = build_L_s(PlecticStructure::build(in.g, in.ip, k));
  else if (opt.what == "string_s")
    L = build_string_s(StringData(in.g, in.ip, k));
  else if (opt.what == "string_h")
    L = build_string_h(StringData(in.g, in.ip, k));
  else
    throw BadParameter("unknown build target '" + opt.what + "'");
  emit(opt, lie2_to_json(*L));
  return kExitPass;
}

int run_verify(const Options& opt) {
  if (opt.file.empty()) throw BadParameter("verify requires --file");
  const Lie2Algebra L = lie2_from_json(read_file(opt.file));
  const VerificationReport report = verify_lie2(L);
  if (opt.format == "json")
    emit(opt, report_to_json(report));
  else
    emit(opt, report.summary() + (report.all_pass() ? "result: PASS\n" : "result: FAIL\n"));
  return report.all_pass() ? kExitPass : kExitFail;
}

int run_cocycle(const Options& opt) {
  const AlgebraInput in = load_algebra(opt);
  const Rational k = parse_level(opt, false);
  const StringData sd(in.g, in.ip, k);
  const bool cocycle = is_cocycle(sd);
  const bool coboundary = is_coboundary(sd);
  const bool nontrivial = cocycle && !coboundary;
  if (opt.format == "json") {
    std::ostringstream os;
    os << "{\n  \"is_cocycle\": " << (cocycle ? "true" : "false")
       << ",\n  \"is_coboundary\": " << (coboundary ? "true" : "false")
       << ",\n  \"nontrivial_class\": " << (nontrivial ? "true" : "false") << "\n}\n";
    emit(opt, os.str());
  } else {
    std::ostringstream os;
    os << "cocycle report: " << in.g.name() << ", k = " << k.str() << "\n"
       << "  d(j) = 0: " << (cocycle ? "yes" : "no") << "\n"
       << "  j exact: " << (coboundary ? "yes" : "no") << "\n"
       << "  class nontrivial: " << (nontrivial ? "yes" : "no") << "\n";
    emit(opt, os.str());
  }
  return nontrivial ? kExitPass : kExitFail;
}

// Rejections of well-formed inputs are verification outcomes (exit 1);
// everything else is a usage problem (exit 2).
bool is_verification_failure(const Error& e) {
  const std::string& kind = e.kind();
  return kind == "Degenerate" || kind == "NotInvariant" || kind == "NotDefinite" ||
         kind == "MismatchedData" || kind == "CompositionNotVerified";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of string Lie 2-algebras from 2-plectic data"};
  app.require_subcommand(1);
  Options opt;

  auto add_algebra_options = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", opt.algebra,
                    "named fixture: so{n}, su{n}, abelian{n}, heisenberg3, sum:a+b");
    cmd->add_option("--algebra-file", opt.algebra_file, "JSON file with the algebra");
    cmd->add_option("--k", opt.k_text, "level, a rational like 1, -2 or 1/2");
    cmd->add_option("--inner-product", opt.inner_product,
                    "killing-negative (default), identity, or a JSON matrix file")
        ->each([&](const std::string&) { opt.inner_product_given = true; });
  };
  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--output,-o", opt.output, "write to file instead of stdout");
  };

  CLI::App* certify = app.add_subcommand("certify", "build and verify the four-way certificate");
  add_algebra_options(certify);
  add_output_options(certify);

  CLI::App* build = app.add_subcommand("build", "construct a structure and emit its JSON");
  add_algebra_options(build);
  add_output_options(build);
  build->add_option("--what", opt.what, "plectic (default), L_h, L_s, string_s, string_h");

  CLI::App* verify = app.add_subcommand("verify", "verify a Lie 2-algebra from JSON");
  verify->add_option("--file", opt.file, "Lie2Algebra JSON file");
  add_output_options(verify);

  CLI::App* cocycle = app.add_subcommand("cocycle", "check the 3-cocycle and its class");
  add_algebra_options(cocycle);
  add_output_options(cocycle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (certify->parsed()) return run_certify(opt);
    if (build->parsed()) return run_build(opt);
    if (verify->parsed()) return run_verify(opt);
    return run_cocycle(opt);
  } catch (const Error& e) {
    if (is_verification_failure(e)) {
      std::cout << (opt.format == "json" ? error_to_json(e)
                                         : std::string("rejected: ") + e.kind() + ": " + e.what() +
                                               (e.witness().empty()
                                                    ? std::string("\n")
                                                    : " at " + witness_text(e.witness()) + "\n"));
      return kExitFail;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
