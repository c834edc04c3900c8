#include "plectic/report.hpp"

#include <sstream>

namespace plectic {

namespace {

std::string render_vec(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& l : laws) {
    os << l.law << ": " << (l.pass ? "pass" : "FAIL");
    if (!l.pass) {
      os << " at (";
      for (size_t i = 0; i < l.witness.size(); ++i) {
        if (i) os << ",";
        os << l.witness[i];
      }
      os << "), lhs = " << render_vec(l.lhs) << ", rhs = " << render_vec(l.rhs);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace plectic
