#include "plectic/rational.hpp"

#include <cctype>
#include <ostream>

#include "plectic/errors.hpp"

namespace plectic {

Rational::Rational(long num, long den) {
  if (den == 0) throw BadParameter("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view s) {
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  // canonical form: sign on the numerator only, denominator positive
  if (!is_integer_token(num, true) || !is_integer_token(den, false))
    throw ParseError("Rational: malformed literal '" + std::string(s) + "'");
  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), (std::string(num) + "/" + std::string(den)).c_str(), 10) != 0)
    throw ParseError("Rational: malformed literal '" + std::string(s) + "'");
  if (sgn(mpq_class(v.get_den())) == 0)
    throw ParseError("Rational: zero denominator in '" + std::string(s) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw BadParameter("Rational: reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
  return Rational(std::move(r));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw BadParameter("Rational: division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw BadParameter("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

}  // namespace plectic
