#ifndef PLECTIC_REPORT_HPP
#define PLECTIC_REPORT_HPP

#include <string>
#include <vector>

#include "plectic/matrix.hpp"

namespace plectic {

/// One verified law family. When a family fails, `witness` holds the first
/// (lowest-lex) failing basis tuple, 1-based, and lhs/rhs the two sides of
/// the equation evaluated there.
struct LawCheck {
  std::string law;
  bool pass = true;
  std::vector<int> witness;
  Vec lhs;
  Vec rhs;
};

struct VerificationReport {
  std::vector<LawCheck> laws;

  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }

  const LawCheck* first_failure() const {
    for (const auto& l : laws)
      if (!l.pass) return &l;
    return nullptr;
  }

  std::string summary() const;
};

/// Records per-family results; only the first failure of a family is kept.
/// Iteration in lexicographic tuple order makes the kept witness the
/// lowest-lex one.
class LawAccumulator {
public:
  explicit LawAccumulator(VerificationReport& report) : report_(report) {}

  void begin(std::string law) {
    report_.laws.push_back(LawCheck{std::move(law), true, {}, {}, {}});
  }

  /// `tuple` is 0-based here; stored 1-based.
  void check(const std::vector<int>& tuple, const Vec& lhs, const Vec& rhs) {
    LawCheck& cur = report_.laws.back();
    if (!cur.pass || lhs == rhs) return;
    cur.pass = false;
    cur.witness.reserve(tuple.size());
    for (int i : tuple) cur.witness.push_back(i + 1);
    cur.lhs = lhs;
    cur.rhs = rhs;
  }

  void check_scalar(const std::vector<int>& tuple, const Rational& lhs, const Rational& rhs) {
    check(tuple, Vec{lhs}, Vec{rhs});
  }

private:
  VerificationReport& report_;
};

}  // namespace plectic

#endif
