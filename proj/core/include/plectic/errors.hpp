#ifndef PLECTIC_ERRORS_HPP
#define PLECTIC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace plectic {

/// Base class for everything the library throws. `kind()` is a stable
/// machine-readable tag (used by the CLI error reports); `witness()` carries
/// 1-based basis indices when a concrete failing tuple exists.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(message), kind_(std::move(kind)), witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<int>& witness() const noexcept { return witness_; }

private:
  std::string kind_;
  std::vector<int> witness_;
};

#define PLECTIC_DEFINE_ERROR(NAME)                                          \
  class NAME : public Error {                                               \
  public:                                                                   \
    explicit NAME(const std::string& message, std::vector<int> witness = {}) \
        : Error(#NAME, message, std::move(witness)) {}                      \
  }

PLECTIC_DEFINE_ERROR(BadParameter);
PLECTIC_DEFINE_ERROR(DimensionMismatch);
PLECTIC_DEFINE_ERROR(SingularMatrix);
PLECTIC_DEFINE_ERROR(DegreeZero);
PLECTIC_DEFINE_ERROR(NotInvariant);
PLECTIC_DEFINE_ERROR(Degenerate);
PLECTIC_DEFINE_ERROR(ZeroLevel);
PLECTIC_DEFINE_ERROR(NotDefinite);
PLECTIC_DEFINE_ERROR(ShapeMismatch);
PLECTIC_DEFINE_ERROR(CompositionNotVerified);
PLECTIC_DEFINE_ERROR(MismatchedData);
PLECTIC_DEFINE_ERROR(ParseError);

#undef PLECTIC_DEFINE_ERROR

}  // namespace plectic

#endif
