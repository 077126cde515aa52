#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kmroots {

enum class ErrorKind {
  NotGCM,
  NotSymmetrizable,
  EmptySubset,
  RankTooLarge,
  DimensionMismatch,
  ZeroVector,
  NotPositive,
  NotARoot,
  Overflow,
  ZeroDenominator,
  NonIntegerMultiplicity,
  HeightBoundExceeded,
  CorruptCache,
  PreconditionViolated,
  CertificateViolated,
  NonPositive,
  OracleBoundExceeded,
  SearchBoundExceeded,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` lets callers
// (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kmroots
