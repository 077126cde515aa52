#include "kmroots/error.hpp"

namespace kmroots {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGCM: return "NotGCM";
    case ErrorKind::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotPositive: return "NotPositive";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::NonIntegerMultiplicity: return "NonIntegerMultiplicity";
    case ErrorKind::HeightBoundExceeded: return "HeightBoundExceeded";
    case ErrorKind::CorruptCache: return "CorruptCache";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CertificateViolated: return "CertificateViolated";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::SearchBoundExceeded: return "SearchBoundExceeded";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Error";
}

}  // namespace kmroots
