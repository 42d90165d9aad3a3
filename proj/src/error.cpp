#include "bub/error.hpp"

namespace bub {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::DuplicateRelation: return "DuplicateRelation";
    case ErrorKind::InhomogeneousRelation: return "InhomogeneousRelation";
    case ErrorKind::OddDegreeOverOddP: return "OddDegreeOverOddP";
    case ErrorKind::MalformedReplacement: return "MalformedReplacement";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorKind::KLessThanN: return "KLessThanN";
    case ErrorKind::NExceedsM: return "NExceedsM";
    case ErrorKind::EulerClassNonzero: return "EulerClassNonzero";
    case ErrorKind::CertificateZero: return "CertificateZero";
    case ErrorKind::EmptyList: return "EmptyList";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredName: return "UndeclaredName";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, SourcePos pos)
    : std::runtime_error(std::string(to_string(kind)) + " at line " + std::to_string(pos.line) +
                         (pos.column > 0 ? ", column " + std::to_string(pos.column) : std::string()) +
                         ": " + message),
      kind_(kind),
      pos_(pos) {}

Error Error::at(SourcePos pos) const {
  if (pos_ && pos.column == 0) pos.column = pos_->column;
  std::string msg = what();
  // strip the "Kind: " / "Kind at line ..: " prefix we added ourselves
  auto colon = msg.find(": ");
  if (colon != std::string::npos) msg = msg.substr(colon + 2);
  Error out(kind_, msg, pos);
  out.item_ = item_;
  return out;
}

}  // namespace bub
