#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bub {

enum class ErrorKind {
  // ring construction and arithmetic
  DuplicateGenerator,
  DuplicateRelation,
  InhomogeneousRelation,
  OddDegreeOverOddP,
  MalformedReplacement,
  UnknownGenerator,
  MixedRings,
  // characteristic classes
  DimensionMismatch,
  DegreeMismatch,
  NonMonicDivisor,
  // binomials
  NonPrimeModulus,
  // theorem appliers
  KLessThanN,
  NExceedsM,
  EulerClassNonzero,
  CertificateZero,
  EmptyList,
  ParameterOutOfRange,
  DimensionTooSmall,
  // problem files
  SyntaxError,
  UndeclaredName,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Source position inside a problem file or expression (1-based).
struct SourcePos {
  int line = 0;
  int column = 0;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, SourcePos pos);

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

  /// Copy of this error located at `pos` (keeps an existing column if the new one is 0).
  Error at(SourcePos pos) const;

  /// Index of the offending input item (relation, generator, zeta, ...) when known.
  const std::optional<std::size_t>& item() const noexcept { return item_; }
  Error& with_item(std::size_t i) {
    item_ = i;
    return *this;
  }

 private:
  ErrorKind kind_;
  std::optional<SourcePos> pos_;
  std::optional<std::size_t> item_;
};

}  // namespace bub
