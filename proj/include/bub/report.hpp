#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bub/charclass.hpp"

namespace bub {

struct Hypothesis {
  std::string name;
  bool passed = false;
  std::string witness;

  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Exact: computed in a presentation without truncation. Formal: computed in a
/// truncated model, so it only checks consistency of the hypotheses.
enum class CertificateLabel { Exact, Formal };

struct Certificate {
  std::string element;
  int degree = 0;
  CertificateLabel label = CertificateLabel::Exact;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Outcome of one theorem applier or structure check. A bound is present only
/// when every hypothesis passed (and, for certificates, the certificate is nonzero).
struct BoundReport {
  std::string scenario;
  Mode mode = Mode::Real;
  std::optional<std::uint32_t> prime;
  std::vector<Hypothesis> hypotheses;
  std::optional<Certificate> certificate;
  std::optional<long long> bound;
  std::string theorem;
  std::map<std::string, long long> dims;
  std::vector<std::string> notes;
  /// Name of the first failed hypothesis' error kind.
  std::optional<std::string> failure;
  std::vector<std::pair<std::string, std::string>> trace;

  bool all_passed() const;
  Hypothesis& add(std::string name, bool passed, std::string witness = {});
  /// Records a failed hypothesis together with its error kind.
  void fail(std::string name, std::string_view kind, std::string witness = {});

  friend bool operator==(const BoundReport&, const BoundReport&) = default;
};

std::string to_string(CertificateLabel label);

}  // namespace bub
