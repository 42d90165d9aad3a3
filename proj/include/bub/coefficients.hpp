#pragma once

#include <cstdint>
#include <string>

#include "bub/binom.hpp"

namespace bub {

enum class CoeffKind { F2, Fp, Integers };

/// Coefficient ring of a presentation: F2, Fp (p an odd prime) or the integers.
/// Over Fp and Z every generator must have even degree, so the rings are
/// strictly commutative and no Koszul signs arise.
class CoefficientDomain {
 public:
  static CoefficientDomain f2() { return CoefficientDomain(CoeffKind::F2, 2); }
  /// p == 2 yields F2.
  static CoefficientDomain fp(std::uint32_t p);
  static CoefficientDomain integers() { return CoefficientDomain(CoeffKind::Integers, 0); }

  CoeffKind kind() const noexcept { return kind_; }
  /// 2 for F2, p for Fp, 0 for Z.
  std::uint32_t characteristic() const noexcept { return p_; }
  bool requires_even_degrees() const noexcept { return kind_ != CoeffKind::F2; }

  /// Canonical representative: [0, p) for finite fields, identity for Z.
  Integer reduce(Integer v) const;
  Integer from_int(std::int64_t v) const { return reduce(Integer(v)); }

  /// binom(n, k) mapped into the domain (Lucas for finite fields).
  Integer binom(std::int64_t n, std::int64_t k) const;

  std::string name() const;

  friend bool operator==(const CoefficientDomain&, const CoefficientDomain&) = default;

 private:
  CoefficientDomain(CoeffKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  CoeffKind kind_;
  std::uint32_t p_;
};

}  // namespace bub
