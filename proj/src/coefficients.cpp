#include "bub/coefficients.hpp"

#include "bub/error.hpp"

namespace bub {

CoefficientDomain CoefficientDomain::fp(std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p == 2) return f2();
  return CoefficientDomain(CoeffKind::Fp, p);
}

Integer CoefficientDomain::reduce(Integer v) const {
  if (kind_ == CoeffKind::Integers) return v;
  if (kind_ == CoeffKind::F2) return Integer(static_cast<int>(bit_test(v, 0) ? 1 : 0));
  v %= p_;
  if (v < 0) v += p_;
  return v;
}

Integer CoefficientDomain::binom(std::int64_t n, std::int64_t k) const {
  if (kind_ == CoeffKind::Integers) return binom_exact(n, k);
  if (n < 0) return 0;
  return Integer(binom_mod_p(static_cast<std::uint64_t>(n), k, p_));
}

std::string CoefficientDomain::name() const {
  switch (kind_) {
    case CoeffKind::F2: return "F2";
    case CoeffKind::Fp: return "F" + std::to_string(p_);
    case CoeffKind::Integers: return "Z";
  }
  return "?";
}

}  // namespace bub
