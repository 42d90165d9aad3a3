#include "bub/binom.hpp"

#include <string>

#include "bub/error.hpp"

namespace bub {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Integer binom_exact(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer acc = 1;
  // acc = binom(n-k+i, i) after step i, so each division is exact
  for (std::int64_t i = 1; i <= k; ++i) {
    acc *= n - k + i;
    acc /= i;
  }
  return acc;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// binom(n, k) mod p for 0 <= k <= n < p
std::uint64_t small_binom(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    num = num * ((n - k + i) % p) % p;
    den = den * (i % p) % p;
  }
  return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t n, std::int64_t k, std::uint32_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  auto kk = static_cast<std::uint64_t>(k);
  if (p == 2) return (kk & ~n) == 0 ? 1 : 0;
  std::uint64_t result = 1;
  while (kk > 0 || n > 0) {
    std::uint64_t nd = n % p, kd = kk % p;
    if (kd > nd) return 0;
    result = result * small_binom(nd, kd, p) % p;
    n /= p;
    kk /= p;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace bub
