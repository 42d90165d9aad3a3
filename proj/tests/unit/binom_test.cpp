#include "doctest.h"

#include "bub/binom.hpp"
#include "bub/coefficients.hpp"
#include "bub/error.hpp"
#include "support/oracle.hpp"

using namespace bub;

TEST_CASE("binom_exact small values") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(10, 4) == oracle::binom_factorial(10, 4));
  CHECK(binom_exact(10, 4) == 210);
  CHECK(binom_exact(17, 0) == 1);
  CHECK(binom_exact(0, 0) == 1);
  CHECK(binom_exact(5, -1) == 0);
  CHECK(binom_exact(5, 6) == 0);
}

TEST_CASE("binom_exact is exact far beyond 64 bits") {
  CHECK(binom_exact(200, 100) == oracle::binom_factorial(200, 100));
  CHECK(binom_exact(1000, 3) == Integer(1000) * 999 * 998 / 6);
}

TEST_CASE("binom_mod_p examples") {
  CHECK(binom_mod_p(10, 4, 2) == 0);
  CHECK(oracle::binom_factorial(10, 4) % 2 == 0);
  CHECK(binom_mod_p(4, 4, 2) == 1);
  for (int k = 0; k <= 7; ++k) {
    CHECK(binom_mod_p(7, k, 2) == 1);
    CHECK(oracle::binom_factorial(7, k) % 2 == 1);
  }
  CHECK(binom_mod_p(10, 11, 3) == 0);
  CHECK(binom_mod_p(10, -2, 3) == 0);
}

TEST_CASE("binom_mod_p rejects composite moduli") {
  CHECK_THROWS_AS(binom_mod_p(5, 2, 4), Error);
  try {
    binom_mod_p(5, 2, 9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonPrimeModulus);
  }
  CHECK_THROWS(binom_mod_p(5, 2, 1));
}

TEST_CASE("Lucas agrees with Pascal's triangle mod p") {
  for (int p : {2, 3, 5, 7, 11}) {
    const auto rows = oracle::pascal_mod(300, p);
    for (int n = 0; n <= 300; ++n)
      for (int k = 0; k <= n; ++k)
        REQUIRE(binom_mod_p(static_cast<std::uint64_t>(n), k, static_cast<std::uint32_t>(p)) ==
                static_cast<std::uint32_t>(rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]));
  }
}

TEST_CASE("Pascal identity and symmetry, exact and modular") {
  for (long long n = 1; n <= 120; ++n)
    for (long long k = 0; k <= n; ++k) {
      REQUIRE(binom_exact(n, k) == binom_exact(n - 1, k - 1) + binom_exact(n - 1, k));
      REQUIRE(binom_exact(n, k) == binom_exact(n, n - k));
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto u = static_cast<std::uint64_t>(n);
        REQUIRE(binom_mod_p(u, k, p) == (binom_mod_p(u - 1, k - 1, p) + binom_mod_p(u - 1, k, p)) % p);
        REQUIRE(binom_mod_p(u, k, p) == binom_mod_p(u, n - k, p));
      }
    }
}

TEST_CASE("coefficient domains") {
  CHECK(CoefficientDomain::f2().name() == "F2");
  CHECK(CoefficientDomain::fp(2) == CoefficientDomain::f2());
  CHECK(CoefficientDomain::fp(5).name() == "F5");
  CHECK(CoefficientDomain::integers().name() == "Z");
  CHECK_THROWS_AS(CoefficientDomain::fp(6), Error);
  CHECK(CoefficientDomain::fp(3).reduce(-1) == 2);
  CHECK(CoefficientDomain::f2().reduce(7) == 1);
  CHECK(CoefficientDomain::integers().reduce(-7) == -7);
  CHECK(CoefficientDomain::fp(5).binom(10, 5) == 2);  // 252 mod 5
  CHECK(CoefficientDomain::integers().binom(10, 5) == 252);
  CHECK(CoefficientDomain::fp(3).requires_even_degrees());
  CHECK_FALSE(CoefficientDomain::f2().requires_even_degrees());
}
