#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace bub {

using Integer = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t n);

/// Exact binomial coefficient; zero when k < 0 or k > n.
Integer binom_exact(std::int64_t n, std::int64_t k);

/// binom(n, k) mod p by Lucas' theorem, iterating base-p digits.
/// Throws Error(NonPrimeModulus) unless p is prime.
std::uint32_t binom_mod_p(std::uint64_t n, std::int64_t k, std::uint32_t p);

}  // namespace bub
