#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bub/charclass.hpp"
#include "bub/ring.hpp"

namespace bub::testing {

/// splitmix64 of (base, index): independent, reproducible per-trial seeds.
std::uint64_t trial_seed(std::uint64_t base, std::size_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

enum class RingFamily { Truncated, Projective, Sphere };
const char* to_string(RingFamily f);

/// All exponent vectors of the given degree over the first `upto` generators,
/// each exponent bounded by `cap` (inclusive); no relations applied.
std::vector<Exponents> monomials_of_degree(const GradedRing& ring, int degree, std::size_t upto,
                                           std::uint32_t cap);

/// Random coefficient in the ring's domain (never zero when `nonzero`).
Integer random_coeff(const CoefficientDomain& dom, Rng& rng, bool nonzero = false);

/// Random homogeneous element of the given degree (may be zero).
RingElement random_homogeneous(const RingPtr& ring, int degree, Rng& rng, double density = 0.5);

/// Random finite presentation with 1-3 generators and random power relations
/// (replacements homogeneous, lower order, normal w.r.t. earlier relations),
/// optionally truncated. Over F3 and Z all degrees are even.
RingPtr random_base_ring(Rng& rng);

/// Member of the family: a random base, optionally extended by P(eta) and
/// then by a sphere generator.
RingPtr random_ring(RingFamily family, Rng& rng);

/// Unreduced polynomial with exponents up to two past each relation bound.
RawPoly random_raw(const RingPtr& ring, Rng& rng, int max_terms = 4);

/// Random class list (w_i homogeneous of degree i * unit) of dimension n.
ClassList random_classes(const RingPtr& ring, Mode mode, int n, Rng& rng, double density = 0.5);

/// F2[x]/(x^N).
RingPtr truncated_x(int n_exponent);

}  // namespace bub::testing
