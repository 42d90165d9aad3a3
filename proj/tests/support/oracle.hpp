#pragma once

// Independent reference computations. Nothing here calls the binom module or
// the ring's own reduction order; they exist to check those.

#include <optional>
#include <set>
#include <vector>

#include "bub/charclass.hpp"
#include "bub/ring.hpp"
#include "random.hpp"

namespace bub::oracle {

/// n! / (k! (n-k)!) by full factorials.
Integer binom_factorial(long long n, long long k);

/// Rows 0..nmax of Pascal's triangle reduced mod p.
std::vector<std::vector<int>> pascal_mod(int nmax, int p);

/// Exhaustive search for the least k in [s, r+s) with p not dividing
/// binom(r+s, k+1), using exact factorial binomials.
std::optional<int> fiber_k_search(int r, int s, int p);

/// Normal form obtained by rewriting one randomly chosen reducible monomial at
/// a time until none is left (truncated monomials are dropped on sight).
std::vector<Term> shuffled_reduce(const GradedRing& ring, std::vector<Term> terms, testing::Rng& rng);

/// Every element of a finite F2 ring, as normal-form elements. Requires at most
/// 2^16 elements.
std::vector<RingElement> enumerate_f2(const RingPtr& ring);

/// `total` is free over `base` on `module_basis`: the map
/// (b_1..b_r) -> sum b_i f_i is injective and hits every element of `total`.
/// Brute force over F2, at most 2^16 tuples.
bool free_over(const RingPtr& base, const RingPtr& total, const std::vector<RingElement>& module_basis);

/// Binomial-vanishing condition for frames with generic classes on `support`
/// (w_j != 0 exactly for j in support, w_0 = 1).
bool ms_binomial(int m_plus_1, int r, const std::set<int>& support);
/// 2-adic form, s found by doubling.
bool ms_two_adic(int m_plus_1, int r, const std::set<int>& support);

/// Classes of lambda (x) trivial^n: binom(n, i) e^i, binomials from factorials.
std::vector<RingElement> tensor_trivial(int n, const RingElement& e);

/// Euler class of lambda (x) xi written out term by term: sum_i (+-e)^i w_{n-i}.
RingElement euler_expansion(const ClassList& xi, const RingElement& e);

}  // namespace bub::oracle
