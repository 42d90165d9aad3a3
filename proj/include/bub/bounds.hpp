#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bub/charclass.hpp"
#include "bub/report.hpp"

namespace bub {

// ---------------------------------------------------------------------------
// Bound arithmetic

/// j >= d + k - n (real) or j >= 1 + d + 2(k - n) (complex).
long long stiefel_bound(Mode mode, long long d, long long k, long long n);
/// j >= d + l + m - n (real) or j >= 1 + d + 2(m - n + l) (complex).
long long tower_bound(Mode mode, long long d, long long l, long long m, long long n);

// ---------------------------------------------------------------------------
// Elementary bound from a nonvanishing power of e(lambda)

struct StiefelScenario {
  ClassList xi;
  RingElement e_lambda;
  RingElement b;
  int k = 0;
  /// Optional class c of degree (k - n) * unit replacing e(lambda)^{k-n}.
  std::optional<RingElement> c;
  /// User declares fibrewise surjectivity (Leray-Hirsch); recorded, never checked.
  bool leray_hirsch_declared = false;
};

BoundReport certificate_stiefel(const StiefelScenario& inst);

// ---------------------------------------------------------------------------
// Sphere-bundle tower E = S(zeta_r) -> ... -> S(zeta_1) -> P(eta) -> B

/// Describes zeta_i over the ring of its level (P(eta) for i = 1, the
/// previous sphere extension otherwise).
struct ZetaSpec {
  std::function<ClassList(const RingPtr& level)> classes;
  /// s_i = sigma_i^2 - w_{l_i}(zeta_i) sigma_i; defaults to 0 when empty.
  std::function<RingElement(const RingPtr& level)> s;
  std::string label;
};

struct MainScenario {
  ClassList eta;
  ClassList xi;
  std::vector<ZetaSpec> zetas;
  /// Top class of the base; defaults to the first normal monomial of maximal degree.
  std::optional<RingElement> b;
};

BoundReport certificate_main(const MainScenario& inst);

/// Top-degree nonzero class of a finite ring (first normal monomial of maximal degree).
std::optional<RingElement> top_class(const RingPtr& ring);

// ---------------------------------------------------------------------------
// Fiber exponent calculators

/// Least k with s <= k < r+s and binom(r+s, k+1) != 0 mod p.
/// Real mode uses p = 2. Errors: ParameterOutOfRange, NonPrimeModulus.
std::optional<int> fiber_k_proj_stiefel(int r, int s, std::uint32_t p, Mode mode = Mode::Real);
/// min(n_1, ..., n_r). Errors: EmptyList, ParameterOutOfRange.
int fiber_k_product_spheres(std::span<const int> dims);
/// 2r + s for r, s > 1. Errors: ParameterOutOfRange.
int fiber_k_wall_type(int r, int s);

// ---------------------------------------------------------------------------
// Structure checks

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;
  std::vector<Hypothesis> details;
  std::map<std::string, long long> dims;
  std::vector<std::string> notes;
  /// Fiber dimensions l_i of the sphere-bundle plan, when the check produces one.
  std::vector<int> plan_dims;
  /// Ready-to-run zeta descriptions for certificate_main.
  std::vector<ZetaSpec> plan;
};

/// Stiefel bundle of (r+1)-frames: the 2-adic condition (2^s | m+1 and w_j = 0
/// unless 2^s | j) and the binomial-vanishing condition are both evaluated and
/// must agree. Plan: l_i = m - i. Errors: DimensionTooSmall, DimensionMismatch,
/// ParameterOutOfRange, InvariantViolation (if the two conditions disagree).
CheckResult check_ms(int m_plus_1, int r, const ClassList& eta);

/// Each r_i(T) = char_poly(mu_i) must be divisible by q(T) = char_poly(eta).
/// Plan: zeta_i = H (x) mu_i, l_i = dim mu_i - 1. Errors: DimensionTooSmall (item i).
CheckResult check_mpss(const ClassList& eta, const std::vector<ClassList>& mus);

/// Vanishing of w_m(H (x) H^perp) = q'(w_1(H)) against "m+1 even and odd classes zero".
CheckResult check_two(const ClassList& eta);

/// Vanishing of sum_j binom(m+1-j, 2) w_j(eta) w_1(H)^{m-1-j} against
/// "4 | m+1 and w_{2i}(eta) = 0 for odd i" (eta with complex-structure shape).
CheckResult check_u2(const ClassList& eta);

/// Euler class of the spherical fibration Xi_lambda from formal classes w_j(Xi).
RingElement spherical_fibration_euler(const ClassList& xi_classes, const RingElement& e_lambda);

BoundReport to_report(const CheckResult& check, Mode mode = Mode::Real);

}  // namespace bub
