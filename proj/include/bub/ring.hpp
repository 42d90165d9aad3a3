#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bub/coefficients.hpp"
#include "bub/expr.hpp"

namespace bub {

struct Generator {
  std::string name;
  int degree = 1;
};

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// g^exponent = replacement, with the exponent of g in every replacement
/// monomial strictly below `exponent`.
struct PowerRelation {
  std::size_t generator = 0;
  std::uint32_t exponent = 1;
  std::vector<Term> replacement;
};

/// Relation as supplied by a caller: names are resolved in the ring built so far.
struct RelationSpec {
  std::string generator;
  std::uint32_t exponent = 1;
  Expr replacement = Expr::number(0);
};

class GradedRing;
using RingPtr = std::shared_ptr<const GradedRing>;

/// Finitely presented graded-commutative ring
///   coeffs[g_1, ..., g_N] / (g_i^{e_i} - R_i)   (at most one power relation per generator)
/// optionally truncated above `top_degree`. The truncation counts only the
/// degree carried by the first `truncated_prefix()` generators, so that a
/// truncated base survives projective and sphere extensions unchanged.
///
/// Presentations are immutable; share them through RingPtr.
class GradedRing {
 public:
  const CoefficientDomain& coeffs() const noexcept { return coeffs_; }
  const std::vector<Generator>& generators() const noexcept { return gens_; }
  std::size_t num_generators() const noexcept { return gens_.size(); }
  std::optional<std::size_t> find(std::string_view name) const;
  const PowerRelation* relation(std::size_t gen) const;

  std::optional<int> top_degree() const noexcept { return top_degree_; }
  std::size_t truncated_prefix() const noexcept { return truncated_prefix_; }
  bool is_truncated() const noexcept { return top_degree_.has_value(); }

  /// The ring this one was obtained from by extension (null for make_ring results).
  const RingPtr& parent() const noexcept { return parent_; }
  /// True if `ancestor` is this ring or one of its parents.
  bool extends(const GradedRing& ancestor) const;

  int degree(const Exponents& exps) const;
  bool truncates(const Exponents& exps) const;

  /// Canonical normal form of an arbitrary (unreduced) term list: relations are
  /// applied to a fixpoint, last-declared generator first, then truncation.
  std::vector<Term> reduce(std::vector<Term> terms) const;

  /// True when the ring is a finite free module over its coefficients.
  bool is_finite() const;
  /// Normal monomials (an additive basis) of the given degree; requires is_finite().
  std::vector<Exponents> basis(int degree) const;
  /// Largest degree with a nonzero homogeneous component; nullopt if infinite.
  std::optional<int> max_nonzero_degree() const;

  /// Low-level constructor used by make_ring and the bundle extensions.
  /// Relations must already be expressed over this ring's exponent vectors.
  static RingPtr create(CoefficientDomain coeffs, std::vector<Generator> gens,
                        std::vector<PowerRelation> relations, std::optional<int> top_degree,
                        std::size_t truncated_prefix, RingPtr parent,
                        bool allow_degree_zero_tail = false);

 private:
  GradedRing(CoefficientDomain coeffs) : coeffs_(coeffs) {}

  CoefficientDomain coeffs_;
  std::vector<Generator> gens_;
  std::vector<std::optional<PowerRelation>> relations_;
  std::optional<int> top_degree_;
  std::size_t truncated_prefix_ = 0;
  RingPtr parent_;
};

/// Validated presentation from user data. Errors: DuplicateGenerator,
/// DuplicateRelation, InhomogeneousRelation, OddDegreeOverOddP,
/// MalformedReplacement, UnknownGenerator. Errors about a relation carry its
/// index in `Error::item()`.
RingPtr make_ring(CoefficientDomain coeffs, std::vector<Generator> gens,
                  std::vector<RelationSpec> relations, std::optional<int> top_degree = std::nullopt);

/// Element of a GradedRing held in normal form.
class RingElement {
 public:
  static RingElement zero(RingPtr ring);
  static RingElement one(RingPtr ring);
  static RingElement constant(RingPtr ring, Integer value);
  static RingElement generator(RingPtr ring, std::string_view name);
  static RingElement generator(RingPtr ring, std::size_t index);
  /// Wraps raw terms, reducing them to normal form.
  static RingElement from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  /// Degree of a nonzero homogeneous element.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  /// Zero counts as homogeneous of every degree.
  bool is_homogeneous_of(int d) const;
  RingElement component(int d) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& rhs);
  RingElement& operator-=(const RingElement& rhs);
  RingElement& operator*=(const RingElement& rhs);
  RingElement scaled(const Integer& c) const;
  RingElement pow(std::uint64_t e) const;

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string to_string() const;

 private:
  RingElement(RingPtr ring, std::vector<Term> normal) : ring_(std::move(ring)), terms_(std::move(normal)) {}

  RingPtr ring_;
  std::vector<Term> terms_;
};

RingElement pow(const RingElement& a, std::uint64_t e);
bool is_zero(const RingElement& a);
RingElement component(const RingElement& a, int degree);

/// Unreduced polynomial over a ring's generators (no relations applied).
/// Used to state the homomorphism property normalize(a*b) = normalize(a)*normalize(b).
struct RawPoly {
  RingPtr ring;
  std::vector<Term> terms;
};

RawPoly to_raw(const Expr& expr, const RingPtr& ring);
RawPoly raw_add(const RawPoly& a, const RawPoly& b);
RawPoly raw_mul(const RawPoly& a, const RawPoly& b);
RingElement normalize(const RawPoly& raw);
/// Evaluates a formal expression in the ring. Errors: UnknownGenerator.
RingElement normalize(const Expr& expr, const RingPtr& ring);
RingElement parse_element(std::string_view text, const RingPtr& ring);

/// Image of `a` in an extension ring (pads exponent vectors). Errors: MixedRings.
RingElement lift(const RingElement& a, const RingPtr& target);

std::string monomial_to_string(const GradedRing& ring, const Exponents& exps);

}  // namespace bub
