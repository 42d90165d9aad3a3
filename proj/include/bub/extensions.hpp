#pragma once

#include <string>

#include "bub/charclass.hpp"
#include "bub/ring.hpp"

namespace bub {

/// Cohomology of the projective bundle P(eta): adjoins t (degree 1, or 2 in
/// complex mode) subject to q(t) = 0, q(T) = T^{m+1} + w_1 T^m + ... + w_{m+1}.
/// The result is free over the base on 1, t, ..., t^m. A base truncation stays
/// on the base generators. Errors: DimensionMismatch, MixedRings, DuplicateGenerator.
RingPtr extend_projective(const RingPtr& base, const ClassList& eta, const std::string& name = "t");

/// Cohomology of a sphere bundle S(zeta) with vanishing Euler class: adjoins
/// sigma of the given degree with sigma^2 = w_top * sigma + s. `w_top` must be
/// homogeneous of degree `degree`, `s` of degree 2*degree.
/// Errors: InhomogeneousRelation, MixedRings, DuplicateGenerator.
RingPtr extend_sphere(const RingPtr& base, const RingElement& w_top, const RingElement& s, int degree,
                      const std::string& name);

}  // namespace bub
