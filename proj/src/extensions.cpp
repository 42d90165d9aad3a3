#include "bub/extensions.hpp"

#include "bub/error.hpp"

namespace bub {

namespace {

std::vector<PowerRelation> padded_relations(const GradedRing& base, std::size_t n) {
  std::vector<PowerRelation> out;
  for (std::size_t g = 0; g < base.num_generators(); ++g) {
    const PowerRelation* r = base.relation(g);
    if (!r) continue;
    PowerRelation copy = *r;
    for (auto& t : copy.replacement) t.exps.resize(n, 0);
    out.push_back(std::move(copy));
  }
  return out;
}

// Appends `coeff * x_new^power` (coeff a base element) to `terms`.
void append_scaled(std::vector<Term>& terms, const RingElement& coeff, std::size_t n, std::uint32_t power,
                   const Integer& sign) {
  for (const auto& t : coeff.terms()) {
    Term nt{t.exps, t.coeff * sign};
    nt.exps.resize(n, 0);
    nt.exps[n - 1] = power;
    terms.push_back(std::move(nt));
  }
}

}  // namespace

RingPtr extend_projective(const RingPtr& base, const ClassList& eta, const std::string& name) {
  if (eta.ring().get() != base.get()) throw Error(ErrorKind::MixedRings, "eta is not a bundle over the base ring");
  if (eta.dimension() < 1)
    throw Error(ErrorKind::DimensionMismatch, "projective bundle needs dim eta = m+1 >= 1");
  const std::size_t n = base->num_generators() + 1;
  const auto m1 = static_cast<std::uint32_t>(eta.dimension());
  auto gens = base->generators();
  gens.push_back(Generator{name, eta.unit()});

  // t^{m+1} = -(w_1 t^m + ... + w_{m+1})
  std::vector<Term> repl;
  for (std::uint32_t i = 1; i <= m1; ++i) append_scaled(repl, eta[static_cast<int>(i)], n, m1 - i, Integer(-1));
  auto rels = padded_relations(*base, n);
  rels.push_back(PowerRelation{n - 1, m1, std::move(repl)});
  return GradedRing::create(base->coeffs(), std::move(gens), std::move(rels), base->top_degree(),
                            base->truncated_prefix(), base);
}

RingPtr extend_sphere(const RingPtr& base, const RingElement& w_top, const RingElement& s, int degree,
                      const std::string& name) {
  if (w_top.ring().get() != base.get() || s.ring().get() != base.get())
    throw Error(ErrorKind::MixedRings, "sphere-bundle data must live in the base ring");
  if (degree < 0) throw Error(ErrorKind::InhomogeneousRelation, "negative fiber degree");
  if (!w_top.is_homogeneous_of(degree))
    throw Error(ErrorKind::InhomogeneousRelation,
                "w_l = " + w_top.to_string() + " is not homogeneous of degree " + std::to_string(degree));
  if (!s.is_homogeneous_of(2 * degree))
    throw Error(ErrorKind::InhomogeneousRelation,
                "s = " + s.to_string() + " is not homogeneous of degree " + std::to_string(2 * degree));
  const std::size_t n = base->num_generators() + 1;
  auto gens = base->generators();
  gens.push_back(Generator{name, degree});

  // sigma^2 = w_l sigma + s
  std::vector<Term> repl;
  append_scaled(repl, w_top, n, 1, Integer(1));
  append_scaled(repl, s, n, 0, Integer(1));
  auto rels = padded_relations(*base, n);
  rels.push_back(PowerRelation{n - 1, 2, std::move(repl)});
  return GradedRing::create(base->coeffs(), std::move(gens), std::move(rels), base->top_degree(),
                            base->truncated_prefix(), base, /*allow_degree_zero_tail=*/true);
}

}  // namespace bub
