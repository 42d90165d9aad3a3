#include "bub/ring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "bub/error.hpp"

namespace bub {

namespace {

bool exps_less(const Term& a, const Term& b) { return a.exps < b.exps; }

// Sorts by exponent vector, merges equal monomials, drops zero coefficients.
void combine(std::vector<Term>& terms, const CoefficientDomain& dom) {
  std::sort(terms.begin(), terms.end(), exps_less);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer sum = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].exps == terms[i].exps) sum += terms[j++].coeff;
    sum = dom.reduce(std::move(sum));
    if (sum != 0) {
      if (out != i) terms[out].exps = std::move(terms[i].exps);
      terms[out].coeff = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedRing

std::optional<std::size_t> GradedRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

const PowerRelation* GradedRing::relation(std::size_t gen) const {
  if (gen >= relations_.size() || !relations_[gen]) return nullptr;
  return &*relations_[gen];
}

bool GradedRing::extends(const GradedRing& ancestor) const {
  for (const GradedRing* r = this; r; r = r->parent_.get())
    if (r == &ancestor) return true;
  return false;
}

int GradedRing::degree(const Exponents& exps) const {
  int d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += gens_[i].degree * static_cast<int>(exps[i]);
  return d;
}

bool GradedRing::truncates(const Exponents& exps) const {
  if (!top_degree_) return false;
  long long d = 0;
  for (std::size_t i = 0; i < truncated_prefix_; ++i) d += static_cast<long long>(gens_[i].degree) * exps[i];
  return d > *top_degree_;
}

std::vector<Term> GradedRing::reduce(std::vector<Term> terms) const {
  const std::size_t n = gens_.size();
  std::erase_if(terms, [&](const Term& t) { return truncates(t.exps); });
  combine(terms, coeffs_);
  for (std::size_t g = n; g-- > 0;) {
    const auto& rel = relations_[g];
    if (!rel) continue;
    const std::uint32_t e = rel->exponent;
    for (;;) {
      bool rewrote = false;
      std::vector<Term> next;
      next.reserve(terms.size());
      for (auto& t : terms) {
        if (t.exps[g] < e) {
          next.push_back(std::move(t));
          continue;
        }
        rewrote = true;
        Exponents rest = t.exps;
        rest[g] -= e;
        for (const auto& r : rel->replacement) {
          Term nt{rest, 0};
          for (std::size_t i = 0; i <= g; ++i) nt.exps[i] += r.exps[i];
          if (truncates(nt.exps)) continue;
          nt.coeff = coeffs_.reduce(t.coeff * r.coeff);
          next.push_back(std::move(nt));
        }
      }
      terms = std::move(next);
      if (!rewrote) break;
      combine(terms, coeffs_);
    }
  }
  return terms;
}

bool GradedRing::is_finite() const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (relations_[i]) continue;
    if (top_degree_ && i < truncated_prefix_ && gens_[i].degree > 0) continue;
    return false;
  }
  return true;
}

std::vector<Exponents> GradedRing::basis(int degree) const {
  if (!is_finite()) throw Error(ErrorKind::InvariantViolation, "basis enumeration needs a finite ring");
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents cur(gens_.size(), 0);
  auto rec = [&](std::size_t i, int remaining, auto& self) -> void {
    if (i == gens_.size()) {
      if (remaining == 0 && !truncates(cur)) out.push_back(cur);
      return;
    }
    const int deg = gens_[i].degree;
    std::uint32_t cap = relations_[i] ? relations_[i]->exponent - 1 : 0;
    if (!relations_[i]) cap = static_cast<std::uint32_t>(*top_degree_ / deg);
    if (deg > 0) cap = std::min<std::uint32_t>(cap, static_cast<std::uint32_t>(remaining / deg));
    for (std::uint32_t k = 0; k <= cap; ++k) {
      cur[i] = k;
      self(i + 1, remaining - deg * static_cast<int>(k), self);
    }
    cur[i] = 0;
  };
  rec(0, degree, rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> GradedRing::max_nonzero_degree() const {
  if (!is_finite()) return std::nullopt;
  // Achievable base degrees by subset-sum over the truncated prefix, then the
  // fiber generators contribute their full power range independently.
  const std::size_t prefix = top_degree_ ? truncated_prefix_ : 0;
  int base_cap = 0;
  for (std::size_t i = 0; i < prefix; ++i) {
    std::uint32_t cap = relations_[i] ? relations_[i]->exponent - 1
                                      : static_cast<std::uint32_t>(*top_degree_ / std::max(1, gens_[i].degree));
    base_cap += gens_[i].degree * static_cast<int>(cap);
  }
  std::vector<char> reach(static_cast<std::size_t>(base_cap) + 1, 0);
  reach[0] = 1;
  for (std::size_t i = 0; i < prefix; ++i) {
    std::uint32_t cap = relations_[i] ? relations_[i]->exponent - 1
                                      : static_cast<std::uint32_t>(*top_degree_ / std::max(1, gens_[i].degree));
    std::vector<char> next(reach.size(), 0);
    for (std::size_t d = 0; d < reach.size(); ++d) {
      if (!reach[d]) continue;
      for (std::uint32_t k = 0; k <= cap; ++k) {
        std::size_t nd = d + static_cast<std::size_t>(gens_[i].degree) * k;
        if (nd >= next.size()) break;
        next[nd] = 1;
      }
    }
    reach = std::move(next);
  }
  int base_max = 0;
  for (std::size_t d = 0; d < reach.size(); ++d)
    if (reach[d] && (!top_degree_ || static_cast<int>(d) <= *top_degree_)) base_max = static_cast<int>(d);
  int fiber = 0;
  for (std::size_t i = prefix; i < gens_.size(); ++i)
    fiber += gens_[i].degree * static_cast<int>(relations_[i]->exponent - 1);
  return base_max + fiber;
}

RingPtr GradedRing::create(CoefficientDomain coeffs, std::vector<Generator> gens,
                           std::vector<PowerRelation> relations, std::optional<int> top_degree,
                           std::size_t truncated_prefix, RingPtr parent, bool allow_degree_zero_tail) {
  auto ring = std::shared_ptr<GradedRing>(new GradedRing(coeffs));
  const std::size_t n = gens.size();
  const std::size_t parent_gens = parent ? parent->num_generators() : 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_identifier(gens[i].name))
      throw Error(ErrorKind::SyntaxError, "invalid generator name '" + gens[i].name + "'").with_item(i);
    for (std::size_t j = 0; j < i; ++j)
      if (gens[j].name == gens[i].name)
        throw Error(ErrorKind::DuplicateGenerator, "generator '" + gens[i].name + "' declared twice").with_item(i);
    // Degree-zero generators come only from earlier sphere extensions or the new tail.
    const bool zero_ok = (allow_degree_zero_tail && i >= parent_gens) ||
                         (i < parent_gens && parent->generators()[i].degree == 0);
    if (gens[i].degree < 0 || (gens[i].degree == 0 && !zero_ok))
      throw Error(ErrorKind::InvariantViolation, "generator '" + gens[i].name + "' needs a positive degree")
          .with_item(i);
    if (coeffs.requires_even_degrees() && gens[i].degree % 2 != 0)
      throw Error(ErrorKind::OddDegreeOverOddP,
                  "generator '" + gens[i].name + "' has odd degree over " + coeffs.name())
          .with_item(i);
  }
  if (top_degree && *top_degree < 0) throw Error(ErrorKind::InvariantViolation, "negative top degree");
  ring->gens_ = std::move(gens);
  ring->top_degree_ = top_degree;
  ring->truncated_prefix_ = top_degree ? std::min(truncated_prefix, n) : 0;
  ring->parent_ = std::move(parent);
  ring->relations_.assign(n, std::nullopt);

  for (std::size_t k = 0; k < relations.size(); ++k) {
    auto& rel = relations[k];
    if (rel.generator >= n) throw Error(ErrorKind::UnknownGenerator, "relation on unknown generator").with_item(k);
    const auto& g = ring->gens_[rel.generator];
    if (ring->relations_[rel.generator])
      throw Error(ErrorKind::DuplicateRelation, "second relation on '" + g.name + "'").with_item(k);
    if (rel.exponent == 0)
      throw Error(ErrorKind::MalformedReplacement, "relation exponent on '" + g.name + "' must be positive")
          .with_item(k);
    const int want = g.degree * static_cast<int>(rel.exponent);
    for (auto& t : rel.replacement) {
      if (t.exps.size() != n) throw Error(ErrorKind::MalformedReplacement, "exponent vector length").with_item(k);
      t.coeff = coeffs.reduce(t.coeff);
      if (t.coeff == 0) continue;
      if (ring->degree(t.exps) != want)
        throw Error(ErrorKind::InhomogeneousRelation,
                    "replacement of " + g.name + "^" + std::to_string(rel.exponent) + " has a term of degree " +
                        std::to_string(ring->degree(t.exps)) + ", expected " + std::to_string(want))
            .with_item(k);
      if (t.exps[rel.generator] >= rel.exponent)
        throw Error(ErrorKind::MalformedReplacement,
                    "replacement of " + g.name + "^" + std::to_string(rel.exponent) + " is not of lower order in " +
                        g.name)
            .with_item(k);
      for (std::size_t h = rel.generator + 1; h < n; ++h)
        if (t.exps[h] != 0)
          throw Error(ErrorKind::MalformedReplacement,
                      "replacement of " + g.name + " uses later generator " + ring->gens_[h].name)
              .with_item(k);
    }
    std::erase_if(rel.replacement, [](const Term& t) { return t.coeff == 0; });
    ring->relations_[rel.generator] = std::move(rel);
  }
  // Replacements must already be normal with respect to the other relations.
  for (std::size_t g = 0; g < n; ++g) {
    if (!ring->relations_[g]) continue;
    auto& repl = ring->relations_[g]->replacement;
    std::erase_if(repl, [&](const Term& t) { return ring->truncates(t.exps); });
    combine(repl, coeffs);
    for (const auto& t : repl)
      for (std::size_t h = 0; h < g; ++h)
        if (ring->relations_[h] && t.exps[h] >= ring->relations_[h]->exponent)
          throw Error(ErrorKind::MalformedReplacement,
                      "replacement of " + ring->gens_[g].name + " is not in normal form in " + ring->gens_[h].name);
  }
  return ring;
}

RingPtr make_ring(CoefficientDomain coeffs, std::vector<Generator> gens, std::vector<RelationSpec> relations,
                  std::optional<int> top_degree) {
  const std::size_t n = gens.size();
  // Validate generators once up front (names, degrees, parity).
  GradedRing::create(coeffs, gens, {}, top_degree, n, nullptr);

  std::vector<std::optional<std::size_t>> spec_of(n);
  for (std::size_t k = 0; k < relations.size(); ++k) {
    std::optional<std::size_t> g;
    for (std::size_t i = 0; i < n; ++i)
      if (gens[i].name == relations[k].generator) g = i;
    if (!g) throw Error(ErrorKind::UnknownGenerator, "relation on undeclared generator '" + relations[k].generator + "'")
                .with_item(k);
    if (spec_of[*g])
      throw Error(ErrorKind::DuplicateRelation, "second relation on '" + relations[k].generator + "'").with_item(k);
    spec_of[*g] = k;
  }

  // Build g_1..g_k one generator at a time so each replacement is normalized
  // in the ring presented so far.
  std::vector<PowerRelation> built;
  RingPtr partial;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<Generator> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(g + 1));
    for (auto& r : built)
      for (auto& t : r.replacement) t.exps.resize(g + 1, 0);
    partial = GradedRing::create(coeffs, prefix, built, top_degree, g + 1, nullptr);
    if (!spec_of[g]) continue;
    const std::size_t k = *spec_of[g];
    const auto& spec = relations[k];
    if (spec.exponent == 0)
      throw Error(ErrorKind::MalformedReplacement, "relation exponent on '" + spec.generator + "' must be positive")
          .with_item(k);
    std::vector<Term> repl;
    try {
      for (const auto& name : spec.replacement.names())
        if (!partial->find(name)) {
          bool later = std::any_of(gens.begin(), gens.end(), [&](const Generator& x) { return x.name == name; });
          throw Error(later ? ErrorKind::MalformedReplacement : ErrorKind::UnknownGenerator,
                      later ? "replacement of " + spec.generator + " uses later generator " + name
                            : "unknown generator '" + name + "'");
        }
      repl = normalize(spec.replacement, partial).terms();
    } catch (Error& e) {
      throw e.with_item(k);
    }
    built.push_back(PowerRelation{g, spec.exponent, std::move(repl)});
    try {
      partial = GradedRing::create(coeffs, prefix, built, top_degree, g + 1, nullptr);
    } catch (Error& e) {
      throw e.with_item(k);
    }
  }
  for (auto& r : built)
    for (auto& t : r.replacement) t.exps.resize(n, 0);
  return GradedRing::create(coeffs, std::move(gens), std::move(built), top_degree, n, nullptr);
}

// ---------------------------------------------------------------------------
// RingElement

RingElement RingElement::zero(RingPtr ring) { return RingElement(std::move(ring), {}); }

RingElement RingElement::one(RingPtr ring) { return constant(std::move(ring), 1); }

RingElement RingElement::constant(RingPtr ring, Integer value) {
  std::vector<Term> t{Term{Exponents(ring->num_generators(), 0), std::move(value)}};
  return from_terms(std::move(ring), std::move(t));
}

RingElement RingElement::generator(RingPtr ring, std::string_view name) {
  auto idx = ring->find(name);
  if (!idx) throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
  return generator(std::move(ring), *idx);
}

RingElement RingElement::generator(RingPtr ring, std::size_t index) {
  Exponents e(ring->num_generators(), 0);
  e.at(index) = 1;
  return from_terms(std::move(ring), {Term{std::move(e), 1}});
}

RingElement RingElement::from_terms(RingPtr ring, std::vector<Term> terms) {
  auto normal = ring->reduce(std::move(terms));
  return RingElement(std::move(ring), std::move(normal));
}

bool RingElement::is_one() const {
  return terms_.size() == 1 && terms_[0].coeff == 1 &&
         std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

std::optional<int> RingElement::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = ring_->degree(terms_[0].exps);
  for (const auto& t : terms_)
    if (ring_->degree(t.exps) != d) return std::nullopt;
  return d;
}

bool RingElement::is_homogeneous() const { return is_zero() || degree().has_value(); }

bool RingElement::is_homogeneous_of(int d) const {
  for (const auto& t : terms_)
    if (ring_->degree(t.exps) != d) return false;
  return true;
}

RingElement RingElement::component(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (ring_->degree(t.exps) == d) out.push_back(t);
  return RingElement(ring_, std::move(out));
}

RingElement RingElement::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->coeffs().reduce(-t.coeff);
  return RingElement(ring_, std::move(out));
}

namespace {

void require_same(const RingElement& a, const RingElement& b) {
  if (a.ring().get() != b.ring().get()) throw Error(ErrorKind::MixedRings, "operands belong to different rings");
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, const CoefficientDomain& dom,
                            bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push_b = [&](const Term& t) { out.push_back(Term{t.exps, subtract ? dom.reduce(-t.coeff) : t.coeff}); };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exps < b[j].exps)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exps < a[i].exps) {
      push_b(b[j++]);
    } else {
      Integer c = subtract ? Integer(a[i].coeff - b[j].coeff) : Integer(a[i].coeff + b[j].coeff);
      c = dom.reduce(std::move(c));
      if (c != 0) out.push_back(Term{a[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<Term> raw_product(const std::vector<Term>& a, const std::vector<Term>& b, const CoefficientDomain& dom) {
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Term t{x.exps, dom.reduce(x.coeff * y.coeff)};
      for (std::size_t i = 0; i < t.exps.size(); ++i) t.exps[i] += y.exps[i];
      out.push_back(std::move(t));
    }
  return out;
}

}  // namespace

RingElement& RingElement::operator+=(const RingElement& rhs) {
  require_same(*this, rhs);
  terms_ = merge_add(terms_, rhs.terms_, ring_->coeffs(), false);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& rhs) {
  require_same(*this, rhs);
  terms_ = merge_add(terms_, rhs.terms_, ring_->coeffs(), true);
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& rhs) {
  require_same(*this, rhs);
  terms_ = ring_->reduce(raw_product(terms_, rhs.terms_, ring_->coeffs()));
  return *this;
}

RingElement RingElement::scaled(const Integer& c) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff *= c;
  return from_terms(ring_, std::move(out));
}

RingElement RingElement::pow(std::uint64_t e) const {
  RingElement result = one(ring_);
  RingElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_.get() == b.ring_.get() && a.terms_ == b.terms_;
}

std::string monomial_to_string(const GradedRing& ring, const Exponents& exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.generators()[i].name;
    if (exps[i] > 1) s += '^' + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  // Display order: descending degree, then later generators first.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::vector<int> degs;
  std::sort(order.begin(), order.end(), [&](const Term* a, const Term* b) {
    int da = ring_->degree(a->exps), db = ring_->degree(b->exps);
    if (da != db) return da > db;
    return std::lexicographical_compare(b->exps.rbegin(), b->exps.rend(), a->exps.rbegin(), a->exps.rend());
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Integer c = t->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = monomial_to_string(*ring_, t->exps);
    if (mono == "1")
      os << c;
    else if (c == 1)
      os << mono;
    else
      os << c << '*' << mono;
  }
  return os.str();
}

RingElement pow(const RingElement& a, std::uint64_t e) { return a.pow(e); }
bool is_zero(const RingElement& a) { return a.is_zero(); }
RingElement component(const RingElement& a, int degree) { return a.component(degree); }

// ---------------------------------------------------------------------------
// Raw polynomials and expression evaluation

RawPoly raw_add(const RawPoly& a, const RawPoly& b) {
  if (a.ring.get() != b.ring.get()) throw Error(ErrorKind::MixedRings, "operands belong to different rings");
  RawPoly out{a.ring, a.terms};
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  combine(out.terms, a.ring->coeffs());
  return out;
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b) {
  if (a.ring.get() != b.ring.get()) throw Error(ErrorKind::MixedRings, "operands belong to different rings");
  RawPoly out{a.ring, raw_product(a.terms, b.terms, a.ring->coeffs())};
  combine(out.terms, a.ring->coeffs());
  return out;
}

RingElement normalize(const RawPoly& raw) { return RingElement::from_terms(raw.ring, raw.terms); }

namespace {

template <class Value, class Leaf, class Add, class Mul, class Neg, class Num>
Value evaluate(const Expr& e, Leaf leaf, Add add, Mul mul, Neg neg, Num num) {
  auto rec = [&](const Expr& x, auto& self) -> Value {
    switch (x.op()) {
      case Expr::Op::Number: return num(x.value());
      case Expr::Op::Name: return leaf(x);
      case Expr::Op::Add: return add(self(x.lhs(), self), self(x.rhs(), self));
      case Expr::Op::Sub: return add(self(x.lhs(), self), neg(self(x.rhs(), self)));
      case Expr::Op::Mul: return mul(self(x.lhs(), self), self(x.rhs(), self));
      case Expr::Op::Neg: return neg(self(x.lhs(), self));
      case Expr::Op::Pow: {
        Value base = self(x.lhs(), self);
        Value acc = num(Integer(1));
        for (std::uint32_t k = x.exponent(); k; k >>= 1) {
          if (k & 1) acc = mul(acc, base);
          if (k > 1) base = mul(base, base);
        }
        return acc;
      }
    }
    throw Error(ErrorKind::InvariantViolation, "bad expression node");
  };
  return rec(e, rec);
}

[[noreturn]] void unknown(const Expr& leaf) {
  throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + leaf.identifier() + "'",
              SourcePos{0, leaf.column()});
}

}  // namespace

RawPoly to_raw(const Expr& expr, const RingPtr& ring) {
  const std::size_t n = ring->num_generators();
  return evaluate<RawPoly>(
      expr,
      [&](const Expr& leaf) {
        auto idx = ring->find(leaf.identifier());
        if (!idx) unknown(leaf);
        Exponents e(n, 0);
        e[*idx] = 1;
        return RawPoly{ring, {Term{std::move(e), 1}}};
      },
      raw_add, raw_mul,
      [&](RawPoly p) {
        for (auto& t : p.terms) t.coeff = ring->coeffs().reduce(-t.coeff);
        return p;
      },
      [&](const Integer& v) {
        RawPoly p{ring, {Term{Exponents(n, 0), ring->coeffs().reduce(v)}}};
        combine(p.terms, ring->coeffs());
        return p;
      });
}

RingElement normalize(const Expr& expr, const RingPtr& ring) {
  return evaluate<RingElement>(
      expr,
      [&](const Expr& leaf) {
        auto idx = ring->find(leaf.identifier());
        if (!idx) unknown(leaf);
        return RingElement::generator(ring, *idx);
      },
      [](RingElement a, const RingElement& b) { return a += b; },
      [](RingElement a, const RingElement& b) { return a *= b; }, [](const RingElement& a) { return -a; },
      [&](const Integer& v) { return RingElement::constant(ring, v); });
}

RingElement parse_element(std::string_view text, const RingPtr& ring) { return normalize(parse_expr(text), ring); }

RingElement lift(const RingElement& a, const RingPtr& target) {
  if (a.ring().get() == target.get()) return a;
  if (!target->extends(*a.ring()))
    throw Error(ErrorKind::MixedRings, "target ring does not extend the element's ring");
  std::vector<Term> terms = a.terms();
  for (auto& t : terms) t.exps.resize(target->num_generators(), 0);
  return RingElement::from_terms(target, std::move(terms));
}

}  // namespace bub
