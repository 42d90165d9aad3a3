#include "bub/bounds.hpp"

#include <algorithm>
#include <bit>

#include "bub/binom.hpp"
#include "bub/error.hpp"
#include "bub/extensions.hpp"

namespace bub {

// ---------------------------------------------------------------------------
// BoundReport helpers

bool BoundReport::all_passed() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.passed; });
}

Hypothesis& BoundReport::add(std::string name, bool passed, std::string witness) {
  hypotheses.push_back(Hypothesis{std::move(name), passed, std::move(witness)});
  return hypotheses.back();
}

void BoundReport::fail(std::string name, std::string_view kind, std::string witness) {
  add(std::move(name), false, std::move(witness));
  if (!failure) failure = std::string(kind);
}

std::string to_string(CertificateLabel label) { return label == CertificateLabel::Exact ? "exact" : "formal"; }

long long stiefel_bound(Mode mode, long long d, long long k, long long n) {
  return mode == Mode::Real ? d + k - n : 1 + d + 2 * (k - n);
}

long long tower_bound(Mode mode, long long d, long long l, long long m, long long n) {
  return mode == Mode::Real ? d + l + m - n : 1 + d + 2 * (m - n + l);
}

namespace {

void require_ring(const RingElement& x, const RingPtr& ring, const char* what) {
  if (x.ring().get() != ring.get()) throw Error(ErrorKind::MixedRings, std::string(what) + " belongs to another ring");
}

int homogeneous_degree(const RingElement& x, const char* what) {
  if (x.is_zero()) return 0;
  auto d = x.degree();
  if (!d) throw Error(ErrorKind::DegreeMismatch, std::string(what) + " = " + x.to_string() + " is not homogeneous");
  return *d;
}

CertificateLabel label_for(const GradedRing& ring) {
  return ring.is_truncated() ? CertificateLabel::Formal : CertificateLabel::Exact;
}

std::string kind(ErrorKind k) { return std::string(to_string(k)); }

}  // namespace

// ---------------------------------------------------------------------------
// Elementary bound

BoundReport certificate_stiefel(const StiefelScenario& inst) {
  const RingPtr& ring = inst.xi.ring();
  require_ring(inst.e_lambda, ring, "e(lambda)");
  require_ring(inst.b, ring, "b");
  if (inst.c) require_ring(*inst.c, ring, "c");
  const Mode mode = inst.xi.mode();
  const int unit = inst.xi.unit();
  if (!inst.e_lambda.is_homogeneous_of(unit))
    throw Error(ErrorKind::DegreeMismatch,
                "e(lambda) = " + inst.e_lambda.to_string() + " must have degree " + std::to_string(unit));
  const int d = homogeneous_degree(inst.b, "b");
  const int n = inst.xi.dimension();
  const int k = inst.k;

  BoundReport rep;
  rep.scenario = "stiefel";
  rep.mode = mode;
  rep.theorem = mode == Mode::Real ? "stiefel-real" : "stiefel-complex";
  rep.dims = {{"d", d}, {"k", k}, {"n", n}};
  if (inst.leray_hirsch_declared)
    rep.notes.push_back("fibrewise surjectivity (Leray-Hirsch) declared by the user, not verified");
  if (ring->is_truncated())
    rep.notes.push_back("ring is a truncated formal model: certificate checks consistency of the hypotheses only");

  if (k < n) {
    rep.fail("k >= n", kind(ErrorKind::KLessThanN), "k=" + std::to_string(k) + ", n=" + std::to_string(n));
    return rep;
  }
  rep.add("k >= n", true, "k=" + std::to_string(k) + ", n=" + std::to_string(n));

  RingElement a = RingElement::zero(ring);
  RingElement target = RingElement::zero(ring);
  std::string target_name;
  if (inst.c) {
    const int want = (k - n) * unit;
    if (!inst.c->is_homogeneous_of(want))
      throw Error(ErrorKind::DegreeMismatch,
                  "c = " + inst.c->to_string() + " must have degree " + std::to_string(want));
    a = inst.b * *inst.c;
    target = a * inst.e_lambda.pow(static_cast<std::uint64_t>(n));
    target_name = "b*c*e^n";
  } else {
    a = inst.b * inst.e_lambda.pow(static_cast<std::uint64_t>(k - n));
    target = inst.b * inst.e_lambda.pow(static_cast<std::uint64_t>(k));
    target_name = "b*e^k";
  }
  rep.trace.emplace_back("a", a.to_string());
  rep.trace.emplace_back(target_name, target.to_string());

  if (target.is_zero()) {
    rep.fail(target_name + " != 0", kind(ErrorKind::CertificateZero), "0");
    return rep;
  }
  rep.add(target_name + " != 0", true, target.to_string());

  const RingElement euler = tensor_line_euler(inst.xi, inst.e_lambda);
  const RingElement product = a * euler;
  rep.trace.emplace_back(mode == Mode::Real ? "e(lambda(x)xi)" : "e(lambda*(x)xi)", euler.to_string());
  rep.trace.emplace_back("a*e", product.to_string());

  // Complex mode works with lambda* (x) xi, whose top term is (-e)^n.
  const RingElement signed_target =
      mode == Mode::Real || n % 2 == 0 ? target : -target;
  const std::string identity_name =
      "a*e(lambda(x)xi) = " + std::string(mode == Mode::Real || n % 2 == 0 ? "" : "-") + target_name;
  if (product != signed_target) {
    // b * w_j(xi) must vanish for j > 0, i.e. nothing survives above the top degree of B.
    rep.fail(identity_name, "TopDegreeIdentity", product.to_string() + " vs " + signed_target.to_string());
    return rep;
  }
  rep.add(identity_name, true, product.to_string());
  rep.add("a*e(lambda(x)xi) != 0", !product.is_zero(), product.to_string());

  const int adeg = d + (k - n) * unit;
  rep.certificate = Certificate{a.to_string(), adeg, label_for(*ring)};
  rep.bound = stiefel_bound(mode, d, k, n);
  return rep;
}

// ---------------------------------------------------------------------------
// Sphere-bundle tower

std::optional<RingElement> top_class(const RingPtr& ring) {
  auto top = ring->max_nonzero_degree();
  if (!top) return std::nullopt;
  auto basis = ring->basis(*top);
  if (basis.empty()) return std::nullopt;
  return RingElement::from_terms(ring, {Term{basis.front(), 1}});
}

BoundReport certificate_main(const MainScenario& inst) {
  const RingPtr& base = inst.eta.ring();
  if (inst.xi.ring().get() != base.get()) throw Error(ErrorKind::MixedRings, "xi and eta live over different rings");
  if (inst.xi.mode() != inst.eta.mode()) throw Error(ErrorKind::MixedRings, "xi and eta have different modes");
  const Mode mode = inst.eta.mode();
  const int unit = unit_degree(mode);
  const int n = inst.xi.dimension();
  const int m = inst.eta.dimension() - 1;
  const int r = static_cast<int>(inst.zetas.size());

  BoundReport rep;
  rep.scenario = "main";
  rep.mode = mode;
  rep.theorem = mode == Mode::Real ? "tower-real" : "tower-complex";
  rep.dims = {{"n", n}, {"m", m}, {"r", r}};

  if (m < 0) throw Error(ErrorKind::DimensionMismatch, "eta must have dimension m+1 >= 1");
  if (n > m) {
    rep.fail("n <= m", kind(ErrorKind::NExceedsM), "n=" + std::to_string(n) + ", m=" + std::to_string(m));
    return rep;
  }
  rep.add("n <= m", true, "n=" + std::to_string(n) + ", m=" + std::to_string(m));

  RingElement b = RingElement::zero(base);
  if (inst.b) {
    require_ring(*inst.b, base, "b");
    b = *inst.b;
  } else {
    auto top = top_class(base);
    if (!top)
      throw Error(ErrorKind::InvariantViolation,
                  "base ring is not finite-dimensional; supply b explicitly");
    b = *top;
    rep.notes.push_back("b chosen as top-degree class " + b.to_string());
  }
  if (b.is_zero()) {
    rep.fail("b != 0 of maximal degree", kind(ErrorKind::CertificateZero), "0");
    return rep;
  }
  const int d = homogeneous_degree(b, "b");
  rep.dims["d"] = d;
  if (auto top = base->max_nonzero_degree()) {
    if (*top != d) {
      rep.fail("b != 0 of maximal degree", "NotMaximalDegree",
               "deg b = " + std::to_string(d) + ", top degree " + std::to_string(*top));
      return rep;
    }
  } else {
    rep.notes.push_back("base presentation is infinite; maximality of d is assumed, not verified");
  }
  rep.add("b != 0 of maximal degree", true, b.to_string());
  if (base->is_truncated())
    rep.notes.push_back("base is a truncated formal model: certificate checks consistency of the hypotheses only");

  const RingPtr proj = extend_projective(base, inst.eta, "t");
  const RingElement t_p = RingElement::generator(proj, "t");
  rep.trace.emplace_back("q(t)=0", "t^" + std::to_string(m + 1) + " relation adjoined");

  RingPtr level = proj;
  long long l_total = 0;
  std::vector<std::size_t> sigma_index;
  bool defaulted_s = false;
  for (int i = 0; i < r; ++i) {
    const auto& spec = inst.zetas[static_cast<std::size_t>(i)];
    const std::string idx = std::to_string(i + 1);
    ClassList zeta = [&] {
      try {
        return spec.classes(level);
      } catch (Error& e) {
        throw e.with_item(static_cast<std::size_t>(i));
      }
    }();
    if (zeta.ring().get() != level.get())
      throw Error(ErrorKind::MixedRings, "zeta_" + idx + " is not over its level ring").with_item(static_cast<std::size_t>(i));
    if (zeta.mode() != mode)
      throw Error(ErrorKind::MixedRings, "zeta_" + idx + " has the wrong mode").with_item(static_cast<std::size_t>(i));
    if (zeta.dimension() < 1)
      throw Error(ErrorKind::DimensionMismatch, "zeta_" + idx + " needs dimension l+1 >= 1")
          .with_item(static_cast<std::size_t>(i));
    const int li = zeta.dimension() - 1;
    rep.dims["l" + idx] = li;
    const RingElement euler = zeta.top();
    rep.trace.emplace_back("e(zeta_" + idx + ")", euler.to_string());
    if (!euler.is_zero()) {
      rep.fail("e(zeta_" + idx + ") = 0", kind(ErrorKind::EulerClassNonzero), euler.to_string());
      return rep;
    }
    rep.add("e(zeta_" + idx + ") = 0", true, "0");
    RingElement s = RingElement::zero(level);
    if (spec.s) {
      s = spec.s(level);
    } else {
      defaulted_s = true;
    }
    level = extend_sphere(level, zeta[li], s, li * unit, "s" + idx);
    sigma_index.push_back(level->num_generators() - 1);
    l_total += li;
  }
  if (defaulted_s) rep.notes.push_back("s_i = sigma_i^2 - w_l(zeta_i) sigma_i not supplied; defaulted to 0");
  rep.dims["l"] = l_total;

  const RingPtr& total = level;
  RingElement sigma = RingElement::one(total);
  for (auto gi : sigma_index) sigma *= RingElement::generator(total, gi);

  // Class on P(eta): b e(H)^{m-n} e(H (x) xi) = b t^m when H^{>d}(B) = 0.
  const ClassList xi_p = lift(inst.xi, proj);
  const RingElement b_p = lift(b, proj);
  const RingElement on_p = b_p * t_p.pow(static_cast<std::uint64_t>(m - n)) * tensor_line_euler(xi_p, t_p);
  rep.trace.emplace_back("b*e(H)^(m-n)*e(H(x)xi)", on_p.to_string());
  if (on_p.is_zero()) {
    rep.fail("b*e(H)^(m-n)*e(H(x)xi) != 0", kind(ErrorKind::CertificateZero), "0");
    return rep;
  }
  rep.add("b*e(H)^(m-n)*e(H(x)xi) != 0", true, on_p.to_string());

  const RingElement t_e = lift(t_p, total);
  const RingElement a = lift(b, total) * t_e.pow(static_cast<std::uint64_t>(m - n)) * sigma;
  const RingElement product = a * tensor_line_euler(lift(inst.xi, total), t_e);
  const RingElement expected = lift(on_p, total) * sigma;
  rep.trace.emplace_back("a", a.to_string());
  rep.trace.emplace_back("a*e(lambda(x)xi)", product.to_string());
  if (product != expected) {
    rep.fail("a*e(lambda(x)xi) = rho*(b*e(H)^(m-n)*e(H(x)xi))*sigma", kind(ErrorKind::InvariantViolation),
             product.to_string() + " vs " + expected.to_string());
    return rep;
  }
  rep.add("a*e(lambda(x)xi) = rho*(b*e(H)^(m-n)*e(H(x)xi))*sigma", true, product.to_string());
  if (product.is_zero()) {
    rep.fail("a*e(lambda(x)xi) != 0", kind(ErrorKind::CertificateZero), "0");
    return rep;
  }
  rep.add("a*e(lambda(x)xi) != 0", true, product.to_string());

  auto adeg = a.degree();
  rep.certificate = Certificate{a.to_string(), adeg.value_or(0), label_for(*total)};
  rep.bound = tower_bound(mode, d, l_total, m, n);
  return rep;
}

// ---------------------------------------------------------------------------
// Fiber exponents

std::optional<int> fiber_k_proj_stiefel(int r, int s, std::uint32_t p, Mode mode) {
  if (r < 1 || s < 1) throw Error(ErrorKind::ParameterOutOfRange, "need r >= 1 and s >= 1");
  if (mode == Mode::Real && p != 2) throw Error(ErrorKind::ParameterOutOfRange, "real mode uses p = 2");
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeModulus, std::to_string(p) + " is not prime");
  const auto top = static_cast<std::uint64_t>(r + s);
  for (int k = s; k < r + s; ++k)
    if (binom_mod_p(top, k + 1, p) != 0) return k;
  return std::nullopt;
}

int fiber_k_product_spheres(std::span<const int> dims) {
  if (dims.empty()) throw Error(ErrorKind::EmptyList, "no sphere dimensions given");
  for (int n : dims)
    if (n < 1) throw Error(ErrorKind::ParameterOutOfRange, "sphere dimensions must be positive");
  return *std::min_element(dims.begin(), dims.end());
}

int fiber_k_wall_type(int r, int s) {
  if (r <= 1 || s <= 1) throw Error(ErrorKind::ParameterOutOfRange, "need r > 1 and s > 1");
  return 2 * r + s;
}

// ---------------------------------------------------------------------------
// Structure checks

namespace {

// H^perp = eta - H over P(eta): w(H^perp) = w(eta) (1 + t)^{-1}, dimension m.
ClassList hopf_complement(const ClassList& eta_p, const RingElement& t) {
  const int m = eta_p.dimension() - 1;
  ClassList hopf(eta_p.ring(), eta_p.mode(), {t});
  ClassList sum = whitney_sum(eta_p, whitney_inverse(hopf, m));
  std::vector<RingElement> higher;
  for (int i = 1; i <= m; ++i) higher.push_back(sum[i]);
  return ClassList(eta_p.ring(), eta_p.mode(), std::move(higher));
}

ClassList truncated(const ClassList& c, int dim) {
  std::vector<RingElement> higher;
  for (int i = 1; i <= dim; ++i) higher.push_back(c[i]);
  return ClassList(c.ring(), c.mode(), std::move(higher));
}

RingPtr root_projective(const RingPtr& level) {
  // The ring that adjoined t: walk up until the parent no longer contains t.
  RingPtr r = level;
  while (r->parent() && r->parent()->find("t")) r = r->parent();
  return r;
}

}  // namespace

CheckResult check_ms(int m_plus_1, int r, const ClassList& eta) {
  if (eta.dimension() != m_plus_1)
    throw Error(ErrorKind::DimensionMismatch,
                "dim eta = " + std::to_string(eta.dimension()) + " but m+1 = " + std::to_string(m_plus_1));
  if (r < 1) throw Error(ErrorKind::ParameterOutOfRange, "r must be >= 1");
  if (m_plus_1 < r + 1)
    throw Error(ErrorKind::DimensionTooSmall, "need m+1 >= r+1 (m+1 = " + std::to_string(m_plus_1) +
                                                  ", r = " + std::to_string(r) + ")");
  const int s = std::bit_width(static_cast<unsigned>(r));  // 2^{s-1} <= r < 2^s
  const int block = 1 << s;
  const int m = m_plus_1 - 1;

  CheckResult out;
  out.name = "check-ms";
  out.dims = {{"m", m}, {"r", r}, {"s", s}};

  // 2-adic digit form
  std::string adic_witness;
  bool adic = m_plus_1 % block == 0;
  if (!adic) adic_witness = "2^" + std::to_string(s) + " does not divide m+1 = " + std::to_string(m_plus_1);
  for (int j = 1; adic && j <= m_plus_1; ++j)
    if (j % block != 0 && !eta[j].is_zero()) {
      adic = false;
      adic_witness = "w_" + std::to_string(j) + " = " + eta[j].to_string() + " with 2^" + std::to_string(s) +
                     " not dividing " + std::to_string(j);
    }

  // binomial-vanishing form: binom(m+1-j, i) w_j = 0 for 1 <= i <= r, 0 <= j <= m+1-i
  std::string binom_witness;
  bool binomial = true;
  for (int i = 1; binomial && i <= r; ++i)
    for (int j = 0; j <= m_plus_1 - i; ++j) {
      if (binom_mod_p(static_cast<std::uint64_t>(m_plus_1 - j), i, 2) == 0) continue;
      if (eta[j].is_zero()) continue;
      binomial = false;
      binom_witness = "binom(" + std::to_string(m_plus_1 - j) + "," + std::to_string(i) + ") w_" + std::to_string(j) +
                      " = " + eta[j].to_string() + " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
      break;
    }

  if (adic != binomial)
    throw Error(ErrorKind::InvariantViolation, "2-adic and binomial characterizations disagree: " + adic_witness +
                                                   " / " + binom_witness);
  out.details.push_back(Hypothesis{"2-adic condition", adic, adic ? "" : adic_witness});
  out.details.push_back(Hypothesis{"binomial vanishing", binomial, binomial ? "" : binom_witness});
  out.passed = adic;
  out.witness = adic ? "" : binom_witness;

  long long l = 0;
  for (int i = 1; i <= r; ++i) {
    out.plan_dims.push_back(m - i);
    l += m - i;
  }
  out.dims["l"] = l;
  out.dims["l+m"] = l + m;
  const long long closed = static_cast<long long>(r + 1) * m - static_cast<long long>(r) * (r + 1) / 2;
  if (l + m != closed) throw Error(ErrorKind::InvariantViolation, "fiber dimension bookkeeping");

  if (eta.mode() == Mode::Real) {
    // zeta_1 = H (x) H^perp, zeta_i the tangent bundle of S(zeta_{i-1}): stably
    // R^{i-1} + zeta_i = zeta_1, so w(zeta_i) is w(zeta_1) cut at dimension m+1-i.
    for (int i = 1; i <= r; ++i) {
      const ClassList eta_copy = eta;
      const int dim = m_plus_1 - i;
      ZetaSpec spec;
      spec.label = "zeta_" + std::to_string(i) + " (Stiefel tower)";
      spec.classes = [eta_copy, dim](const RingPtr& level) {
        const RingPtr proj = root_projective(level);
        const RingElement t = RingElement::generator(proj, "t");
        const ClassList zeta1 = tensor_line_classes(hopf_complement(lift(eta_copy, proj), t), t);
        return lift(truncated(zeta1, dim), level);
      };
      out.plan.push_back(std::move(spec));
    }
  }
  return out;
}

CheckResult check_mpss(const ClassList& eta, const std::vector<ClassList>& mus) {
  CheckResult out;
  out.name = "check-mpss";
  out.passed = true;
  const int m = eta.dimension() - 1;
  out.dims = {{"m", m}, {"r", static_cast<long long>(mus.size())}};
  const TPoly q = char_poly(eta);
  long long l = 0;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    const auto& mu = mus[i];
    const std::string idx = std::to_string(i + 1);
    if (mu.ring().get() != eta.ring().get())
      throw Error(ErrorKind::MixedRings, "mu_" + idx + " is over another ring").with_item(i);
    if (mu.dimension() < m + 1)
      throw Error(ErrorKind::DimensionTooSmall, "dim mu_" + idx + " = " + std::to_string(mu.dimension()) +
                                                    " < m+1 = " + std::to_string(m + 1))
          .with_item(i);
    const int li = mu.dimension() - 1;
    out.dims["l" + idx] = li;
    l += li;
    out.plan_dims.push_back(li);
    auto [quot, rem] = poly_divmod(char_poly(mu), q);
    const bool ok = rem.is_zero();
    out.details.push_back(Hypothesis{"q(T) | r_" + idx + "(T)", ok, ok ? "quotient " + quot.to_string()
                                                                         : "remainder " + rem.to_string()});
    if (!ok && out.passed) {
      out.passed = false;
      out.witness = "r_" + idx + " mod q = " + rem.to_string();
    }
    ZetaSpec spec;
    spec.label = "H(x)mu_" + idx;
    const ClassList mu_copy = mu;
    spec.classes = [mu_copy](const RingPtr& level) {
      const RingElement t = RingElement::generator(level, "t");
      return tensor_line_classes(lift(mu_copy, level), t);
    };
    out.plan.push_back(std::move(spec));
  }
  out.dims["l"] = l;
  if (out.passed && !mus.empty())
    out.notes.push_back("sigma_i^2 - r_i'(w_1(H)) sigma_i lies in the cohomology of P(eta)");
  return out;
}

CheckResult check_two(const ClassList& eta) {
  const int m1 = eta.dimension();
  if (m1 < 1) throw Error(ErrorKind::DimensionTooSmall, "eta must have dimension >= 1");
  CheckResult out;
  out.name = "check-two";
  out.dims = {{"m", m1 - 1}, {"l", m1 - 2}};

  const RingPtr proj = extend_projective(eta.ring(), eta, "t");
  const RingElement t = RingElement::generator(proj, "t");
  const RingElement symbolic = tpoly_eval(poly_derivative(char_poly(lift(eta, proj))), t);

  bool closed = m1 % 2 == 0;
  std::string closed_witness = closed ? "" : "m+1 = " + std::to_string(m1) + " is odd";
  for (int i = 1; closed && i <= m1; i += 2)
    if (!eta[i].is_zero()) {
      closed = false;
      closed_witness = "w_" + std::to_string(i) + " = " + eta[i].to_string();
    }
  if (closed != symbolic.is_zero())
    throw Error(ErrorKind::InvariantViolation, "q'(w_1(H)) = " + symbolic.to_string() +
                                                   " disagrees with the closed-form criterion");
  out.details.push_back(Hypothesis{"m+1 even, odd classes zero", closed, closed_witness});
  out.details.push_back(Hypothesis{"w_{l+1}(zeta) = q'(w_1(H)) = 0", symbolic.is_zero(), symbolic.to_string()});
  out.passed = closed;
  out.witness = closed ? "" : closed_witness;
  return out;
}

CheckResult check_u2(const ClassList& eta) {
  const int m1 = eta.dimension();
  if (m1 < 1) throw Error(ErrorKind::DimensionTooSmall, "eta must have dimension >= 1");
  const int m = m1 - 1;
  CheckResult out;
  out.name = "check-u2";
  out.dims = {{"m", m}, {"l", m - 2}};

  const RingPtr proj = extend_projective(eta.ring(), eta, "t");
  const RingElement t = RingElement::generator(proj, "t");
  const ClassList eta_p = lift(eta, proj);
  const auto& dom = proj->coeffs();
  RingElement symbolic = RingElement::zero(proj);
  for (int j = 0; j <= m - 1; ++j) {
    Integer c = dom.binom(m1 - j, 2);
    if (c == 0) continue;
    symbolic += (eta_p[j] * t.pow(static_cast<std::uint64_t>(m - 1 - j))).scaled(c);
  }

  bool shape = m1 % 2 == 0;
  std::string shape_witness = shape ? "" : "m+1 = " + std::to_string(m1) + " is odd";
  for (int i = 1; shape && i <= m1; i += 2)
    if (!eta[i].is_zero()) {
      shape = false;
      shape_witness = "w_" + std::to_string(i) + " = " + eta[i].to_string();
    }
  out.details.push_back(Hypothesis{"complex-structure shape (m+1 even, odd classes zero)", shape, shape_witness});
  out.details.push_back(Hypothesis{"w_{l+1}(zeta) = 0", symbolic.is_zero(), symbolic.to_string()});
  if (!shape) {
    out.passed = false;
    out.witness = "precondition: " + shape_witness;
    return out;
  }

  bool closed = m1 % 4 == 0;
  std::string closed_witness = closed ? "" : "4 does not divide m+1 = " + std::to_string(m1);
  for (int i = 1; closed && 2 * i <= m1; i += 2)
    if (!eta[2 * i].is_zero()) {
      closed = false;
      closed_witness = "w_" + std::to_string(2 * i) + " = " + eta[2 * i].to_string();
    }
  if (closed != symbolic.is_zero())
    throw Error(ErrorKind::InvariantViolation, "binomial Euler class " + symbolic.to_string() +
                                                   " disagrees with the closed-form criterion");
  out.details.push_back(Hypothesis{"4 | m+1, w_{2i} = 0 for odd i", closed, closed_witness});
  out.passed = closed;
  out.witness = closed ? "" : closed_witness;
  return out;
}

RingElement spherical_fibration_euler(const ClassList& xi_classes, const RingElement& e_lambda) {
  return tensor_line_euler(xi_classes, e_lambda);
}

BoundReport to_report(const CheckResult& check, Mode mode) {
  BoundReport rep;
  rep.scenario = check.name;
  rep.mode = mode;
  rep.theorem = check.name;
  rep.hypotheses = check.details;
  rep.dims = check.dims;
  rep.notes = check.notes;
  if (!check.passed) rep.failure = "CheckFailed";
  if (check.passed && !check.plan_dims.empty()) {
    std::string plan;
    for (std::size_t i = 0; i < check.plan_dims.size(); ++i)
      plan += (i ? ", " : "") + std::string("l") + std::to_string(i + 1) + "=" + std::to_string(check.plan_dims[i]);
    rep.notes.push_back("sphere-bundle plan: " + plan);
  }
  return rep;
}

}  // namespace bub
