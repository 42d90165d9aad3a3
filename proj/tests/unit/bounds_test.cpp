#include "doctest.h"

#include <set>

#include "bub/bounds.hpp"
#include "bub/error.hpp"
#include "bub/extensions.hpp"
#include "support/oracle.hpp"
#include "support/random.hpp"

using namespace bub;

namespace {

ClassList classes(const RingPtr& r, std::initializer_list<const char*> ws, Mode mode = Mode::Real) {
  std::vector<RingElement> v;
  for (const char* w : ws) v.push_back(parse_element(w, r));
  return ClassList(r, mode, v);
}

StiefelScenario classic(const RingPtr& r, int n, int k) {
  return {ClassList::trivial(r, Mode::Real, n), RingElement::generator(r, "x"), RingElement::one(r), k,
          std::nullopt, false};
}

const Hypothesis* find_hyp(const BoundReport& rep, bool passed) {
  for (const auto& h : rep.hypotheses)
    if (h.passed == passed) return &h;
  return nullptr;
}

}  // namespace

TEST_CASE("bound arithmetic") {
  CHECK(stiefel_bound(Mode::Real, 2, 3, 1) == 4);
  CHECK(stiefel_bound(Mode::Complex, 2, 3, 1) == 1 + 2 + 4);
  CHECK(tower_bound(Mode::Real, 1, 5, 4, 2) == 8);
  CHECK(tower_bound(Mode::Complex, 1, 5, 4, 2) == 1 + 1 + 2 * 7);
}

TEST_CASE("certificate_stiefel: classic case") {
  const RingPtr r = testing::truncated_x(6);  // m = 5
  const BoundReport rep = certificate_stiefel(classic(r, 2, 5));
  REQUIRE(rep.bound);
  CHECK(*rep.bound == 3);
  CHECK(rep.certificate->element == "x^3");
  CHECK(rep.certificate->degree == 3);
  CHECK(rep.certificate->label == CertificateLabel::Exact);
  CHECK(rep.all_passed());
  CHECK(rep.theorem == "stiefel-real");
  CHECK(rep.dims.at("d") == 0);
  CHECK(rep.dims.at("k") == 5);
  CHECK(rep.dims.at("n") == 2);
}

TEST_CASE("certificate_stiefel: n = m + 1 boundary") {
  const RingPtr r = testing::truncated_x(6);
  const BoundReport low = certificate_stiefel(classic(r, 6, 5));
  CHECK_FALSE(low.bound);
  CHECK(low.failure == "KLessThanN");
  const BoundReport high = certificate_stiefel(classic(r, 6, 6));
  CHECK_FALSE(high.bound);
  CHECK(high.failure == "CertificateZero");
  CHECK(find_hyp(high, false)->name == "b*e^k != 0");
}

TEST_CASE("certificate_stiefel: d = 2, k = 3, n = 1") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"y", 1}, {"x", 1}},
                              {{"y", 3, Expr::number(0)}, {"x", 4, Expr::number(0)}});
  const ClassList xi = classes(r, {"y"});
  const BoundReport rep = certificate_stiefel(
      {xi, RingElement::generator(r, "x"), parse_element("y^2", r), 3, std::nullopt, false});
  REQUIRE(rep.bound);
  CHECK(*rep.bound == 4);
  CHECK(rep.certificate->element == "y^2*x^2");
}

TEST_CASE("certificate_stiefel: proof identity needs b to kill the classes of xi") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"y", 1}, {"x", 1}},
                              {{"y", 3, Expr::number(0)}, {"x", 4, Expr::number(0)}});
  const BoundReport rep = certificate_stiefel(
      {classes(r, {"y"}), RingElement::generator(r, "x"), parse_element("y", r), 3, std::nullopt, false});
  CHECK_FALSE(rep.bound);
  CHECK(rep.failure == "TopDegreeIdentity");
}

TEST_CASE("certificate_stiefel: optional class c and Leray-Hirsch flag") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"x", 1}, {"u", 2}},
                              {{"x", 3, Expr::number(0)}, {"u", 2, Expr::number(0)}});
  // c = u has degree 2 = k - n with k = 3, n = 1; b = 1, e = x.
  StiefelScenario sc{ClassList::trivial(r, Mode::Real, 1), RingElement::generator(r, "x"), RingElement::one(r), 3,
                     parse_element("u", r), true};
  const BoundReport rep = certificate_stiefel(sc);
  REQUIRE(rep.bound);
  CHECK(*rep.bound == 2);
  CHECK(rep.certificate->element == "u");
  CHECK(rep.notes.size() == 1);
  sc.c = parse_element("x", r);
  CHECK_THROWS_AS(certificate_stiefel(sc), Error);
}

TEST_CASE("certificate_stiefel: truncated base gives a formal certificate") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"y", 1}, {"x", 1}}, {{"x", 5, Expr::number(0)}}, 6);
  const BoundReport rep = certificate_stiefel(
      {ClassList::trivial(r, Mode::Real, 1), RingElement::generator(r, "x"), parse_element("y^2", r), 4, std::nullopt, false});
  REQUIRE(rep.bound);
  CHECK(rep.certificate->label == CertificateLabel::Formal);
}

TEST_CASE("certificate_stiefel: monotone in k") {
  for (int m = 1; m <= 12; ++m) {
    const RingPtr r = testing::truncated_x(m + 1);
    for (int n = 1; n <= m; ++n)
      for (int k = n; k < m; ++k) {
        const auto a = certificate_stiefel(classic(r, n, k));
        const auto b = certificate_stiefel(classic(r, n, k + 1));
        REQUIRE(a.bound);
        REQUIRE(b.bound);
        CHECK(*b.bound == *a.bound + 1);
      }
  }
}

TEST_CASE("certificate_stiefel: complex mode over Z and Fp") {
  for (auto dom : {CoefficientDomain::integers(), CoefficientDomain::fp(3)}) {
    const RingPtr r = make_ring(dom, {{"x", 2}}, {{"x", 5, Expr::number(0)}});
    for (int n = 1; n <= 4; ++n) {
      const BoundReport rep = certificate_stiefel(
          {ClassList::trivial(r, Mode::Complex, n), RingElement::generator(r, "x"), RingElement::one(r), 4,
           std::nullopt, false});
      REQUIRE(rep.bound);
      CHECK(*rep.bound == 1 + 2 * (4 - n));
      CHECK(rep.theorem == "stiefel-complex");
    }
  }
}

TEST_CASE("fiber_k_proj_stiefel") {
  for (int m = 1; m <= 512; ++m) REQUIRE(fiber_k_proj_stiefel(1, m, 2) == m);
  CHECK(fiber_k_proj_stiefel(2, 2, 2) == 3);
  CHECK(oracle::fiber_k_search(2, 2, 2) == 3);
  CHECK(fiber_k_proj_stiefel(2, 2, 2, Mode::Complex) == 3);
  CHECK(fiber_k_proj_stiefel(3, 4, 3, Mode::Complex) == oracle::fiber_k_search(3, 4, 3));
  CHECK_THROWS_AS(fiber_k_proj_stiefel(0, 2, 2), Error);
  CHECK_THROWS_AS(fiber_k_proj_stiefel(2, 2, 3, Mode::Real), Error);
  CHECK_THROWS_AS(fiber_k_proj_stiefel(2, 2, 4, Mode::Complex), Error);
}

TEST_CASE("fiber_k_product_spheres and fiber_k_wall_type") {
  const std::vector<int> a{3, 5, 2}, b{7}, c{4, 4};
  CHECK(fiber_k_product_spheres(a) == 2);
  CHECK(fiber_k_product_spheres(b) == 7);
  CHECK(fiber_k_product_spheres(c) == 4);
  try {
    fiber_k_product_spheres(std::vector<int>{});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyList);
  }
  CHECK(fiber_k_wall_type(2, 3) == 7);
  CHECK(fiber_k_wall_type(2, 2) == 6);
  try {
    fiber_k_wall_type(1, 3);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParameterOutOfRange);
  }
}

TEST_CASE("certificate_main: no spheres over a point") {
  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= m; ++n) {
      const BoundReport rep = certificate_main(
          {ClassList::trivial(pt, Mode::Real, m + 1), ClassList::trivial(pt, Mode::Real, n), {}, std::nullopt});
      REQUIRE(rep.bound);
      CHECK(*rep.bound == m - n);
      CHECK(rep.certificate->element == (m - n == 0 ? std::string("1") : m - n == 1 ? std::string("t")
                                                                          : "t^" + std::to_string(m - n)));
    }
}

TEST_CASE("certificate_main: n > m is a failed hypothesis") {
  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  const BoundReport rep = certificate_main(
      {ClassList::trivial(pt, Mode::Real, 2), ClassList::trivial(pt, Mode::Real, 2), {}, std::nullopt});
  CHECK_FALSE(rep.bound);
  CHECK(rep.failure == "NExceedsM");
}

TEST_CASE("certificate_main: nonzero Euler class of zeta_1") {
  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  ZetaSpec z;
  z.label = "H";
  z.classes = [](const RingPtr& level) { return ClassList(level, Mode::Real, {RingElement::generator(level, "t")}); };
  const BoundReport rep = certificate_main(
      {ClassList::trivial(pt, Mode::Real, 3), ClassList::trivial(pt, Mode::Real, 1), {z}, std::nullopt});
  CHECK_FALSE(rep.bound);
  CHECK(rep.failure == "EulerClassNonzero");
  CHECK(find_hyp(rep, false)->name == "e(zeta_1) = 0");
}

TEST_CASE("certificate_main: frame-bundle plan bookkeeping") {
  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  for (int r = 1; r <= 3; ++r)
    for (int m : {3, 7}) {
      if (m < r) continue;
      const ClassList eta = ClassList::trivial(pt, Mode::Real, m + 1);
      const CheckResult chk = check_ms(m + 1, r, eta);
      REQUIRE(chk.passed);
      CHECK(chk.dims.at("l+m") == (r + 1) * m - r * (r + 1) / 2);
      const BoundReport rep = certificate_main({eta, ClassList::trivial(pt, Mode::Real, 1), chk.plan, std::nullopt});
      REQUIRE(rep.bound);
      CHECK(*rep.bound == chk.dims.at("l+m") - 1);
      CHECK(rep.notes.size() >= 1);
    }
}

TEST_CASE("certificate_main: explicit b must have maximal degree") {
  const RingPtr b = testing::truncated_x(3);
  const ClassList eta = ClassList::trivial(b, Mode::Real, 2);
  const auto low = certificate_main({eta, ClassList::trivial(b, Mode::Real, 1), {}, parse_element("x", b)});
  CHECK_FALSE(low.bound);
  const auto top = certificate_main({eta, ClassList::trivial(b, Mode::Real, 1), {}, std::nullopt});
  REQUIRE(top.bound);
  CHECK(*top.bound == 2 + 1 - 1);
}

TEST_CASE("check_ms examples") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"a", 4}, {"b", 8}, {"c", 2}}, {});
  SUBCASE("r = 1 needs m+1 even and odd classes zero") {
    for (int m1 = 2; m1 <= 9; ++m1) {
      CHECK(check_ms(m1, 1, ClassList::trivial(r, Mode::Real, m1)).passed == (m1 % 2 == 0));
    }
  }
  SUBCASE("r = 2, m+1 = 8, only w4 and w8") {
    std::vector<RingElement> w(8, RingElement::zero(r));
    w[3] = RingElement::generator(r, "a");
    w[7] = RingElement::generator(r, "b");
    const ClassList eta(r, Mode::Real, w);
    CHECK(check_ms(8, 2, eta).passed);
    CHECK(oracle::ms_binomial(8, 2, {4, 8}));
    w[1] = RingElement::generator(r, "c");
    const CheckResult bad = check_ms(8, 2, ClassList(r, Mode::Real, w));
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.witness.empty());
  }
  SUBCASE("r = 2, m+1 = 6 fails") {
    const CheckResult res = check_ms(6, 2, ClassList::trivial(r, Mode::Real, 6));
    CHECK_FALSE(res.passed);
    CHECK(res.witness.find("binom(6,") != std::string::npos);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(check_ms(2, 2, ClassList::trivial(r, Mode::Real, 2)), Error);
    CHECK_THROWS_AS(check_ms(4, 1, ClassList::trivial(r, Mode::Real, 3)), Error);
  }
}

TEST_CASE("check_mpss examples") {
  const RingPtr b = testing::truncated_x(4);
  const ClassList eta = classes(b, {"x", "x^2"});
  const ClassList mu = whitney_sum(eta, ClassList::trivial(b, Mode::Real, 2));
  CHECK(check_mpss(eta, {mu}).passed);

  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  CHECK(check_mpss(ClassList::trivial(pt, Mode::Real, 3), {ClassList::trivial(pt, Mode::Real, 5)}).passed);

  // r = q * (T + x) + x^3 is not a multiple of q.
  const TPoly q = char_poly(eta);
  const TPoly h = char_poly(classes(b, {"x"}));
  const TPoly rr = q * h + TPoly(b, 1, {parse_element("x^3", b)});
  std::vector<RingElement> mw;
  for (int i = 1; i <= rr.degree(); ++i) mw.push_back(rr.coeff(rr.degree() - i));
  const CheckResult bad = check_mpss(eta, {mu, ClassList(b, Mode::Real, mw)});
  CHECK_FALSE(bad.passed);
  CHECK(bad.witness.find("r_2") != std::string::npos);
  CHECK(bad.witness.find("x^3") != std::string::npos);

  try {
    check_mpss(eta, {mu, ClassList::trivial(b, Mode::Real, 1)});
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionTooSmall);
    CHECK(e.item() == 1);
  }
}

TEST_CASE("check_two and check_u2 examples") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"a", 2}, {"b", 4}, {"c", 1}}, {});
  const ClassList even4(r, Mode::Real,
                        {RingElement::zero(r), RingElement::generator(r, "a"), RingElement::zero(r),
                         RingElement::generator(r, "b")});
  CHECK(check_two(even4).passed);
  CHECK_FALSE(check_two(ClassList::trivial(r, Mode::Real, 3)).passed);
  CHECK_FALSE(check_two(ClassList(r, Mode::Real, {RingElement::generator(r, "c"), RingElement::zero(r)})).passed);

  std::vector<RingElement> w(8, RingElement::zero(r));
  w[1] = RingElement::generator(r, "a");
  CHECK_FALSE(check_u2(ClassList(r, Mode::Real, w)).passed);
  w[1] = RingElement::zero(r);
  w[3] = RingElement::generator(r, "b");
  CHECK(check_u2(ClassList(r, Mode::Real, w)).passed);
  CHECK_FALSE(check_u2(ClassList::trivial(r, Mode::Real, 6)).passed);
}

TEST_CASE("check_two agrees with check_ms at r = 1") {
  testing::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int m1 = rng.uniform(2, 10);
    std::set<int> support;
    for (int j = 1; j <= m1; ++j)
      if (rng.coin(0.3)) support.insert(j);
    std::vector<Generator> gens;
    for (int j : support) gens.push_back({"w" + std::to_string(j), j});
    const RingPtr r = make_ring(CoefficientDomain::f2(), gens, {});
    std::vector<RingElement> w;
    for (int j = 1; j <= m1; ++j)
      w.push_back(support.count(j) ? RingElement::generator(r, "w" + std::to_string(j)) : RingElement::zero(r));
    const ClassList eta(r, Mode::Real, w);
    REQUIRE(check_two(eta).passed == check_ms(m1, 1, eta).passed);
  }
}

TEST_CASE("spherical_fibration_euler") {
  const RingPtr r = make_ring(CoefficientDomain::f2(), {{"e", 1}, {"a", 1}, {"b", 2}}, {});
  const RingElement e = RingElement::generator(r, "e");
  const ClassList xi = classes(r, {"a", "b"});
  CHECK(spherical_fibration_euler(xi, e) == tensor_line_euler(xi, e));
  CHECK(spherical_fibration_euler(ClassList::trivial(r, Mode::Real, 3), e) == e.pow(3));
  testing::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassList formal = testing::random_classes(r, Mode::Real, rng.uniform(0, 4), rng);
    REQUIRE(spherical_fibration_euler(formal, e) == oracle::euler_expansion(formal, e));
  }
}

TEST_CASE("to_report keeps check details") {
  const RingPtr pt = make_ring(CoefficientDomain::f2(), {}, {});
  const BoundReport rep = to_report(check_ms(4, 1, ClassList::trivial(pt, Mode::Real, 4)));
  CHECK(rep.scenario == "check-ms");
  CHECK_FALSE(rep.bound);
  CHECK_FALSE(rep.failure);
  CHECK(rep.hypotheses.size() == 2);
  CHECK(rep.notes.back().find("l1=2") != std::string::npos);
}
