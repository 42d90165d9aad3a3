#include "bub/charclass.hpp"

#include <algorithm>

#include "bub/error.hpp"

namespace bub {

std::string to_string(Mode m) { return m == Mode::Real ? "real" : "complex"; }

// ---------------------------------------------------------------------------
// ClassList

ClassList::ClassList(RingPtr ring, Mode mode, std::vector<RingElement> higher)
    : ring_(std::move(ring)), mode_(mode) {
  classes_.reserve(higher.size() + 1);
  classes_.push_back(RingElement::one(ring_));
  for (std::size_t i = 0; i < higher.size(); ++i) {
    auto& w = higher[i];
    if (w.ring().get() != ring_.get())
      throw Error(ErrorKind::MixedRings, "class " + std::to_string(i + 1) + " belongs to another ring");
    const int want = static_cast<int>(i + 1) * unit_degree(mode_);
    if (!w.is_homogeneous_of(want))
      throw Error(ErrorKind::DegreeMismatch, "class " + std::to_string(i + 1) + " = " + w.to_string() +
                                                 " is not homogeneous of degree " + std::to_string(want))
          .with_item(i);
    classes_.push_back(std::move(w));
  }
}

ClassList ClassList::trivial(RingPtr ring, Mode mode, int dimension) {
  if (dimension < 0) throw Error(ErrorKind::DimensionMismatch, "negative dimension");
  std::vector<RingElement> zeros(static_cast<std::size_t>(dimension), RingElement::zero(ring));
  return ClassList(ring, mode, std::move(zeros));
}

RingElement ClassList::operator[](int i) const {
  if (i < 0 || i > dimension()) return RingElement::zero(ring_);
  return classes_[static_cast<std::size_t>(i)];
}

ClassList lift(const ClassList& c, const RingPtr& target) {
  std::vector<RingElement> higher;
  for (int i = 1; i <= c.dimension(); ++i) higher.push_back(lift(c[i], target));
  return ClassList(target, c.mode(), std::move(higher));
}

// ---------------------------------------------------------------------------
// TPoly

TPoly::TPoly(RingPtr ring, int t_degree, std::vector<RingElement> descending)
    : ring_(std::move(ring)), t_degree_(t_degree), coeffs_(std::move(descending)) {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const RingElement& c) { return !c.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.assign(1, RingElement::zero(ring_));
    return;
  }
  coeffs_.erase(coeffs_.begin(), first);
  std::optional<int> total;
  const int deg = degree();
  for (int k = 0; k <= deg; ++k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.ring().get() != ring_.get()) throw Error(ErrorKind::MixedRings, "coefficient belongs to another ring");
    if (c.is_zero()) continue;
    auto d = c.degree();
    if (!d) throw Error(ErrorKind::DegreeMismatch, "coefficient " + c.to_string() + " is not homogeneous");
    int here = *d + (deg - k) * t_degree_;
    if (total && *total != here)
      throw Error(ErrorKind::DegreeMismatch, "polynomial in T is not homogeneous (degrees " +
                                                 std::to_string(*total) + " and " + std::to_string(here) + ")");
    total = here;
  }
}

RingElement TPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return RingElement::zero(ring_);
  return coeffs_[static_cast<std::size_t>(degree() - i)];
}

std::string TPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    auto c = coeff(i);
    if (c.is_zero()) continue;
    std::string power = i == 0 ? "" : (i == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(i));
    std::string part;
    if (power.empty())
      part = c.to_string();
    else if (c.is_one())
      part = power;
    else if (c.terms().size() == 1)
      part = c.to_string() + "*" + power;
    else
      part = "(" + c.to_string() + ")*" + power;
    if (!out.empty()) out += " + ";
    out += part;
  }
  return out;
}

namespace {

void same_tring(const TPoly& a, const TPoly& b) {
  if (a.ring().get() != b.ring().get()) throw Error(ErrorKind::MixedRings, "polynomials over different rings");
  if (a.t_degree() != b.t_degree()) throw Error(ErrorKind::DegreeMismatch, "T carries different degrees");
}

std::vector<RingElement> ascending(const TPoly& p, int len) {
  std::vector<RingElement> out;
  for (int i = 0; i < len; ++i) out.push_back(p.coeff(i));
  return out;
}

TPoly from_ascending(const RingPtr& ring, int t_degree, std::vector<RingElement> asc) {
  std::reverse(asc.begin(), asc.end());
  if (asc.empty()) asc.push_back(RingElement::zero(ring));
  return TPoly(ring, t_degree, std::move(asc));
}

}  // namespace

TPoly operator+(const TPoly& a, const TPoly& b) {
  same_tring(a, b);
  int len = std::max(a.degree(), b.degree()) + 1;
  auto x = ascending(a, len), y = ascending(b, len);
  for (int i = 0; i < len; ++i) x[i] += y[i];
  return from_ascending(a.ring(), a.t_degree(), std::move(x));
}

TPoly operator-(const TPoly& a, const TPoly& b) {
  same_tring(a, b);
  int len = std::max(a.degree(), b.degree()) + 1;
  auto x = ascending(a, len), y = ascending(b, len);
  for (int i = 0; i < len; ++i) x[i] -= y[i];
  return from_ascending(a.ring(), a.t_degree(), std::move(x));
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  same_tring(a, b);
  std::vector<RingElement> out(static_cast<std::size_t>(a.degree() + b.degree() + 1), RingElement::zero(a.ring()));
  for (int i = 0; i <= a.degree(); ++i) {
    auto ai = a.coeff(i);
    if (ai.is_zero()) continue;
    for (int j = 0; j <= b.degree(); ++j) out[static_cast<std::size_t>(i + j)] += ai * b.coeff(j);
  }
  return from_ascending(a.ring(), a.t_degree(), std::move(out));
}

// ---------------------------------------------------------------------------
// Operations

ClassList whitney_sum(const ClassList& a, const ClassList& b) {
  if (a.ring().get() != b.ring().get()) throw Error(ErrorKind::MixedRings, "bundles over different rings");
  if (a.mode() != b.mode()) throw Error(ErrorKind::MixedRings, "real and complex class lists");
  const int n = a.dimension() + b.dimension();
  std::vector<RingElement> higher;
  for (int k = 1; k <= n; ++k) {
    RingElement acc = RingElement::zero(a.ring());
    for (int i = std::max(0, k - b.dimension()); i <= std::min(k, a.dimension()); ++i) acc += a[i] * b[k - i];
    higher.push_back(std::move(acc));
  }
  return ClassList(a.ring(), a.mode(), std::move(higher));
}

ClassList whitney_inverse(const ClassList& a, int out_dim) {
  if (out_dim < 0) throw Error(ErrorKind::DimensionMismatch, "negative dimension");
  std::vector<RingElement> inv{RingElement::one(a.ring())};
  for (int k = 1; k <= out_dim; ++k) {
    RingElement acc = RingElement::zero(a.ring());
    for (int i = 1; i <= std::min(k, a.dimension()); ++i) acc += a[i] * inv[static_cast<std::size_t>(k - i)];
    inv.push_back(-acc);
  }
  inv.erase(inv.begin());
  return ClassList(a.ring(), a.mode(), std::move(inv));
}

TPoly char_poly(const ClassList& xi) { return TPoly(xi.ring(), xi.unit(), xi.classes()); }

TPoly tpoly_shift(const TPoly& q, const RingElement& shift) {
  if (shift.ring().get() != q.ring().get()) throw Error(ErrorKind::MixedRings, "shift belongs to another ring");
  if (!shift.is_homogeneous_of(q.t_degree()))
    throw Error(ErrorKind::DegreeMismatch, "shift " + shift.to_string() + " is not of degree " +
                                               std::to_string(q.t_degree()));
  const auto& dom = q.ring()->coeffs();
  const int n = q.degree();
  std::vector<RingElement> powers{RingElement::one(q.ring())};
  for (int j = 1; j <= n; ++j) powers.push_back(powers.back() * shift);
  std::vector<RingElement> asc;
  for (int i = 0; i <= n; ++i) {
    RingElement acc = RingElement::zero(q.ring());
    for (int j = i; j <= n; ++j) {
      auto c = q.coeff(j);
      if (c.is_zero()) continue;
      Integer b = dom.binom(j, i);
      if (b == 0) continue;
      acc += (c * powers[static_cast<std::size_t>(j - i)]).scaled(b);
    }
    asc.push_back(std::move(acc));
  }
  return from_ascending(q.ring(), q.t_degree(), std::move(asc));
}

ClassList tensor_line_classes(const ClassList& xi, const RingElement& e) {
  if (e.ring().get() != xi.ring().get()) throw Error(ErrorKind::MixedRings, "line class belongs to another ring");
  if (!e.is_homogeneous_of(xi.unit()))
    throw Error(ErrorKind::DegreeMismatch, "line class " + e.to_string() + " is not of degree " +
                                               std::to_string(xi.unit()));
  const RingElement shift = xi.mode() == Mode::Real ? e : -e;
  TPoly shifted = tpoly_shift(char_poly(xi), shift);
  const int n = xi.dimension();
  std::vector<RingElement> higher;
  for (int k = 1; k <= n; ++k) higher.push_back(shifted.coeff(n - k));
  return ClassList(xi.ring(), xi.mode(), std::move(higher));
}

RingElement tensor_line_euler(const ClassList& xi, const RingElement& e) {
  if (e.ring().get() != xi.ring().get()) throw Error(ErrorKind::MixedRings, "line class belongs to another ring");
  if (!e.is_homogeneous_of(xi.unit()))
    throw Error(ErrorKind::DegreeMismatch, "line class " + e.to_string() + " is not of degree " +
                                               std::to_string(xi.unit()));
  const int n = xi.dimension();
  const RingElement step = xi.mode() == Mode::Real ? e : -e;
  RingElement acc = RingElement::zero(xi.ring());
  RingElement power = RingElement::one(xi.ring());
  for (int i = 0; i <= n; ++i) {
    acc += power * xi[n - i];
    if (i < n) power *= step;
  }
  return acc;
}

std::pair<TPoly, TPoly> poly_divmod(const TPoly& r, const TPoly& q) {
  same_tring(r, q);
  if (!q.is_monic()) throw Error(ErrorKind::NonMonicDivisor, "divisor " + q.to_string() + " is not monic");
  const int dq = q.degree();
  std::vector<RingElement> rem = ascending(r, r.degree() + 1);
  std::vector<RingElement> quot(static_cast<std::size_t>(std::max(0, r.degree() - dq + 1)),
                                RingElement::zero(r.ring()));
  for (int top = r.degree(); top >= dq; --top) {
    RingElement lead = rem[static_cast<std::size_t>(top)];
    if (lead.is_zero()) continue;
    quot[static_cast<std::size_t>(top - dq)] = lead;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(top - dq + j)] -= lead * q.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(std::max(1, std::min(dq, r.degree() + 1))), RingElement::zero(r.ring()));
  return {from_ascending(r.ring(), r.t_degree(), std::move(quot)),
          from_ascending(r.ring(), r.t_degree(), std::move(rem))};
}

bool divides(const TPoly& q, const TPoly& r) { return poly_divmod(r, q).second.is_zero(); }

TPoly poly_derivative(const TPoly& q) {
  std::vector<RingElement> asc;
  for (int i = 1; i <= q.degree(); ++i) asc.push_back(q.coeff(i).scaled(Integer(i)));
  return from_ascending(q.ring(), q.t_degree(), std::move(asc));
}

RingElement tpoly_eval(const TPoly& q, const RingElement& at) {
  if (at.ring().get() != q.ring().get()) throw Error(ErrorKind::MixedRings, "evaluation point in another ring");
  if (!at.is_homogeneous_of(q.t_degree()))
    throw Error(ErrorKind::DegreeMismatch, "evaluation point " + at.to_string() + " is not of degree " +
                                               std::to_string(q.t_degree()));
  RingElement acc = RingElement::zero(q.ring());
  for (const auto& c : q.descending()) {
    acc *= at;
    acc += c;
  }
  return acc;
}

}  // namespace bub
