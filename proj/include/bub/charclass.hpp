#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bub/ring.hpp"

namespace bub {

/// Real bundles carry Stiefel-Whitney classes (w_i in degree i), complex
/// bundles Chern classes (c_i in degree 2i).
enum class Mode { Real, Complex };

inline int unit_degree(Mode m) { return m == Mode::Real ? 1 : 2; }
std::string to_string(Mode m);

/// Total characteristic class 1 + w_1 + ... + w_n of a (possibly formal) bundle.
class ClassList {
 public:
  /// `higher` holds w_1..w_n; w_0 = 1 is implicit. Errors: DegreeMismatch, MixedRings.
  ClassList(RingPtr ring, Mode mode, std::vector<RingElement> higher);

  static ClassList trivial(RingPtr ring, Mode mode, int dimension);

  const RingPtr& ring() const noexcept { return ring_; }
  Mode mode() const noexcept { return mode_; }
  int dimension() const noexcept { return static_cast<int>(classes_.size()) - 1; }
  int unit() const noexcept { return unit_degree(mode_); }

  /// w_i, with w_i = 0 for i > dimension.
  RingElement operator[](int i) const;
  const std::vector<RingElement>& classes() const noexcept { return classes_; }
  const RingElement& top() const { return classes_.back(); }

  friend bool operator==(const ClassList& a, const ClassList& b) {
    return a.mode_ == b.mode_ && a.classes_ == b.classes_;
  }

 private:
  RingPtr ring_;
  Mode mode_;
  std::vector<RingElement> classes_;
};

ClassList lift(const ClassList& c, const RingPtr& target);

/// Polynomial in an adjoined variable T (of degree t_degree) with ring
/// coefficients stored from the leading power down. Coefficients must be
/// homogeneous so that the whole polynomial is homogeneous.
class TPoly {
 public:
  /// Errors: DegreeMismatch when the coefficients are not homogeneous, MixedRings.
  TPoly(RingPtr ring, int t_degree, std::vector<RingElement> descending);

  const RingPtr& ring() const noexcept { return ring_; }
  int t_degree() const noexcept { return t_degree_; }
  /// T-degree; the zero polynomial reports 0.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<RingElement>& descending() const noexcept { return coeffs_; }
  /// Coefficient of T^i (zero outside the range).
  RingElement coeff(int i) const;
  const RingElement& leading() const { return coeffs_.front(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
  bool is_monic() const { return coeffs_.front().is_one(); }

  std::string to_string(std::string_view var = "T") const;

  friend bool operator==(const TPoly& a, const TPoly& b) {
    return a.t_degree_ == b.t_degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  RingPtr ring_;
  int t_degree_;
  std::vector<RingElement> coeffs_;
};

TPoly operator+(const TPoly& a, const TPoly& b);
TPoly operator-(const TPoly& a, const TPoly& b);
TPoly operator*(const TPoly& a, const TPoly& b);

/// Whitney product formula w(a (+) b) = w(a) w(b).
ClassList whitney_sum(const ClassList& a, const ClassList& b);

/// First out_dim+1 terms of w(a)^{-1}.
ClassList whitney_inverse(const ClassList& a, int out_dim);

/// p(T) = T^n + w_1 T^{n-1} + ... + w_n.
TPoly char_poly(const ClassList& xi);

/// Classes of lambda (x) xi for a line bundle with Euler class e: the
/// coefficients of p(T + e) (real) or p(T - e), i.e. of lambda* (x) xi (complex).
ClassList tensor_line_classes(const ClassList& xi, const RingElement& e);

/// Euler class of lambda (x) xi: sum_i e^i w_{n-i}, with (-1)^i in complex mode.
RingElement tensor_line_euler(const ClassList& xi, const RingElement& e);

/// Division by a monic polynomial. Errors: NonMonicDivisor, MixedRings.
std::pair<TPoly, TPoly> poly_divmod(const TPoly& r, const TPoly& q);
bool divides(const TPoly& q, const TPoly& r);

TPoly poly_derivative(const TPoly& q);

/// Horner evaluation at a homogeneous element of degree t_degree.
/// Errors: DegreeMismatch.
RingElement tpoly_eval(const TPoly& q, const RingElement& at);

/// Substitution T -> T + shift, coefficients of the result.
TPoly tpoly_shift(const TPoly& q, const RingElement& shift);

}  // namespace bub
