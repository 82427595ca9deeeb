#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gfa/numeric.hpp"

namespace gfa {

// Dense univariate polynomial in t over an exact scalar ring.
// coeffs()[n] is the coefficient of t^n; the vector is empty for the zero
// polynomial and otherwise ends in a nonzero entry.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& constant) {
    if (constant != 0) c_.push_back(constant);
  }
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}

  static Polynomial from_coeffs(std::vector<Scalar> coeffs) {
    Polynomial p;
    p.c_ = std::move(coeffs);
    p.strip();
    return p;
  }

  static Polynomial monomial(const Scalar& coeff, int power) {
    Polynomial p;
    if (coeff != 0) {
      p.c_.assign(static_cast<std::size_t>(power) + 1, Scalar(0));
      p.c_.back() = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Scalar coeff(int n) const {
    if (n < 0 || n >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[static_cast<std::size_t>(n)];
  }
  const Scalar& leading() const { return c_.back(); }  // pre: nonzero

  // Horner evaluation.
  Scalar operator()(const Scalar& v) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * v + *it;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    strip();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    strip();
    return *this;
  }
  Polynomial& operator*=(const Scalar& v) {
    if (v == 0) {
      c_.clear();
      return *this;
    }
    for (auto& c : c_) c *= v;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return from_coeffs(std::move(out));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& v) { return a *= v; }
  friend Polynomial operator*(const Scalar& v, Polynomial a) { return a *= v; }

  bool operator==(const Polynomial&) const = default;

 private:
  void strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

using PolyMat = Eigen::Matrix<IntPoly, Eigen::Dynamic, Eigen::Dynamic>;

// GCD of the coefficients, >= 0; content(0) = 0.
Int content(const IntPoly& p);

// p divided by its content; zero stays zero, sign of the leading
// coefficient is preserved.
IntPoly primitive_part(const IntPoly& p);

// Quotient a/c with every coefficient divisible by c.
IntPoly divexact_scalar(const IntPoly& a, const Int& c);

// Quotient a/b when b divides a exactly over the integers, nullopt
// otherwise (including when only rational division would succeed).
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);

// As above but a failed division is a logic error.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, all over Z.
// pre: b nonzero, deg a >= deg b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient, via the subresultant
// pseudo-remainder sequence on primitive parts. pre: not both zero.
IntPoly gcd_primitive(const IntPoly& a, const IntPoly& b);

// Ascending-power display with explicit signs, e.g. "1 - 2*t + 3*t^2".
std::string to_string(const IntPoly& p);

}  // namespace gfa
