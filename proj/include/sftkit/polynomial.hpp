#pragma once

#include <string>
#include <vector>

#include "sftkit/matrix.hpp"

namespace sftkit {

// Integer polynomial, coefficients stored constant term first, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Int> coeffs);
  Poly(std::initializer_list<long> coeffs);
  static Poly constant(const Int& c);
  static Poly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
  bool is_zero() const { return c_.empty(); }
  const Int& leading() const { return c_.back(); }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  const std::vector<Int>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;
  Poly derivative() const;

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }

  // "x^3 - x^2 - 1"
  std::string to_string() const;

private:
  void trim();
  std::vector<Int> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Int& c, const Poly& a);

// Content removed, leading coefficient made positive.  Zero maps to zero.
Poly primitive_part(const Poly& p);
// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly square_free_part(const Poly& p);
// Exact quotient a / b over Q, scaled to a primitive polynomial.  Requires b | a over Q.
Poly exact_quotient_primitive(const Poly& a, const Poly& b);
// Remainder of a modulo a polynomial with leading coefficient +-1.
Poly rem_monic(const Poly& a, const Poly& m);
// Largest k with x^k | p; p nonzero.
unsigned x_adic_valuation(const Poly& p);
Poly strip_x_powers(const Poly& p);

// Sturm chain p, p', -rem(...), each scaled by a positive constant to stay integral.
std::vector<Poly> sturm_sequence(const Poly& p);
int sign_variations(const std::vector<Poly>& seq, const Rat& x);
// Number of distinct real roots in (lo, hi] for square-free p.
int count_roots(const std::vector<Poly>& seq, const Rat& lo, const Rat& hi);

// Cauchy bound: every real root r satisfies |r| < bound.
Rat root_bound(const Poly& p);

}  // namespace sftkit
