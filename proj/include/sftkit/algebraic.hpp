#pragma once

#include <string>
#include <vector>

#include "sftkit/polynomial.hpp"

namespace sftkit {

// A real root of a square-free integer polynomial, isolated by an open rational interval whose
// endpoints are not roots.
class AlgebraicReal {
public:
  AlgebraicReal(Poly minpoly, Rat lo, Rat hi);

  const Poly& minpoly() const { return minpoly_; }
  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }

  // Halves the isolating interval.
  void refine();
  void refine_to_width(const Rat& width);

  // Correctly rounded (half away from zero) decimal with the given number of fractional digits.
  std::string to_decimal(unsigned digits) const;
  double approx() const;

private:
  Poly minpoly_;
  Rat lo_, hi_;
};

// Distinct real roots in ascending order, isolated against the square-free part of p.
std::vector<AlgebraicReal> isolate_real_roots(const Poly& p);

int sign_at_root(const Poly& q, const AlgebraicReal& alpha);

bool equal(const AlgebraicReal& a, const AlgebraicReal& b);
// -1, 0, +1
int compare(const AlgebraicReal& a, const AlgebraicReal& b);

struct RootWithMultiplicity {
  AlgebraicReal root;
  unsigned multiplicity;
};
// Nonzero real roots of p with multiplicities, ascending.
std::vector<RootWithMultiplicity> nonzero_real_roots(const Poly& p);

}  // namespace sftkit
