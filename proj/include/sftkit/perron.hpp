#pragma once

#include <string>
#include <vector>

#include "sftkit/algebraic.hpp"

namespace sftkit {

// det(xI - A), monic.
Poly char_poly(const IntMatrix& a);

// adj(xI - A) as a matrix of integer polynomials, row-major.
std::vector<Poly> adjugate_poly(const IntMatrix& a);

struct PFData {
  AlgebraicReal lambda;
  Poly minpoly;        // the square-free part of char_poly, monic; lambda is a root
  std::vector<Poly> z;  // right eigenvector, entries in Z[x]/(minpoly), positive at lambda

  std::vector<double> z_approx() const;
};

// Throws std::domain_error for reducible input.
PFData pf_data(const IntMatrix& a);

std::string pf_eigenvalue_decimal(const IntMatrix& a, unsigned digits);

// Largest real root of char_poly, which is the spectral radius of any nonnegative matrix.
AlgebraicReal spectral_radius(const IntMatrix& a);

struct MinimalPolynomial {
  Poly poly;
  bool certified = false;  // false: a defining polynomial that may still factor
};
// Splits off x and integer-root factors; what remains is certified irreducible up to degree 3.
MinimalPolynomial minimal_polynomial(const AlgebraicReal& alpha);

// Nonzero spectra as multisets over C coincide; decided by comparing char_poly with x-powers removed.
bool same_nonzero_spectrum(const IntMatrix& a, const IntMatrix& b);
// Nonzero real roots with multiplicity compared one by one through AlgebraicReal equality.
bool same_nonzero_real_spectrum(const IntMatrix& a, const IntMatrix& b);

}  // namespace sftkit
