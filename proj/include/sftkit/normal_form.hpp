#pragma once

#include <optional>

#include "sftkit/matrix.hpp"

namespace sftkit {

struct SmithForm {
  IntMatrix D;
  IntMatrix U;  // unimodular, rows x rows
  IntMatrix V;  // unimodular, cols x cols
  std::vector<Int> invariant_factors;  // length min(rows, cols); zeros last
  std::size_t rank = 0;
};

// U * A * V = D.  Pivot: smallest absolute nonzero entry of the active block, ties broken by
// lexicographic position.
SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows of a.  Zero rows are dropped;
// pivots are positive and entries above a pivot are reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& a);

// Membership of an integer vector in the row lattice given by a Hermite basis.
bool lattice_contains(const IntMatrix& hnf, const IntVector& v);

// Saturated basis (as rows, in Hermite form) of {x in Z^n : M x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

// Integral basis of {X : A X = X B}, each basis element an r x s matrix.  Empty iff only X = 0.
std::vector<IntMatrix> intertwiner_lattice(const IntMatrix& a, const IntMatrix& b);

// Solves M x = b over the integers with the Smith form of M computed once.
class IntegerSolver {
public:
  explicit IntegerSolver(const IntMatrix& m);

  struct Result {
    bool rational_consistent = false;
    bool integer_solvable = false;
    IntVector particular;  // valid when integer_solvable
  };
  Result solve(const IntVector& b) const;

  // Basis of the homogeneous solutions, as rows.
  IntMatrix kernel_basis() const;
  const SmithForm& smith() const { return snf_; }

private:
  SmithForm snf_;
  std::size_t cols_ = 0;
};

}  // namespace sftkit
