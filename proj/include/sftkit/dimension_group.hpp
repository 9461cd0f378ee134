#pragma once

#include <memory>
#include <optional>
#include <string>

#include "sftkit/normal_form.hpp"

namespace sftkit {

// The stationary direct limit G_A = Z^r x N / ~ of a fixed square nonnegative matrix, with the
// data needed to canonicalize classes (Smith form of A^T for solving w A = v).
class DimensionGroup {
public:
  // Throws std::invalid_argument unless the matrix is square and nonnegative.
  static std::shared_ptr<const DimensionGroup> create(IntMatrix a, std::string id = {});

  const IntMatrix& matrix() const { return a_; }
  const std::string& id() const { return id_; }
  std::size_t dim() const { return a_.rows(); }
  const Int& det() const { return det_; }

  // v * A^n, using cached powers.
  IntVector apply_power(const IntVector& v, unsigned long n) const;
  // Some integer w with w A = v, or nullopt.
  std::optional<IntVector> pull_back(const IntVector& v) const;
  // A^{-k} over Q; throws std::domain_error for singular A.
  RatMatrix inverse_power(unsigned long k) const;

private:
  DimensionGroup(IntMatrix a, std::string id);
  IntMatrix a_;
  std::string id_;
  Int det_;
  IntegerSolver left_solver_;
  std::vector<IntMatrix> powers_;  // A^0 .. A^{2r+8}; immutable after construction
  RatMatrix inverse_;
  IntMatrix adjugate_;  // det A * A^{-1}, when det A != 0
};

using GroupRef = std::shared_ptr<const DimensionGroup>;

// A class [v, k] in G_A, kept canonical: while k > 0 and v = w A with w integral, (v, k) becomes
// (w, k - 1).
class DimElement {
public:
  DimElement(GroupRef group, IntVector v, unsigned long k);

  const GroupRef& group() const { return group_; }
  const IntVector& v() const { return v_; }
  unsigned long k() const { return k_; }
  bool is_zero() const;

private:
  struct Canonical {};
  // (v, k) already canonical; skips the pull-back loop.
  DimElement(Canonical, GroupRef group, IntVector v, unsigned long k)
      : group_(std::move(group)), v_(std::move(v)), k_(k) {}
  friend DimElement dg_neg(const DimElement& a);
  friend DimElement dg_shift(const DimElement& a, long n);

  GroupRef group_;
  IntVector v_;
  unsigned long k_;
};

DimElement dg_add(const DimElement& a, const DimElement& b);
DimElement dg_neg(const DimElement& a);
bool dg_eq(const DimElement& a, const DimElement& b);
// theta_A^n.  For n >= 0 this is [v A^n, k]; for n < 0 it is [v, k - n].
DimElement dg_shift(const DimElement& a, long n);
DimElement order_unit(const GroupRef& group);
// v A^{-k}; throws std::domain_error when det A = 0.
RatVector embed_invertible(const DimElement& a);
// [v R, k] in G_B for an intertwiner with A R = R B (not checked here).
DimElement dg_map(const DimElement& a, const IntMatrix& r, const GroupRef& target);

// Element of the talented monoid: sum_i v_i * vertex_i(k), with v nonnegative.  Requires a graph
// without sinks.
class TalentedElement {
public:
  // Throws std::invalid_argument for negative entries or a matrix with a zero row (a sink).
  TalentedElement(GroupRef group, IntVector v, unsigned long k);
  const GroupRef& group() const { return group_; }
  const IntVector& v() const { return v_; }
  unsigned long k() const { return k_; }
  DimElement cls() const { return DimElement(group_, v_, k_); }

private:
  GroupRef group_;
  IntVector v_;
  unsigned long k_;
};

TalentedElement tm_add(const TalentedElement& a, const TalentedElement& b);
bool tm_eq(const TalentedElement& a, const TalentedElement& b);
// The monoid action ^n v(i) = v(i + n).  Equal to dg_shift(., -n) on classes.
TalentedElement tm_shift(const TalentedElement& a, long n);

}  // namespace sftkit
