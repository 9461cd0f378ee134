#include "sftkit/dimension_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace sftkit {

DimensionGroup::DimensionGroup(IntMatrix a, std::string id)
    : a_(std::move(a)), id_(std::move(id)), det_(determinant(a_)), left_solver_(a_.transpose()) {
  const std::size_t cached = 2 * a_.rows() + 8;
  powers_.push_back(IntMatrix::identity(a_.rows()));
  for (std::size_t i = 1; i <= cached; ++i) powers_.push_back(powers_.back() * a_);
  if (det_ != 0) {
    inverse_ = inverse(to_rational(a_));
    adjugate_ = IntMatrix(a_.rows(), a_.cols());
    for (std::size_t i = 0; i < a_.rows(); ++i)
      for (std::size_t j = 0; j < a_.cols(); ++j) {
        const Rat x = inverse_(i, j) * det_;
        adjugate_(i, j) = x.get_num();
      }
  }
}

std::shared_ptr<const DimensionGroup> DimensionGroup::create(IntMatrix a, std::string id) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("dimension group: nonempty square matrix required");
  if (!is_nonnegative(a)) throw std::invalid_argument("dimension group: nonnegative matrix required");
  return std::shared_ptr<const DimensionGroup>(new DimensionGroup(std::move(a), std::move(id)));
}

IntVector DimensionGroup::apply_power(const IntVector& v, unsigned long n) const {
  if (n == 0) return v;
  if (n < powers_.size()) return v * powers_[n];
  IntVector w = v * powers_.back();
  for (unsigned long i = powers_.size() - 1; i < n; ++i) w = w * a_;
  return w;
}

std::optional<IntVector> DimensionGroup::pull_back(const IntVector& v) const {
  if (det_ != 0) {
    // The unique rational preimage is v adj(A) / det A.
    IntVector w = v * adjugate_;
    for (auto& x : w) {
      if (!mpz_divisible_p(x.get_mpz_t(), det_.get_mpz_t())) return std::nullopt;
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), det_.get_mpz_t());
    }
    return w;
  }
  auto res = left_solver_.solve(v);
  if (!res.integer_solvable) return std::nullopt;
  return res.particular;
}

RatMatrix DimensionGroup::inverse_power(unsigned long k) const {
  if (det_ == 0) throw std::domain_error("matrix is singular");
  return power(inverse_, k);
}

DimElement::DimElement(GroupRef group, IntVector v, unsigned long k)
    : group_(std::move(group)), v_(std::move(v)), k_(k) {
  if (!group_) throw std::invalid_argument("DimElement without a group");
  if (v_.size() != group_->dim()) throw std::invalid_argument("DimElement: vector length does not match the matrix");
  while (k_ > 0) {
    auto w = group_->pull_back(v_);
    if (!w) break;
    v_ = std::move(*w);
    --k_;
  }
}

bool DimElement::is_zero() const {
  IntVector w = group_->apply_power(v_, group_->dim());
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

namespace {
void same_group(const DimElement& a, const DimElement& b) {
  if (a.group() != b.group() && a.group()->matrix() != b.group()->matrix())
    throw std::invalid_argument("dimension group elements over different matrices");
}
}  // namespace

DimElement dg_add(const DimElement& a, const DimElement& b) {
  same_group(a, b);
  // [v,k] + [w,k'] = [v A^{k'} + w A^k, k + k']; the aligned form below is the same class at
  // stage max(k, k').
  const unsigned long top = std::max(a.k(), b.k());
  IntVector x = a.group()->apply_power(a.v(), top - a.k());
  IntVector y = a.group()->apply_power(b.v(), top - b.k());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return DimElement(a.group(), std::move(x), top);
}

DimElement dg_neg(const DimElement& a) {
  IntVector v = a.v();
  for (auto& x : v) x = -x;
  return DimElement(DimElement::Canonical{}, a.group(), std::move(v), a.k());
}

bool dg_eq(const DimElement& a, const DimElement& b) {
  same_group(a, b);
  // For invertible A the canonical representative is unique.
  if (a.group()->det() != 0) return a.k() == b.k() && a.v() == b.v();
  const unsigned long m = std::max(a.k(), b.k()) + a.group()->dim();
  return a.group()->apply_power(a.v(), m - a.k()) == a.group()->apply_power(b.v(), m - b.k());
}

DimElement dg_shift(const DimElement& a, long n) {
  // a is canonical, so [v A^n, k] = [v A^(n-j), k-j] with j = min(n, k) is canonical as well, and
  // [v, k+m] is canonical whenever k > 0.
  if (n >= 0) {
    const auto j = std::min(static_cast<unsigned long>(n), a.k());
    return DimElement(DimElement::Canonical{}, a.group(), a.group()->apply_power(a.v(), n - j), a.k() - j);
  }
  if (a.k() > 0) return DimElement(DimElement::Canonical{}, a.group(), a.v(), a.k() + static_cast<unsigned long>(-n));
  return DimElement(a.group(), a.v(), static_cast<unsigned long>(-n));
}

DimElement order_unit(const GroupRef& group) { return DimElement(group, ones(group->dim()), 0); }

RatVector embed_invertible(const DimElement& a) {
  return to_rational(a.v()) * a.group()->inverse_power(a.k());
}

DimElement dg_map(const DimElement& a, const IntMatrix& r, const GroupRef& target) {
  if (r.rows() != a.group()->dim() || r.cols() != target->dim())
    throw std::invalid_argument("dg_map: intertwiner has the wrong shape");
  return DimElement(target, a.v() * r, a.k());
}

TalentedElement::TalentedElement(GroupRef group, IntVector v, unsigned long k)
    : group_(std::move(group)), v_(std::move(v)), k_(k) {
  if (!group_) throw std::invalid_argument("TalentedElement without a group");
  if (v_.size() != group_->dim()) throw std::invalid_argument("TalentedElement: vector length does not match the matrix");
  for (const auto& x : v_)
    if (x < 0) throw std::invalid_argument("TalentedElement: negative coefficient");
  const IntMatrix& a = group_->matrix();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    bool sink = true;
    for (std::size_t j = 0; j < a.cols(); ++j) sink = sink && a(i, j) == 0;
    if (sink) throw std::invalid_argument("talented monoid arithmetic is limited to graphs without sinks");
  }
}

TalentedElement tm_add(const TalentedElement& a, const TalentedElement& b) {
  if (a.group()->matrix() != b.group()->matrix()) throw std::invalid_argument("talented monoid elements over different graphs");
  const unsigned long top = std::max(a.k(), b.k());
  IntVector x = a.group()->apply_power(a.v(), top - a.k());
  IntVector y = a.group()->apply_power(b.v(), top - b.k());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return TalentedElement(a.group(), std::move(x), top);
}

bool tm_eq(const TalentedElement& a, const TalentedElement& b) { return dg_eq(a.cls(), b.cls()); }

TalentedElement tm_shift(const TalentedElement& a, long n) {
  const long target = static_cast<long>(a.k()) + n;
  if (target >= 0) return TalentedElement(a.group(), a.v(), static_cast<unsigned long>(target));
  // v(i) at a negative time is v A^{-i} at time 0.
  return TalentedElement(a.group(), a.group()->apply_power(a.v(), static_cast<unsigned long>(-target)), 0);
}

}  // namespace sftkit
