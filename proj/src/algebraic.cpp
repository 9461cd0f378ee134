#include "sftkit/algebraic.hpp"

#include <stdexcept>

namespace sftkit {
namespace {

Int pow10(unsigned digits) {
  Int s;
  mpz_ui_pow_ui(s.get_mpz_t(), 10, digits);
  return s;
}

// Round half away from zero of x * scale.
Int round_scaled(const Rat& x, const Int& scale) {
  Rat y = abs(x) * scale + Rat(1, 2);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return x < 0 ? Int(-f) : f;
}

std::string format_scaled(const Int& value, unsigned digits) {
  std::string mag = Int(abs(value)).get_str();
  if (digits > 0) {
    if (mag.size() <= digits) mag.insert(0, digits + 1 - mag.size(), '0');
    mag.insert(mag.size() - digits, ".");
  }
  return (value < 0 ? "-" : "") + mag;
}

}  // namespace

AlgebraicReal::AlgebraicReal(Poly minpoly, Rat lo, Rat hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!(lo_ < hi_)) throw std::invalid_argument("AlgebraicReal: empty interval");
  if (minpoly_.sign_at(lo_) * minpoly_.sign_at(hi_) >= 0)
    throw std::invalid_argument("AlgebraicReal: no sign change across the interval");
}

void AlgebraicReal::refine() {
  Rat mid = (lo_ + hi_) / 2;
  int s = minpoly_.sign_at(mid);
  if (s == 0) {
    // The root is mid itself; keep it interior with non-root endpoints.
    lo_ = (lo_ + mid) / 2;
    hi_ = (mid + hi_) / 2;
  } else if (minpoly_.sign_at(lo_) == s) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void AlgebraicReal::refine_to_width(const Rat& width) {
  while (hi_ - lo_ >= width) refine();
}

std::string AlgebraicReal::to_decimal(unsigned digits) const {
  const Int scale = pow10(digits);
  AlgebraicReal a = *this;
  for (;;) {
    Int rl = round_scaled(a.lo_, scale), rh = round_scaled(a.hi_, scale);
    if (rl == rh) return format_scaled(rl, digits);
    if (a.hi_ - a.lo_ < Rat(1) / scale && rh == rl + 1) {
      Rat boundary = (Rat(rl) + Rat(1, 2)) / scale;
      if (a.minpoly_.sign_at(boundary) == 0) return format_scaled(boundary > 0 ? rh : rl, digits);
    }
    a.refine();
  }
}

double AlgebraicReal::approx() const {
  AlgebraicReal a = *this;
  a.refine_to_width(Rat(1, 1) / Rat(Int(1) << 60));
  return Rat((a.lo_ + a.hi_) / 2).get_d();
}

std::vector<AlgebraicReal> isolate_real_roots(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  Poly s = square_free_part(p);
  std::vector<AlgebraicReal> out;
  if (s.degree() < 1) return out;
  const auto seq = sturm_sequence(s);
  const Rat bound = root_bound(s);

  struct Task {
    Rat lo, hi;
    int count;
  };
  std::vector<Task> stack;
  stack.push_back({-bound, bound, count_roots(seq, -bound, bound)});
  std::vector<std::pair<Rat, Rat>> found;
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    if (t.count == 0) continue;
    if (t.count == 1) {
      found.emplace_back(t.lo, t.hi);
      continue;
    }
    Rat mid = (t.lo + t.hi) / 2;
    for (unsigned j = 3; s.sign_at(mid) == 0; ++j) mid = (t.lo + t.hi) / 2 + (t.hi - t.lo) / Rat(Int(1) << j);
    int left = count_roots(seq, t.lo, mid);
    // Push right first so that the left half is processed first.
    stack.push_back({mid, t.hi, t.count - left});
    stack.push_back({t.lo, mid, left});
  }
  out.reserve(found.size());
  for (auto& [lo, hi] : found) out.emplace_back(s, lo, hi);
  return out;
}

int sign_at_root(const Poly& q, const AlgebraicReal& alpha) {
  if (q.is_zero()) return 0;
  Poly g = gcd(q, alpha.minpoly());
  if (g.degree() >= 1 && g.sign_at(alpha.lo()) * g.sign_at(alpha.hi()) < 0) return 0;
  Poly qs = square_free_part(q);
  const auto seq = sturm_sequence(qs);
  AlgebraicReal a = alpha;
  for (;;) {
    int s = q.sign_at(a.hi());
    if (s != 0 && count_roots(seq, a.lo(), a.hi()) == 0) return s;
    a.refine();
  }
}

bool equal(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (a.hi() <= b.lo() || b.hi() <= a.lo()) return false;
  Poly g = gcd(a.minpoly(), b.minpoly());
  if (g.degree() < 1) return false;
  if (sign_at_root(g, a) != 0 || sign_at_root(g, b) != 0) return false;
  const auto seq = sturm_sequence(g);
  AlgebraicReal x = a, y = b;
  for (;;) {
    if (x.hi() <= y.lo() || y.hi() <= x.lo()) return false;
    Rat lo = x.lo() < y.lo() ? x.lo() : y.lo();
    Rat hi = x.hi() > y.hi() ? x.hi() : y.hi();
    if (count_roots(seq, lo, hi) == 1) return true;
    x.refine();
    y.refine();
  }
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (equal(a, b)) return 0;
  AlgebraicReal x = a, y = b;
  for (;;) {
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    x.refine();
    y.refine();
  }
}

std::vector<RootWithMultiplicity> nonzero_real_roots(const Poly& p) {
  Poly q = strip_x_powers(p);
  std::vector<RootWithMultiplicity> out;
  for (auto& r : isolate_real_roots(q)) {
    unsigned m = 0;
    Poly d = q;
    while (sign_at_root(d, r) == 0) {
      ++m;
      d = d.derivative();
    }
    out.push_back({r, m});
  }
  return out;
}

}  // namespace sftkit
