#include "sftkit/polynomial.hpp"

#include <stdexcept>

namespace sftkit {
namespace {

using QPoly = std::vector<Rat>;

void trim_q(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_q(const Poly& p) { return QPoly(p.coeffs().begin(), p.coeffs().end()); }

// Remainder of a by b over Q.
QPoly rem_q(QPoly a, const QPoly& b) {
  trim_q(a);
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim_q(a);
  }
  return a;
}

QPoly quot_q(QPoly a, const QPoly& b) {
  trim_q(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - db, Rat(0));
  while (!a.empty() && a.size() - 1 >= db) {
    Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim_q(a);
  }
  return q;
}

// Scale by a positive rational so the result is a primitive integer polynomial; the sign of
// every value is preserved.
Poly positive_integral(const QPoly& p) {
  Int l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  out.reserve(p.size());
  Int g = 0;
  for (const auto& c : p) {
    Int v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(out));
}

}  // namespace

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

Poly Poly::constant(const Int& c) { return Poly(std::vector<Int>{c}); }
Poly Poly::x() { return Poly({0, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

int Poly::sign_at(const Rat& x) const { return sgn(eval(x)); }

Poly Poly::derivative() const {
  std::vector<Int> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return Poly(std::move(d));
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs(c);
    if (s.empty())
      s += (c < 0) ? "-" : "";
    else
      s += (c < 0) ? " - " : " + ";
    const bool unit = (mag == 1);
    if (i == 0 || !unit) s += mag.get_str();
    if (i > 0) {
      if (!unit) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Int> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Int> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Poly(std::move(c));
}

Poly operator*(const Int& k, const Poly& a) {
  std::vector<Int> c(a.coeffs());
  for (auto& x : c) x *= k;
  return Poly(std::move(c));
}

Poly primitive_part(const Poly& p) {
  if (p.is_zero()) return p;
  Int g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  std::vector<Int> c(p.coeffs());
  if (p.leading() < 0) g = -g;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return Poly(std::move(c));
}

Poly gcd(const Poly& a, const Poly& b) {
  QPoly x = to_q(a), y = to_q(b);
  while (!y.empty()) {
    QPoly r = rem_q(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.empty()) return Poly();
  return primitive_part(positive_integral(x));
}

Poly exact_quotient_primitive(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  QPoly q = quot_q(to_q(a), to_q(b));
  return primitive_part(positive_integral(q));
}

Poly square_free_part(const Poly& p) {
  if (p.degree() <= 0) return primitive_part(p);
  Poly g = gcd(p, p.derivative());
  return exact_quotient_primitive(p, g);
}

Poly rem_monic(const Poly& a, const Poly& m) {
  if (m.is_zero() || abs(m.leading()) != 1) throw std::invalid_argument("rem_monic: leading coefficient must be +-1");
  std::vector<Int> r(a.coeffs());
  const std::size_t dm = static_cast<std::size_t>(m.degree());
  while (r.size() > dm) {
    Int f = r.back() * m.leading();
    const std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) r[shift + i] -= f * m.coeffs()[i];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return Poly(std::move(r));
}

unsigned x_adic_valuation(const Poly& p) {
  if (p.is_zero()) throw std::invalid_argument("valuation of the zero polynomial");
  unsigned k = 0;
  while (p.coeffs()[k] == 0) ++k;
  return k;
}

Poly strip_x_powers(const Poly& p) {
  if (p.is_zero()) return p;
  unsigned k = x_adic_valuation(p);
  return Poly(std::vector<Int>(p.coeffs().begin() + k, p.coeffs().end()));
}

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    QPoly r = rem_q(to_q(seq[seq.size() - 2]), to_q(seq.back()));
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(positive_integral(r));
  }
  return seq;
}

int sign_variations(const std::vector<Poly>& seq, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const std::vector<Poly>& seq, const Rat& lo, const Rat& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

Rat root_bound(const Poly& p) {
  if (p.degree() < 1) return Rat(1);
  Rat best = 0;
  Rat lead = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Rat r = Rat(abs(p.coeffs()[static_cast<std::size_t>(i)])) / lead;
    if (r > best) best = r;
  }
  return best + 1;
}

}  // namespace sftkit
