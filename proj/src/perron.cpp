#include "sftkit/perron.hpp"

#include <stdexcept>

#include "sftkit/graph.hpp"

namespace sftkit {
namespace {

// Faddeev-LeVerrier: M_1 = I, M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k.
struct Leverrier {
  std::vector<Int> c;           // c[0] = 1, char_poly = sum c[k] x^{n-k}
  std::vector<IntMatrix> m;     // m[k-1] = M_k, k = 1..n
};

Leverrier leverrier(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  Leverrier out;
  out.c.assign(n + 1, Int(0));
  out.c[0] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      mk = a * out.m.back();
      for (std::size_t i = 0; i < n; ++i) mk(i, i) += out.c[k - 1];
    }
    out.m.push_back(mk);
    Int t = trace(a * mk);
    Int ck = -t;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
    out.c[k] = ck;
  }
  return out;
}

}  // namespace

Poly char_poly(const IntMatrix& a) {
  auto lv = leverrier(a);
  const std::size_t n = a.rows();
  std::vector<Int> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) coeffs[n - k] = lv.c[k];
  return Poly(std::move(coeffs));
}

std::vector<Poly> adjugate_poly(const IntMatrix& a) {
  auto lv = leverrier(a);
  const std::size_t n = a.rows();
  std::vector<Poly> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> coeffs(n);
      // adj(xI - A) = sum_{k=1}^{n} M_k x^{n-k}
      for (std::size_t k = 1; k <= n; ++k) coeffs[n - k] = lv.m[k - 1](i, j);
      out[i * n + j] = Poly(std::move(coeffs));
    }
  return out;
}

std::vector<double> PFData::z_approx() const {
  std::vector<double> out;
  const double l = lambda.approx();
  for (const auto& p : z) {
    double acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * l + it->get_d();
    out.push_back(acc);
  }
  return out;
}

PFData pf_data(const IntMatrix& a) {
  if (!is_irreducible(a)) throw std::domain_error("Perron-Frobenius data requires an irreducible matrix");
  const std::size_t n = a.rows();
  Poly cp = char_poly(a);
  auto roots = isolate_real_roots(cp);
  if (roots.empty()) throw std::logic_error("irreducible matrix without a real eigenvalue");
  AlgebraicReal lambda = roots.back();
  Poly m = lambda.minpoly();
  if (m.leading() != 1) throw std::logic_error("square-free part of a monic polynomial must be monic");

  auto adj = adjugate_poly(a);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Poly> col(n);
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = rem_monic(adj[i * n + j], m);
      signs[i] = sign_at_root(col[i], lambda);
    }
    int s = signs[0];
    bool uniform = s != 0;
    for (int t : signs) uniform = uniform && t == s;
    if (!uniform) continue;
    if (s < 0)
      for (auto& p : col) p = Int(-1) * p;
    // A z = x z modulo the minimal polynomial.
    for (std::size_t i = 0; i < n; ++i) {
      Poly lhs;
      for (std::size_t k = 0; k < n; ++k) lhs = lhs + a(i, k) * col[k];
      Poly diff = rem_monic(lhs - Poly::x() * col[i], m);
      if (!diff.is_zero()) throw std::logic_error("eigenvector check failed");
    }
    return PFData{lambda, m, col};
  }
  throw std::logic_error("no adjugate column is certified positive");
}

std::string pf_eigenvalue_decimal(const IntMatrix& a, unsigned digits) {
  return pf_data(a).lambda.to_decimal(digits);
}

AlgebraicReal spectral_radius(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw std::invalid_argument("spectral_radius: square matrix required");
  if (!is_nonnegative(a)) throw std::invalid_argument("spectral_radius: nonnegative matrix required");
  // rho(A) is itself an eigenvalue and bounds every real one.
  return isolate_real_roots(char_poly(a)).back();
}

MinimalPolynomial minimal_polynomial(const AlgebraicReal& alpha) {
  if (sign_at_root(Poly::x(), alpha) == 0) return {Poly::x(), true};
  Poly p = strip_x_powers(square_free_part(alpha.minpoly()));
  auto roots = isolate_real_roots(p);
  for (auto r : roots) {
    r.refine_to_width(Rat(1, 4));
    Int n;
    mpz_cdiv_q(n.get_mpz_t(), r.lo().get_num_mpz_t(), r.lo().get_den_mpz_t());
    if (n >= r.hi() || p.sign_at(Rat(n)) != 0) continue;
    const Poly factor(IntVector{-n, Int(1)});
    if (sign_at_root(factor, alpha) == 0) return {factor, true};
    p = exact_quotient_primitive(p, factor);
  }
  // Without rational roots a polynomial of degree <= 3 is irreducible.
  return {p, p.degree() <= 3};
}

bool same_nonzero_spectrum(const IntMatrix& a, const IntMatrix& b) {
  return strip_x_powers(char_poly(a)) == strip_x_powers(char_poly(b));
}

bool same_nonzero_real_spectrum(const IntMatrix& a, const IntMatrix& b) {
  auto ra = nonzero_real_roots(char_poly(a));
  auto rb = nonzero_real_roots(char_poly(b));
  if (ra.size() != rb.size()) return false;
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (ra[i].multiplicity != rb[i].multiplicity || !equal(ra[i].root, rb[i].root)) return false;
  return true;
}

}  // namespace sftkit
