#include "sftkit/delta.hpp"

#include <set>
#include <stdexcept>

#include "sftkit/graph.hpp"
#include "sftkit/perron.hpp"

namespace sftkit {
namespace {

Rat frac(const Rat& x) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat out(r, x.get_den());
  out.canonicalize();
  return out;
}

// Denominator supported on the primes of d.
bool in_localization(const Rat& c, const Int& d) {
  Int den = c.get_den();
  while (den != 1) {
    Int g = gcd(den, d);
    if (g == 1) return false;
    den /= g;
  }
  return true;
}

void require_invertible(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("square matrix required");
  if (determinant(a) == 0) throw std::domain_error("Delta_A needs det A != 0");
}

}  // namespace

DeltaMembership delta_contains(const IntMatrix& a, const RatVector& u) {
  require_invertible(a);
  if (u.size() != a.rows()) throw std::invalid_argument("delta_contains: vector length does not match the matrix");
  RatMatrix q = to_rational(a);
  RatVector state(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) state[i] = frac(u[i]);
  std::set<RatVector> seen;
  DeltaMembership out;
  for (unsigned long k = 0;; ++k) {
    bool zero = true;
    for (const auto& x : state) zero = zero && x == 0;
    out.states = k + 1;
    if (zero) {
      out.contained = true;
      out.k = k;
      return out;
    }
    if (!seen.insert(state).second) return out;
    // frac(u A^{k+1}) = frac(frac(u A^k) A) since A is integral.
    state = state * q;
    for (auto& x : state) x = frac(x);
  }
}

DeltaClaimReport delta_claim_verify(const IntMatrix& a, const DeltaClaim& claim, unsigned levels) {
  require_invertible(a);
  const std::size_t r = a.rows();
  if (claim.d < 2) throw std::invalid_argument("delta claim: d must be at least 2");
  std::vector<IntVector> basis = claim.w;
  basis.insert(basis.end(), claim.free_part.begin(), claim.free_part.end());
  for (const auto& b : basis)
    if (b.size() != r) throw std::invalid_argument("delta claim: vector length does not match the matrix");
  RatMatrix brows(basis.size(), r);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < r; ++j) brows(i, j) = basis[i][j];
  if (rank(brows) != basis.size()) throw std::invalid_argument("delta claim: vectors are linearly dependent");

  if (!is_nonnegative(a)) throw std::invalid_argument("delta claim: nonnegative matrix required");
  RatMatrix inv = inverse(to_rational(a));
  RatMatrix level = RatMatrix::identity(r);
  DeltaClaimReport rep;
  Rat dk = 1;
  for (unsigned k = 0; k <= levels; ++k) {
    if (k > 0) {
      level = level * inv;
      dk *= Rat(claim.d);
    }
    for (std::size_t i = 0; i < r; ++i) {
      auto rc = row_coordinates(brows, level.row(i));
      bool inside = rc.in_span;
      for (std::size_t j = 0; inside && j < rc.coords.size(); ++j) {
        if (j < claim.w.size())
          inside = in_localization(rc.coords[j], claim.d);
        else
          inside = rc.coords[j].get_den() == 1;
      }
      if (!inside) {
        rep.failing_level = k;
        rep.levels_checked = k;
        rep.detail = "row " + std::to_string(i + 1) + " of A^-" + std::to_string(k) + " = " +
                     vector_to_string(level.row(i)) + " is outside the claimed group";
        return rep;
      }
    }
    for (const auto& w : claim.w) {
      RatVector scaled = to_rational(w);
      for (auto& x : scaled) x /= dk;
      if (!delta_contains(a, scaled).contained) {
        rep.failing_level = k;
        rep.levels_checked = k;
        rep.detail = vector_to_string(scaled) + " is claimed but not in Delta_A";
        return rep;
      }
    }
  }
  // Integral free vectors are in Z^r, which always lies in Delta_A.
  rep.ok = true;
  rep.levels_checked = levels;
  return rep;
}

ConeResult cone_contains(const DimElement& a, unsigned long bound) {
  ConeResult res;
  const GroupRef& g = a.group();
  IntVector v = a.v();
  for (unsigned long l = 0; l <= bound; ++l) {
    bool nonneg = true;
    for (const auto& x : v) nonneg = nonneg && x >= 0;
    if (nonneg) {
      res.verdict = ConeVerdict::In;
      res.stage = ConeStage::PowerWitness;
      res.witness_power = l;
      return res;
    }
    if (l < bound) v = v * g->matrix();
  }
  if (a.is_zero()) {
    res.verdict = ConeVerdict::In;
    res.stage = ConeStage::ZeroClass;
    return res;
  }
  if (is_primitive(g->matrix())) {
    // [v, k] has the same sign against z as v A^{-k}, since z is an eigenvector for lambda > 0.
    // A nonnegative representative with v . z = 0 would be zero, so sign <= 0 means outside.
    PFData pf = pf_data(g->matrix());
    Poly dot;
    for (std::size_t i = 0; i < a.v().size(); ++i) dot = dot + a.v()[i] * pf.z[i];
    res.pf_sign = sign_at_root(rem_monic(dot, pf.minpoly), pf.lambda);
    res.stage = ConeStage::PerronSign;
    res.verdict = res.pf_sign > 0 ? ConeVerdict::In : ConeVerdict::Out;
    return res;
  }
  res.bound = bound;
  return res;
}

const char* to_string(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::In: return "IN";
    case ConeVerdict::Out: return "OUT";
    case ConeVerdict::Undecided: return "UNDECIDED";
  }
  return "?";
}

const char* to_string(ConeStage s) {
  switch (s) {
    case ConeStage::PowerWitness: return "power-witness";
    case ConeStage::ZeroClass: return "zero-class";
    case ConeStage::PerronSign: return "perron-sign";
    case ConeStage::None: return "none";
  }
  return "?";
}

}  // namespace sftkit
