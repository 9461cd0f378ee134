#include <algorithm>
#include <optional>
#include <stdexcept>

#include "sftkit/equivalence.hpp"
#include "sftkit/normal_form.hpp"
#include "sftkit/perron.hpp"

namespace sftkit {
namespace {

std::optional<PFData> try_pf(const IntMatrix& m) {
  try {
    return pf_data(m);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

bool cone_test(const IntMatrix& t, const PFData& pa, const PFData& pb) {
  if (!equal(pa.lambda, pb.lambda)) return false;
  std::vector<Poly> y(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    Poly acc;
    for (std::size_t j = 0; j < t.cols(); ++j) acc = acc + t(i, j) * pb.z[j];
    y[i] = rem_monic(acc, pb.minpoly);
  }
  // y is parallel to z_A iff every 2x2 minor of [y z_A] vanishes at lambda.
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (sign_at_root(y[i] * pa.z[j] - y[j] * pa.z[i], pb.lambda) != 0) return false;
  return sign_at_root(y[0], pb.lambda) > 0;
}

bool is_unimodular(const IntMatrix& t) {
  if (!t.is_square()) return false;
  Int d = determinant(t);
  return d == 1 || d == -1;
}

IntMatrix combine(const std::vector<IntMatrix>& basis, const IntVector& c, std::size_t r, std::size_t s) {
  IntMatrix t(r, s);
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (c[k] != 0) t = t + scale(basis[k], c[k]);
  return t;
}

}  // namespace

bool intertwiner_preserves_cone(const IntMatrix& t, const IntMatrix& a, const IntMatrix& b) {
  if (t.rows() != a.rows() || t.cols() != b.rows()) return false;
  if (a * t != t * b) return false;
  auto pa = try_pf(a), pb = try_pf(b);
  if (!pa || !pb) return false;
  return cone_test(t, *pa, *pb);
}

IntertwinerSearchResult search_intertwiner(const IntMatrix& a, const IntMatrix& b, const IntertwinerSearchOptions& opts) {
  if (!a.is_square() || !b.is_square()) throw std::invalid_argument("intertwiner search needs square matrices");
  const std::size_t r = a.rows(), s = b.rows();
  const IntVector ua = opts.unit_a.empty() ? ones(r) : opts.unit_a;
  const IntVector ub = opts.unit_b.empty() ? ones(s) : opts.unit_b;
  if (ua.size() != r || ub.size() != s) throw std::invalid_argument("order-unit vectors have the wrong length");

  IntertwinerSearchResult res;
  if (opts.require_unimodular && r != s) {
    res.verdict = Verdict::Unconditional;
    res.reason = "a unimodular T must be square";
    return res;
  }
  const std::vector<IntMatrix> basis = intertwiner_lattice(a, b);
  res.lattice_rank = basis.size();
  const std::size_t n = basis.size();

  std::optional<PFData> pa, pb;
  if (opts.require_cone) {
    pa = try_pf(a);
    pb = try_pf(b);
    if (!pa || !pb) {
      res.verdict = Verdict::Unconditional;
      res.reason = "cone test needs irreducible matrices";
      return res;
    }
    if (!equal(pa->lambda, pb->lambda)) {
      res.verdict = Verdict::Unconditional;
      res.reason = "Perron eigenvalues differ";
      return res;
    }
  }

  // Accepts a candidate and records its verified flags; returns the reason for a rejection.
  auto consider = [&](const IntMatrix& t) -> std::string {
    if (t.is_zero()) return "T = 0";
    const bool uni = is_unimodular(t);
    if (opts.require_unimodular && !uni) return "det T = " + determinant(t).get_str();
    const bool pointed = ua * t == ub;
    if (opts.require_pointed && !pointed) return "not pointed";
    bool cone = false;
    if (opts.require_cone) {
      cone = cone_test(t, *pa, *pb);
      if (!cone) return "T z_B is not a positive multiple of z_A";
    }
    res.witnesses.push_back({t, uni, pointed, cone, opts.unit_a, opts.unit_b});
    return {};
  };

  IntVector c0(n, Int(0));
  IntMatrix kernel(0, n);
  if (opts.require_pointed) {
    if (n == 0) {
      res.verdict = Verdict::Unconditional;
      res.reason = "only T = 0 intertwines";
      return res;
    }
    // Column k of N is (u_A K_k)^T; the pointed condition reads N c = u_B.
    IntMatrix nmat(s, n);
    for (std::size_t k = 0; k < n; ++k) {
      IntVector img = ua * basis[k];
      for (std::size_t j = 0; j < s; ++j) nmat(j, k) = img[j];
    }
    IntegerSolver solver(nmat);
    auto sol = solver.solve(ub);
    if (!sol.rational_consistent) {
      res.verdict = Verdict::Unconditional;
      res.reason = "the pointed system has no rational solution";
      return res;
    }
    if (!sol.integer_solvable) {
      res.verdict = Verdict::Unconditional;
      res.reason = "the pointed system has rational but no integer solutions";
      return res;
    }
    c0 = sol.particular;
    kernel = solver.kernel_basis();
    if (kernel.rows() == 0) {
      res.candidates = 1;
      IntMatrix t = combine(basis, c0, r, s);
      std::string why = consider(t);
      if (why.empty()) {
        res.verdict = Verdict::Found;
      } else {
        res.verdict = Verdict::Unconditional;
        res.reason = "the unique pointed candidate " + t.to_string() + " fails: " + why;
      }
      return res;
    }
  } else {
    if (n == 0) {
      res.verdict = Verdict::Unconditional;
      res.reason = "only T = 0 intertwines";
      return res;
    }
    kernel = IntMatrix::identity(n);
  }

  const std::size_t dims = kernel.rows();
  const long bound = opts.coeff_bound;
  long double total = 1;
  for (std::size_t i = 0; i < dims; ++i) total *= static_cast<long double>(2 * bound + 1);
  const std::uint64_t budget = opts.budget ? opts.budget : default_search_budget();
  if (total > static_cast<long double>(budget)) {
    res.budget_exhausted = true;
    res.verdict = Verdict::Bounded;
    res.reason = "enumeration exceeds the search budget";
    return res;
  }
  std::vector<long> tv(dims, -bound);
  while (true) {
    IntVector c = c0;
    for (std::size_t i = 0; i < dims; ++i)
      if (tv[i] != 0)
        for (std::size_t k = 0; k < n; ++k) c[k] += Int(tv[i]) * kernel(i, k);
    ++res.candidates;
    consider(combine(basis, c, r, s));
    std::size_t i = dims;
    while (i > 0 && tv[i - 1] == bound) tv[--i] = -bound;
    if (i == 0) break;
    ++tv[i - 1];
  }
  std::sort(res.witnesses.begin(), res.witnesses.end(),
            [](const IntertwinerWitness& x, const IntertwinerWitness& y) { return x.T.data() < y.T.data(); });
  res.witnesses.erase(std::unique(res.witnesses.begin(), res.witnesses.end(),
                                  [](const IntertwinerWitness& x, const IntertwinerWitness& y) { return x.T == y.T; }),
                      res.witnesses.end());
  if (!res.witnesses.empty()) {
    res.verdict = Verdict::Found;
  } else {
    res.verdict = Verdict::Bounded;
    res.reason = "no candidate with coefficients in [-" + std::to_string(bound) + ", " + std::to_string(bound) + "]";
  }
  return res;
}

}  // namespace sftkit
