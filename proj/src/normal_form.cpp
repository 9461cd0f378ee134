#include "sftkit/normal_form.hpp"

#include <utility>

namespace sftkit {
namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst -= q * row_src
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= q * m(src, j);
}

void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) -= q * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);
  const std::size_t steps = std::min(m, n);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool block_zero = false;
    for (;;) {
      std::size_t pi = m, pj = n;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          Int mag = abs(d(i, j));
          if (pi == m || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) {
        block_zero = true;
        break;
      }
      swap_rows(d, t, pi);
      swap_rows(u, t, pi);
      swap_cols(d, t, pj);
      swap_cols(v, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        sub_row(d, i, t, q);
        sub_row(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        sub_col(d, j, t, q);
        sub_col(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            for (std::size_t c = 0; c < n; ++c) d(t, c) += d(i, c);
            for (std::size_t c = 0; c < m; ++c) u(t, c) += u(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (block_zero) break;
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) d(t, c) = -d(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
  SmithForm out;
  out.rank = t;
  out.invariant_factors.resize(steps);
  for (std::size_t i = 0; i < steps; ++i) out.invariant_factors[i] = d(i, i);
  out.D = std::move(d);
  out.U = std::move(u);
  out.V = std::move(v);
  return out;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t m = h.rows(), n = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (h(i, c) == 0) continue;
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, c).get_mpz_t(), h(i, c).get_mpz_t());
      Int ar = h(r, c) / g, ai = h(i, c) / g;
      for (std::size_t j = 0; j < n; ++j) {
        Int top = s * h(r, j) + t * h(i, j);
        Int bottom = ar * h(i, j) - ai * h(r, j);
        h(r, j) = top;
        h(i, j) = bottom;
      }
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0)
      for (std::size_t j = 0; j < n; ++j) h(r, j) = -h(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) sub_row(h, i, r, q);
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = h(i, j);
  return out;
}

bool lattice_contains(const IntMatrix& hnf, const IntVector& v) {
  if (v.size() != hnf.cols()) throw std::invalid_argument("lattice_contains: dimension mismatch");
  IntVector w = v;
  std::size_t col = 0;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    std::size_t p = 0;
    while (p < hnf.cols() && hnf(i, p) == 0) ++p;
    for (; col < p; ++col)
      if (w[col] != 0) return false;
    if (w[p] % hnf(i, p) != 0) return false;
    Int q = w[p] / hnf(i, p);
    for (std::size_t j = p; j < hnf.cols(); ++j) w[j] -= q * hnf(i, j);
    col = p + 1;
  }
  for (; col < w.size(); ++col)
    if (w[col] != 0) return false;
  return true;
}

IntegerSolver::IntegerSolver(const IntMatrix& m) : snf_(smith_normal_form(m)), cols_(m.cols()) {}

IntegerSolver::Result IntegerSolver::solve(const IntVector& b) const {
  // U M V = D, so M x = b  <=>  D y = U b  with x = V y.
  if (b.size() != snf_.U.rows()) throw std::invalid_argument("IntegerSolver: dimension mismatch");
  // Rows of U past the rank span the left kernel; they settle most inconsistent systems, so
  // they are computed first.
  const std::size_t n = b.size();
  IntVector ub(n);
  Result res;
  auto row_times_b = [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) mpz_addmul(ub[i].get_mpz_t(), snf_.U(i, j).get_mpz_t(), b[j].get_mpz_t());
  };
  for (std::size_t i = snf_.rank; i < n; ++i) {
    row_times_b(i);
    if (ub[i] != 0) return res;
  }
  for (std::size_t i = 0; i < snf_.rank; ++i) row_times_b(i);
  res.rational_consistent = true;
  IntVector y(cols_, Int(0));
  for (std::size_t i = 0; i < snf_.rank; ++i) {
    if (ub[i] % snf_.D(i, i) != 0) return res;
    y[i] = ub[i] / snf_.D(i, i);
  }
  res.integer_solvable = true;
  res.particular = snf_.V * y;
  return res;
}

IntMatrix IntegerSolver::kernel_basis() const {
  IntMatrix k(cols_ - snf_.rank, cols_);
  for (std::size_t i = snf_.rank; i < cols_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) k(i - snf_.rank, j) = snf_.V(j, i);
  return k;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  IntegerSolver solver(m);
  IntMatrix k = solver.kernel_basis();
  if (k.rows() == 0) return k;
  return hermite_normal_form(k);
}

std::vector<IntMatrix> intertwiner_lattice(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square()) throw std::invalid_argument("intertwiner_lattice: square matrices required");
  const std::size_t r = a.rows(), s = b.rows();
  // Unknown X(i,j) sits at coordinate i*s + j; row (i,j) of the system is (A X - X B)(i,j).
  IntMatrix sys(r * s, r * s);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      const std::size_t eq = i * s + j;
      for (std::size_t k = 0; k < r; ++k) sys(eq, k * s + j) += a(i, k);
      for (std::size_t k = 0; k < s; ++k) sys(eq, i * s + k) -= b(k, j);
    }
  IntMatrix kernel = integer_kernel(sys);
  std::vector<IntMatrix> basis;
  for (std::size_t t = 0; t < kernel.rows(); ++t) {
    IntMatrix x(r, s);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < s; ++j) x(i, j) = kernel(t, i * s + j);
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace sftkit
