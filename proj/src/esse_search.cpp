#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sftkit/equivalence.hpp"

namespace sftkit {
namespace {

using Small = std::vector<long>;  // row-major

Small to_small(const IntMatrix& m) {
  Small out;
  for (const auto& x : m.data()) {
    if (!x.fits_slong_p() || x > (1L << 20)) throw std::invalid_argument("ESSE search: matrix entries too large");
    out.push_back(x.get_si());
  }
  return out;
}

IntMatrix from_small(const Small& s, std::size_t rows, std::size_t cols) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) m(i / cols, i % cols) = s[i];
  return m;
}

// Next vector in lexicographic order over {0..m}^n; false after the last one.
bool next_lex(Small& v, long m) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < m) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

bool has_zero_row(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < m.cols(); ++j) zero = zero && m(i, j) == 0;
    if (zero) return true;
  }
  return false;
}

bool has_zero_col(const IntMatrix& m) { return has_zero_row(m.transpose()); }

long max_of(const IntMatrix& m) { return m.data().empty() ? 0 : max_entry(m).get_si(); }

struct Problem {
  std::size_t r, c;
  long m;
  Small a, b;
};

void search_unpruned(const Problem& p, std::vector<EsseWitness>& out) {
  Small R(p.r * p.c, 0);
  do {
    Small S(p.c * p.r, 0);
    do {
      bool ok = true;
      for (std::size_t i = 0; ok && i < p.r; ++i)
        for (std::size_t j = 0; ok && j < p.r; ++j) {
          long s = 0;
          for (std::size_t t = 0; t < p.c; ++t) s += R[i * p.c + t] * S[t * p.r + j];
          ok = s == p.a[i * p.r + j];
        }
      for (std::size_t i = 0; ok && i < p.c; ++i)
        for (std::size_t j = 0; ok && j < p.c; ++j) {
          long s = 0;
          for (std::size_t t = 0; t < p.r; ++t) s += S[i * p.r + t] * R[t * p.c + j];
          ok = s == p.b[i * p.c + j];
        }
      if (ok) out.push_back({from_small(R, p.r, p.c), from_small(S, p.c, p.r)});
    } while (next_lex(S, p.m));
  } while (next_lex(R, p.m));
}

// Rows of S are chosen in order; row t must reproduce row t of B = S R at once, and the partial
// sum of rank-one terms R[:, t] S[t, :] must stay below A.
struct Pruned {
  const Problem& p;
  const Small& R;
  Small S;
  Small partial;
  std::vector<EsseWitness>& out;

  void row(std::size_t t) {
    if (t == p.c) {
      if (partial == p.a) out.push_back({from_small(R, p.r, p.c), from_small(S, p.c, p.r)});
      return;
    }
    Small cand(p.r, 0);
    do {
      bool ok = true;
      for (std::size_t j = 0; ok && j < p.c; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < p.r; ++k) s += cand[k] * R[k * p.c + j];
        ok = s == p.b[t * p.c + j];
      }
      for (std::size_t i = 0; ok && i < p.r; ++i)
        for (std::size_t j = 0; ok && j < p.r; ++j)
          ok = partial[i * p.r + j] + R[i * p.c + t] * cand[j] <= p.a[i * p.r + j];
      if (!ok) continue;
      for (std::size_t i = 0; i < p.r; ++i)
        for (std::size_t j = 0; j < p.r; ++j) partial[i * p.r + j] += R[i * p.c + t] * cand[j];
      std::copy(cand.begin(), cand.end(), S.begin() + static_cast<long>(t * p.r));
      row(t + 1);
      for (std::size_t i = 0; i < p.r; ++i)
        for (std::size_t j = 0; j < p.r; ++j) partial[i * p.r + j] -= R[i * p.c + t] * cand[j];
    } while (next_lex(cand, p.m));
    std::fill(S.begin() + static_cast<long>(t * p.r), S.begin() + static_cast<long>((t + 1) * p.r), 0);
  }
};

void search_pruned(const Problem& p, std::vector<EsseWitness>& out) {
  Small R(p.r * p.c, 0);
  do {
    Pruned run{p, R, Small(p.c * p.r, 0), Small(p.r * p.r, 0), out};
    run.row(0);
  } while (next_lex(R, p.m));
}

}  // namespace

EsseSearchResult search_esse(const IntMatrix& a, const IntMatrix& b, const EsseSearchOptions& opts) {
  if (!a.is_square() || !b.is_square() || a.rows() == 0 || b.rows() == 0)
    throw std::invalid_argument("ESSE search needs square matrices");
  if (!is_nonnegative(a) || !is_nonnegative(b)) throw std::invalid_argument("ESSE search needs nonnegative matrices");
  if (opts.entry_bound < 0) throw std::invalid_argument("entry bound must be nonnegative");
  for (std::size_t c : opts.inner_dims)
    if (c != b.rows())
      throw std::invalid_argument("inner dimension " + std::to_string(c) + " is impossible: S R = B forces " +
                                  std::to_string(b.rows()));

  Problem p{a.rows(), b.rows(), opts.entry_bound, to_small(a), to_small(b)};
  EsseSearchResult res;
  const long double base = static_cast<long double>(p.m + 1);
  res.estimate = std::pow(base, static_cast<long double>(2 * p.r * p.c));
  const long double work = opts.pruned ? std::pow(base, static_cast<long double>(p.r * p.c + p.r)) * p.c : res.estimate;
  const std::uint64_t budget = opts.budget ? opts.budget : default_search_budget();

  // With B free of zero rows every row of S is nonzero, so each R(i, t) is at most max A; the
  // other three bounds follow the same way from zero-free columns and from A's side.
  std::optional<long> br, bs;
  auto tighten = [](std::optional<long>& cur, long v) { cur = cur ? std::min(*cur, v) : v; };
  if (!has_zero_row(b)) tighten(br, max_of(a));
  if (!has_zero_col(a)) tighten(br, max_of(b));
  if (!has_zero_col(b)) tighten(bs, max_of(a));
  if (!has_zero_row(a)) tighten(bs, max_of(b));
  res.forced_bound_r = br;
  res.forced_bound_s = bs;
  const bool complete = br && bs && p.m >= *br && p.m >= *bs;

  if (work > static_cast<long double>(budget)) {
    res.refused = true;
    res.verdict = Verdict::Bounded;
    res.note = "search space estimate exceeds the budget of " + std::to_string(budget);
    return res;
  }
  if (opts.pruned)
    search_pruned(p, res.witnesses);
  else
    search_unpruned(p, res.witnesses);

  if (!res.witnesses.empty()) {
    res.verdict = Verdict::Found;
  } else if (complete) {
    res.verdict = Verdict::Unconditional;
    res.note = "every witness has R entries <= " + std::to_string(*br) + " and S entries <= " + std::to_string(*bs) +
               ", all covered by the entry bound";
  } else {
    res.verdict = Verdict::Bounded;
    res.note = "no witness with entries <= " + std::to_string(p.m);
  }
  return res;
}

}  // namespace sftkit
