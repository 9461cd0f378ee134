#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sftkit/equivalence.hpp"

namespace sftkit {

CanonicalForm canonical_form(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("canonical form of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalForm best{a, perm};
  do {
    IntMatrix c = permute(a, perm);
    if (c.data() < best.matrix.data()) best = {std::move(c), perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

using Row = std::vector<long>;

// Multisets of nonzero vectors summing to rem, listed as non-increasing sequences.
void vector_partitions(const Row& rem, const Row& cap, std::vector<Row>& cur, std::vector<std::vector<Row>>& out) {
  if (std::all_of(rem.begin(), rem.end(), [](long x) { return x == 0; })) {
    out.push_back(cur);
    return;
  }
  // Enumerate q <= rem componentwise, q nonzero, q <=lex cap, in decreasing lex order.
  Row q(rem.size(), 0);
  std::vector<Row> candidates;
  std::function<void(std::size_t)> gen = [&](std::size_t i) {
    if (i == rem.size()) {
      if (std::any_of(q.begin(), q.end(), [](long x) { return x != 0; }) && q <= cap) candidates.push_back(q);
      return;
    }
    for (long x = rem[i]; x >= 0; --x) {
      q[i] = x;
      gen(i + 1);
    }
    q[i] = 0;
  };
  gen(0);
  for (const auto& c : candidates) {
    Row next(rem.size());
    for (std::size_t i = 0; i < rem.size(); ++i) next[i] = rem[i] - c[i];
    cur.push_back(c);
    vector_partitions(next, c, cur, out);
    cur.pop_back();
  }
}

bool within(const IntMatrix& m, long entry_bound) { return entry_bound <= 0 || max_entry(m) <= entry_bound; }

// Out-split of vertex v into the given rows: copies inherit v's column, row i of copy i is parts[i].
Neighbour build_out_split(const IntMatrix& a, std::size_t v, const std::vector<Row>& parts) {
  const std::size_t r = a.rows(), n = parts.size(), m = r + n - 1;
  std::vector<std::size_t> origin;
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t k = 0; k < (u == v ? n : 1); ++k) origin.push_back(u);
  IntMatrix d(r, m), e(m, r);
  for (std::size_t j = 0; j < m; ++j) d(origin[j], j) = 1;
  for (std::size_t j = 0, k = 0; j < m; ++j) {
    const std::size_t u = origin[j];
    for (std::size_t w = 0; w < r; ++w) e(j, w) = u == v ? Int(parts[k][w]) : a(u, w);
    if (u == v) ++k;
  }
  Neighbour nb{e * d, {d, e}, "out-split of vertex " + std::to_string(v + 1) + " into " + std::to_string(n)};
  return nb;
}

}  // namespace

std::vector<Neighbour> split_neighbours(const IntMatrix& a, std::size_t size_bound, long entry_bound) {
  std::vector<Neighbour> out;
  const std::size_t r = a.rows();
  if (r >= size_bound) return out;
  for (int side = 0; side < 2; ++side) {
    const IntMatrix m = side == 0 ? a : a.transpose();
    for (std::size_t v = 0; v < r; ++v) {
      Row row(r), cap(r);
      for (std::size_t j = 0; j < r; ++j) cap[j] = row[j] = m(v, j).get_si();
      std::vector<Row> cur;
      std::vector<std::vector<Row>> parts;
      vector_partitions(row, cap, cur, parts);
      for (const auto& p : parts) {
        if (p.size() < 2 || r + p.size() - 1 > size_bound) continue;
        Neighbour nb = build_out_split(m, v, p);
        if (side == 1) {
          // An out-split of A^T is an in-split of A: (D, E) for A^T becomes (E^T, D^T) for A.
          nb = {nb.matrix.transpose(), {nb.step.S.transpose(), nb.step.R.transpose()},
                "in-split of vertex " + std::to_string(v + 1) + " into " + std::to_string(p.size())};
        }
        if (within(nb.matrix, entry_bound)) out.push_back(std::move(nb));
      }
    }
  }
  return out;
}

namespace {

// Merges a set of vertices whose columns agree: the merged row is the sum of their rows.
Neighbour build_out_amalgamation(const IntMatrix& a, const std::vector<std::size_t>& group) {
  const std::size_t r = a.rows();
  std::vector<std::size_t> target(r);
  std::size_t next = 0;
  for (std::size_t u = 0; u < r; ++u) {
    auto it = std::find(group.begin(), group.end(), u);
    if (it == group.end() || it == group.begin()) target[u] = next++;
  }
  for (std::size_t u : group) target[u] = target[group.front()];
  const std::size_t m = next;
  IntMatrix d(m, r), e(r, m);
  for (std::size_t u = 0; u < r; ++u) d(target[u], u) = 1;
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w) e(u, target[w]) = a(u, w);
  return {d * e, {e, d}, ""};
}

std::vector<std::vector<std::size_t>> identical_column_groups(const IntMatrix& a) {
  const std::size_t r = a.rows();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> used(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cls{i};
    for (std::size_t j = i + 1; j < r; ++j)
      if (!used[j] && a.col(i) == a.col(j)) {
        cls.push_back(j);
        used[j] = true;
      }
    if (cls.size() < 2) continue;
    for (unsigned long mask = 1; mask < (1UL << cls.size()); ++mask) {
      if (__builtin_popcountl(mask) < 2) continue;
      std::vector<std::size_t> g;
      for (std::size_t k = 0; k < cls.size(); ++k)
        if (mask >> k & 1UL) g.push_back(cls[k]);
      classes.push_back(std::move(g));
    }
  }
  return classes;
}

std::string group_label(const std::vector<std::size_t>& g) {
  std::string s = "{";
  for (std::size_t k = 0; k < g.size(); ++k) s += (k ? "," : "") + std::to_string(g[k] + 1);
  return s + "}";
}

}  // namespace

std::vector<Neighbour> amalgamation_neighbours(const IntMatrix& a, long entry_bound) {
  std::vector<Neighbour> out;
  for (const auto& g : identical_column_groups(a)) {
    Neighbour nb = build_out_amalgamation(a, g);
    nb.move = "out-amalgamation " + group_label(g);
    if (within(nb.matrix, entry_bound)) out.push_back(std::move(nb));
  }
  const IntMatrix t = a.transpose();
  for (const auto& g : identical_column_groups(t)) {
    Neighbour nb = build_out_amalgamation(t, g);
    nb = {nb.matrix.transpose(), {nb.step.S.transpose(), nb.step.R.transpose()}, "in-amalgamation " + group_label(g)};
    if (within(nb.matrix, entry_bound)) out.push_back(std::move(nb));
  }
  return out;
}

SseSearchResult search_sse_path(const IntMatrix& a, const IntMatrix& b, const SseSearchOptions& opts) {
  if (!a.is_square() || !b.is_square() || a.rows() == 0 || b.rows() == 0)
    throw std::invalid_argument("SSE search needs square matrices");
  if (!is_nonnegative(a) || !is_nonnegative(b)) throw std::invalid_argument("SSE search needs nonnegative matrices");
  SseSearchResult res;
  const CanonicalForm ca = canonical_form(a), cb = canonical_form(b);
  const IntMatrix qa = permutation_matrix(ca.perm), qb = permutation_matrix(cb.perm);

  if (ca.matrix == cb.matrix) {
    res.verdict = Verdict::Found;
    res.chain = SseChain{};
    res.path = {a, b};
    if (a != b) {
      // Q A Q^-1 = B for Q = Q_B^-1 Q_A.
      IntMatrix q = qb.transpose() * qa;
      res.chain->steps.push_back({a * q.transpose(), q});
    } else {
      res.path = {a};
    }
    return res;
  }

  struct Node {
    IntMatrix m;
    long parent;
    EsseWitness step;  // R S = parent, S R = m
    std::size_t depth;
  };
  std::vector<Node> nodes{{ca.matrix, -1, {}, 0}};
  std::map<std::string, std::size_t> seen{{ca.matrix.to_string(), 0}};
  const std::uint64_t budget = opts.budget ? opts.budget : default_search_budget();
  long hit = -1;
  for (std::size_t qi = 0; qi < nodes.size() && hit < 0; ++qi) {
    if (nodes[qi].depth >= opts.max_steps) continue;
    if (res.expanded >= budget) {
      res.budget_exhausted = true;
      break;
    }
    ++res.expanded;
    const IntMatrix cur = nodes[qi].m;
    std::vector<Neighbour> nbs = split_neighbours(cur, opts.size_bound, opts.entry_bound);
    auto am = amalgamation_neighbours(cur, opts.entry_bound);
    nbs.insert(nbs.end(), std::make_move_iterator(am.begin()), std::make_move_iterator(am.end()));
    for (auto& nb : nbs) {
      if (nb.matrix.rows() > opts.size_bound) continue;
      CanonicalForm c = canonical_form(nb.matrix);
      const std::string key = c.matrix.to_string();
      if (seen.count(key)) continue;
      // R S = cur and S R = N; with C = P N P^-1 the pair (R P^-1, P S) certifies cur ~ C.
      const IntMatrix p = permutation_matrix(c.perm);
      EsseWitness step{nb.step.R * p.transpose(), p * nb.step.S};
      seen.emplace(key, nodes.size());
      nodes.push_back({c.matrix, static_cast<long>(qi), std::move(step), nodes[qi].depth + 1});
      if (c.matrix == cb.matrix) {
        hit = static_cast<long>(nodes.size() - 1);
        break;
      }
    }
  }
  res.visited = nodes.size();
  res.frontier = 0;
  for (const auto& n : nodes)
    if (n.depth == nodes.back().depth) ++res.frontier;
  if (hit < 0) {
    res.verdict = Verdict::Bounded;
    return res;
  }

  std::vector<std::size_t> trail;
  for (long i = hit; i > 0; i = nodes[static_cast<std::size_t>(i)].parent) trail.push_back(static_cast<std::size_t>(i));
  std::reverse(trail.begin(), trail.end());
  SseChain chain;
  res.path.push_back(a);
  for (std::size_t idx : trail) {
    chain.steps.push_back(nodes[idx].step);
    res.path.push_back(nodes[idx].m);
  }
  res.path.back() = b;
  // A = Q_A^-1 C_A Q_A and B = Q_B^-1 C_B Q_B: fold both relabellings into the end steps.
  chain.steps.front().R = qa.transpose() * chain.steps.front().R;
  chain.steps.front().S = chain.steps.front().S * qa;
  chain.steps.back().R = chain.steps.back().R * qb;
  chain.steps.back().S = qb.transpose() * chain.steps.back().S;
  auto v = verify_sse(chain, a, b);
  if (!v.ok) throw std::logic_error("SSE search produced an invalid chain: " + v.diagnostics);
  res.chain = std::move(chain);
  res.verdict = Verdict::Found;
  return res;
}

}  // namespace sftkit
