#include "sftkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sftkit {

DirectedMultigraph::DirectedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex id");
  std::set<std::string> eids;
  for (const auto& e : edges_) {
    if (e.source >= vertices_.size() || e.range >= vertices_.size())
      throw std::invalid_argument("edge " + e.id + " has an undeclared endpoint");
    if (!eids.insert(e.id).second) throw std::invalid_argument("duplicate edge id " + e.id);
  }
}

DirectedMultigraph DirectedMultigraph::from_named(std::vector<std::string> vertices,
                                                  const std::vector<std::vector<std::string>>& edges) {
  auto index = [&](const std::string& id) -> std::size_t {
    auto it = std::find(vertices.begin(), vertices.end(), id);
    if (it == vertices.end()) throw std::invalid_argument("unknown vertex " + id);
    return static_cast<std::size_t>(it - vertices.begin());
  };
  std::vector<Edge> es;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto& e = edges[k];
    if (e.size() != 2 && e.size() != 3) throw std::invalid_argument("edge must be [source, range] or [source, range, id]");
    es.push_back({e.size() == 3 ? e[2] : "e" + std::to_string(k + 1), index(e[0]), index(e[1])});
  }
  return DirectedMultigraph(std::move(vertices), std::move(es));
}

std::size_t DirectedMultigraph::vertex_index(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw std::out_of_range("unknown vertex " + id);
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool DirectedMultigraph::has_vertex(const std::string& id) const {
  return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
}

const Edge& DirectedMultigraph::edge(const std::string& id) const {
  for (const auto& e : edges_)
    if (e.id == id) return e;
  throw std::out_of_range("unknown edge " + id);
}

bool DirectedMultigraph::has_edge(const std::string& id) const {
  for (const auto& e : edges_)
    if (e.id == id) return true;
  return false;
}

std::vector<std::string> DirectedMultigraph::out_edges(std::size_t v) const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (e.source == v) out.push_back(e.id);
  return out;
}

std::vector<std::string> DirectedMultigraph::in_edges(std::size_t v) const {
  std::vector<std::string> out;
  for (const auto& e : edges_)
    if (e.range == v) out.push_back(e.id);
  return out;
}

bool DirectedMultigraph::is_sink(std::size_t v) const {
  return std::none_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.source == v; });
}

bool DirectedMultigraph::is_source(std::size_t v) const {
  return std::none_of(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.range == v; });
}

IntMatrix adjacency_matrix(const DirectedMultigraph& g) {
  IntMatrix a(g.vertex_count(), g.vertex_count());
  for (const auto& e : g.edges()) a(e.source, e.range) += 1;
  return a;
}

DirectedMultigraph graph_from_matrix(const IntMatrix& m, std::vector<std::string> names) {
  if (!m.is_square()) throw std::invalid_argument("graph_from_matrix: matrix is not square");
  if (!is_nonnegative(m)) throw std::invalid_argument("graph_from_matrix: negative entry");
  const std::size_t n = m.rows();
  if (names.empty())
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
  if (names.size() != n) throw std::invalid_argument("graph_from_matrix: wrong number of names");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (Int k = 0; k < m(i, j); ++k) edges.push_back({"e" + std::to_string(edges.size() + 1), i, j});
  return DirectedMultigraph(std::move(names), std::move(edges));
}

std::vector<VertexSet> hereditary_saturated_subsets(const DirectedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw std::length_error("hereditary_saturated_subsets: too many vertices");
  std::vector<VertexSet> out;
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    auto in = [&](std::size_t v) { return (mask >> v) & 1UL; };
    bool ok = true;
    for (const auto& e : g.edges())
      if (in(e.source) && !in(e.range)) ok = false;
    for (std::size_t v = 0; ok && v < n; ++v) {
      if (in(v) || g.is_sink(v)) continue;
      bool all_inside = true;
      for (const auto& e : g.edges())
        if (e.source == v && !in(e.range)) all_inside = false;
      if (all_inside) ok = false;
    }
    if (!ok) continue;
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (in(v)) s.push_back(v);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

SmallGraphReport small_graph_report(const DirectedMultigraph& g) {
  SmallGraphReport r;
  r.vertex_count = g.vertex_count();
  IntMatrix a = adjacency_matrix(g);
  r.has_parallel_edges = max_entry(a) >= 2;
  for (std::size_t v = 0; v < r.vertex_count; ++v) {
    if (g.is_sink(v)) r.sinks.push_back(v);
    if (g.is_source(v)) r.sources.push_back(v);
  }
  r.hereditary_saturated = hereditary_saturated_subsets(g);
  VertexSet all(r.vertex_count);
  std::iota(all.begin(), all.end(), 0);
  const bool trivial_hs = r.hereditary_saturated.size() == 2 && r.hereditary_saturated[0].empty() &&
                          r.hereditary_saturated[1] == all;
  r.is_small = r.vertex_count == 3 && !r.has_parallel_edges && r.sinks.empty() && trivial_hs;
  return r;
}

namespace {

// reach[i][j]: a path of length >= 1 from i to j.
std::vector<std::vector<bool>> reachability(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i][j] = a(i, j) != 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
  return r;
}

void require_square(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("square matrix required");
}

}  // namespace

bool is_irreducible(const IntMatrix& a) {
  require_square(a);
  if (a.rows() == 0) return false;
  auto r = reachability(a);
  for (const auto& row : r)
    for (bool b : row)
      if (!b) return false;
  return true;
}

std::optional<unsigned long> period(const IntMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  auto r = reachability(a);
  std::vector<long> comp(n, -1);
  unsigned long g = 0;
  bool any_cycle = false;
  for (std::size_t root = 0; root < n; ++root) {
    if (comp[root] != -1 || !r[root][root]) continue;
    // Strongly connected component of root, BFS levels along internal edges.
    std::vector<long> level(n, -1);
    level[root] = 0;
    std::vector<std::size_t> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t u = queue[qi];
      comp[u] = static_cast<long>(root);
      for (std::size_t v = 0; v < n; ++v) {
        if (a(u, v) == 0 || level[v] != -1) continue;
        if (!(r[v][root] && r[root][v])) continue;
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
    for (std::size_t u : queue)
      for (std::size_t v : queue)
        if (a(u, v) != 0) {
          long d = level[u] + 1 - level[v];
          g = std::gcd(g, static_cast<unsigned long>(d < 0 ? -d : d));
        }
    any_cycle = true;
  }
  if (!any_cycle) return std::nullopt;
  return g;
}

bool is_primitive_by_period(const IntMatrix& a) {
  if (!is_irreducible(a)) return false;
  auto p = period(a);
  return p && *p == 1;
}

bool is_primitive_by_powers(const IntMatrix& a) {
  require_square(a);
  const std::size_t n = a.rows();
  if (n == 0) return false;
  std::vector<std::vector<bool>> base(n, std::vector<bool>(n)), cur;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) base[i][j] = a(i, j) != 0;
  cur = base;
  const std::size_t bound = (n - 1) * (n - 1) + 1;
  for (std::size_t k = 1; k <= bound; ++k) {
    bool positive = true;
    for (const auto& row : cur)
      for (bool b : row) positive = positive && b;
    if (positive) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (cur[i][t])
          for (std::size_t j = 0; j < n; ++j)
            if (base[t][j]) next[i][j] = true;
    cur = std::move(next);
  }
  return false;
}

bool is_primitive(const IntMatrix& a) {
  bool by_period = is_primitive_by_period(a);
  bool by_powers = is_primitive_by_powers(a);
  if (by_period != by_powers) throw std::logic_error("primitivity routes disagree");
  return by_period;
}

std::optional<std::vector<std::size_t>> matrices_isomorphic(const IntMatrix& a, const IntMatrix& b) {
  require_square(a);
  require_square(b);
  const std::size_t n = a.rows();
  if (n > kIsomorphismVertexLimit || b.rows() > kIsomorphismVertexLimit)
    throw std::length_error("isomorphism search is limited to " + std::to_string(kIsomorphismVertexLimit) + " vertices");
  if (b.rows() != n) return std::nullopt;
  std::vector<std::size_t> pi(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      pi[i] = c;
      bool ok = true;
      for (std::size_t j = 0; j <= i && ok; ++j)
        ok = a(i, j) == b(c, pi[j]) && a(j, i) == b(pi[j], c);
      if (!ok) continue;
      used[c] = true;
      if (place(i + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (place(0)) return pi;
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> graphs_isomorphic(const DirectedMultigraph& g1,
                                                          const DirectedMultigraph& g2) {
  return matrices_isomorphic(adjacency_matrix(g1), adjacency_matrix(g2));
}

}  // namespace sftkit
