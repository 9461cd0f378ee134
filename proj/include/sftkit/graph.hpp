#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/matrix.hpp"

namespace sftkit {

struct Edge {
  std::string id;
  std::size_t source;
  std::size_t range;
};

// Finite directed multigraph.  Vertex order fixes the row/column order of the adjacency matrix;
// row = source, column = range.
class DirectedMultigraph {
public:
  DirectedMultigraph() = default;
  // Throws std::invalid_argument on duplicate ids or undeclared endpoints.
  DirectedMultigraph(std::vector<std::string> vertices, std::vector<Edge> edges);
  // Edges as (source id, range id, edge id).
  static DirectedMultigraph from_named(std::vector<std::string> vertices,
                                       const std::vector<std::vector<std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  std::size_t vertex_index(const std::string& id) const;  // throws std::out_of_range
  bool has_vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;          // throws std::out_of_range
  bool has_edge(const std::string& id) const;

  // Edge ids in edge-list order.
  std::vector<std::string> out_edges(std::size_t v) const;
  std::vector<std::string> in_edges(std::size_t v) const;

  bool is_sink(std::size_t v) const;
  bool is_source(std::size_t v) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

IntMatrix adjacency_matrix(const DirectedMultigraph& g);

// Vertices v1..vn (or the given names); edges numbered e1, e2, ... in (source, range,
// multiplicity) order.
DirectedMultigraph graph_from_matrix(const IntMatrix& m, std::vector<std::string> names = {});

using VertexSet = std::vector<std::size_t>;  // sorted indices

std::vector<VertexSet> hereditary_saturated_subsets(const DirectedMultigraph& g);

struct SmallGraphReport {
  std::size_t vertex_count = 0;
  bool has_parallel_edges = false;
  VertexSet sinks;
  VertexSet sources;
  std::vector<VertexSet> hereditary_saturated;
  bool is_small = false;
};

SmallGraphReport small_graph_report(const DirectedMultigraph& g);

bool is_irreducible(const IntMatrix& a);
// gcd of cycle lengths over all strongly connected components that carry a cycle; nullopt when
// the matrix has no cycle at all.
std::optional<unsigned long> period(const IntMatrix& a);
bool is_primitive_by_period(const IntMatrix& a);
// Some power A^k with k <= (r-1)^2 + 1 is entrywise positive.
bool is_primitive_by_powers(const IntMatrix& a);
// Both routes; throws std::logic_error if they disagree.
bool is_primitive(const IntMatrix& a);

inline constexpr std::size_t kIsomorphismVertexLimit = 8;

// Lexicographically least pi (vertex i of g1 -> vertex pi[i] of g2) with
// A_{g2}(pi[i], pi[j]) = A_{g1}(i, j).  Throws std::length_error above the vertex limit.
std::optional<std::vector<std::size_t>> graphs_isomorphic(const DirectedMultigraph& g1,
                                                          const DirectedMultigraph& g2);
std::optional<std::vector<std::size_t>> matrices_isomorphic(const IntMatrix& a, const IntMatrix& b);

}  // namespace sftkit
