#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "sftkit/catalog.hpp"
#include "sftkit/graph.hpp"

using namespace sftkit;

namespace {

std::vector<std::vector<std::string>> names(const DirectedMultigraph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) {
    out.emplace_back();
    for (auto i : s) out.back().push_back(g.vertices()[i]);
  }
  return out;
}

// Every subset checked against the two closure rules directly.
std::set<VertexSet> hereditary_saturated_oracle(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::set<VertexSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    auto in = [&](std::size_t v) { return (mask >> v) & 1u; };
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      bool sink = true, all_in = true;
      for (std::size_t w = 0; w < n; ++w) {
        if (a(v, w) == 0) continue;
        sink = false;
        if (!in(w)) all_in = false;
        if (in(v) && !in(w)) ok = false;
      }
      if (!sink && all_in && !in(v)) ok = false;
    }
    if (!ok) continue;
    VertexSet s;
    for (std::size_t v = 0; v < n; ++v)
      if (in(v)) s.push_back(v);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("adjacency matrix counts edges source to range") {
  CHECK(catalog_entry("E1_1").matrix() == IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 1}});
  CHECK(adjacency_matrix(DirectedMultigraph({"a"}, {})) == IntMatrix{{0}});
  CHECK(catalog_entry("F1_3").matrix() == IntMatrix{{1, 1}, {1, 2}});

  const auto g = DirectedMultigraph::from_named({"p", "q"}, {{"p", "q", "x"}, {"p", "q", "y"}, {"q", "q", "z"}});
  CHECK(adjacency_matrix(g) == IntMatrix{{0, 2}, {0, 1}});
}

TEST_CASE("graph construction rejects bad ids") {
  CHECK_THROWS_AS(DirectedMultigraph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedMultigraph::from_named({"a"}, {{"a", "b", "e"}}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedMultigraph::from_named({"a"}, {{"a", "a", "e"}, {"a", "a", "e"}}), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_matrix(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("graph_from_matrix inverts adjacency_matrix") {
  const auto rose = graph_from_matrix(IntMatrix{{2}});
  CHECK(rose.vertex_count() == 1);
  CHECK(rose.edges().size() == 2);
  CHECK(rose.edges()[0].id != rose.edges()[1].id);

  const auto isolated = graph_from_matrix(IntMatrix{{0}});
  CHECK(isolated.vertex_count() == 1);
  CHECK(isolated.edges().empty());

  const auto cycle = graph_from_matrix(IntMatrix{{0, 1}, {1, 0}});
  CHECK(cycle.edges().size() == 2);
  CHECK(adjacency_matrix(cycle) == IntMatrix{{0, 1}, {1, 0}});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const IntMatrix m = oracle::to_int(oracle::random_matrix(rng, n, n, 0, 3));
    const auto g = graph_from_matrix(m);
    REQUIRE(adjacency_matrix(g) == m);
    // Deterministic ids.
    CHECK(to_json(graph_from_matrix(m)) == to_json(g));
  }
}

TEST_CASE("hereditary saturated subsets") {
  const auto& e11 = catalog_entry("E1_1").graph;
  CHECK(hereditary_saturated_subsets(e11) == std::vector<VertexSet>{{}, {0, 1, 2}});

  const auto chain =
      DirectedMultigraph::from_named({"v1", "v2"}, {{"v1", "v1", "l"}, {"v1", "v2", "a"}, {"v2", "v2", "b"}});
  CHECK(names(chain, hereditary_saturated_subsets(chain)) ==
        std::vector<std::vector<std::string>>{{}, {"v2"}, {"v1", "v2"}});

  const DirectedMultigraph empty({"a", "b"}, {});
  CHECK(hereditary_saturated_subsets(empty) == std::vector<VertexSet>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("hereditary saturated subsets agree with subset enumeration and are closed under intersection") {
  for (const auto& e : load_catalog()) {
    if (e.graph.vertex_count() > 6) continue;
    const auto hs = hereditary_saturated_subsets(e.graph);
    CAPTURE(e.id);
    CHECK(std::set<VertexSet>(hs.begin(), hs.end()) == hereditary_saturated_oracle(e.matrix()));
    CHECK(hs.front().empty());
    CHECK(hs.back().size() == e.graph.vertex_count());
    const std::set<VertexSet> all(hs.begin(), hs.end());
    for (const auto& x : hs)
      for (const auto& y : hs) {
        VertexSet meet;
        std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(meet));
        CHECK(all.count(meet) == 1);
      }
  }
}

TEST_CASE("small graph report") {
  CHECK(small_graph_report(catalog_entry("E2_3").graph).is_small);

  const auto f11 = small_graph_report(catalog_entry("F1_1").graph);
  CHECK_FALSE(f11.is_small);
  CHECK(f11.vertex_count == 2);

  CHECK_FALSE(small_graph_report(catalog_entry("x4-A").graph).is_small);

  const auto sink = small_graph_report(graph_from_matrix(IntMatrix{{0}}));
  CHECK(sink.sinks == VertexSet{0});
  CHECK_FALSE(sink.is_small);

  const auto parallel = small_graph_report(graph_from_matrix(IntMatrix{{2, 1, 0}, {0, 0, 1}, {1, 0, 1}}));
  CHECK(parallel.has_parallel_edges);
  CHECK_FALSE(parallel.is_small);
}

TEST_CASE("catalog small flags") {
  std::size_t small = 0;
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    CHECK(small_graph_report(e.graph).is_small == e.small);
    small += e.small;
  }
  CHECK(small == 34);
}

TEST_CASE("period, irreducibility, primitivity") {
  const IntMatrix swap{{0, 1}, {1, 0}};
  CHECK(period(swap) == 2ul);
  CHECK(is_irreducible(swap));
  CHECK_FALSE(is_primitive(swap));

  const IntMatrix f11 = catalog_entry("F1_1").matrix();
  CHECK(power(f11, 2) == IntMatrix{{2, 1}, {1, 1}});
  CHECK(is_primitive(f11));

  const IntMatrix e110 = catalog_entry("E1_10").matrix();
  CHECK(is_irreducible(e110));
  CHECK(period(e110) == 2ul);
  CHECK_FALSE(is_primitive(e110));
  for (unsigned k = 1; k <= 5; ++k) CHECK_FALSE(oracle::boolean_positive(oracle::of(power(e110, k))));

  CHECK_FALSE(period(IntMatrix{{0}}).has_value());
  CHECK_FALSE(period(IntMatrix{{0, 1}, {0, 0}}).has_value());
  CHECK_FALSE(is_primitive(IntMatrix{{0}}));
}

TEST_CASE("both primitivity routes agree with the Wielandt oracle") {
  for (const auto& e : load_catalog()) {
    const IntMatrix a = e.matrix();
    CAPTURE(e.id);
    CHECK(is_primitive_by_period(a) == is_primitive_by_powers(a));
    CHECK(is_primitive(a) == oracle::primitive(oracle::of(a)));
  }
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto m = oracle::random_matrix(rng, n, n, 0, 1);
    const IntMatrix a = oracle::to_int(m);
    CAPTURE(a.to_string());
    REQUIRE(is_primitive_by_period(a) == is_primitive_by_powers(a));
    REQUIRE(is_primitive(a) == oracle::primitive(m));
  }
}

TEST_CASE("graph isomorphism") {
  const IntMatrix e15 = catalog_entry("E1_5").matrix();
  const std::vector<std::size_t> cycle{1, 2, 0};
  const IntMatrix relabelled = permute(e15, cycle);
  const auto pi = matrices_isomorphic(e15, relabelled);
  REQUIRE(pi);
  CHECK(oracle::is_permutation_of(oracle::of(e15), oracle::of(relabelled), *pi));

  CHECK_FALSE(matrices_isomorphic(e15, catalog_entry("E1_13").matrix()));
  CHECK_FALSE(graphs_isomorphic(catalog_entry("E1_5").graph, catalog_entry("F1_1").graph));

  const auto split = out_split(catalog_entry("F1_1").graph,
                               {"w1", maximal_out_partition(catalog_entry("F1_1").graph, "w1"), false});
  CHECK(graphs_isomorphic(split, catalog_entry("E1_5").graph));

  const IntMatrix big = IntMatrix::identity(9);
  CHECK_THROWS_AS(matrices_isomorphic(big, big), std::length_error);
}

TEST_CASE("isomorphism returns the least bijection and agrees with brute force") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const auto a = oracle::random_matrix(rng, n, n, 0, 1);
    const auto b = oracle::random_matrix(rng, n, n, 0, 1);
    const auto pi = matrices_isomorphic(oracle::to_int(a), oracle::to_int(b));
    REQUIRE(pi.has_value() == oracle::isomorphic(a, b));
    if (!pi) continue;
    CHECK(oracle::is_permutation_of(a, b, *pi));
    std::vector<std::size_t> first(n);
    std::iota(first.begin(), first.end(), 0);
    while (!oracle::is_permutation_of(a, b, first)) std::next_permutation(first.begin(), first.end());
    CHECK(*pi == first);
  }
}
