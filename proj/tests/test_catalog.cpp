#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "sftkit/catalog.hpp"
#include "sftkit/perron.hpp"

using namespace sftkit;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& all = load_catalog();
  CHECK(small_entries().size() == 34);
  std::set<std::string> ids;
  for (const auto& e : all) CHECK(ids.insert(e.id).second);

  CHECK(catalog_entry("E6_1").matrix() == IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(catalog_entry("R1_2").matrix() == IntMatrix{{2}});
  CHECK(catalog_entry("F2_1").matrix() == IntMatrix{{1, 2}, {1, 0}});
  CHECK(catalog_entry("F2_2").matrix() == IntMatrix{{1, 1}, {2, 0}});
  CHECK_FALSE(catalog_entry("F1_1").small);
  CHECK(catalog_entry("F1_1").group_tag.empty());
  CHECK(find_entry("no-such-graph") == nullptr);
  CHECK_THROWS_AS(catalog_entry("no-such-graph"), std::out_of_range);

  for (const auto& e : all)
    for (const auto& a : e.aliases) CHECK(find_entry(a) == &e);
}

TEST_CASE("small graphs with a source are exactly the reducible ones") {
  for (const auto* e : small_entries()) {
    CAPTURE(e->id);
    const IntMatrix a = e->matrix();
    bool has_source = false;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      bool fed = false;
      for (std::size_t i = 0; i < a.rows(); ++i) fed = fed || a(i, j) != 0;
      has_source = has_source || !fed;
    }
    CHECK(is_irreducible(a) == !has_source);
  }
}

TEST_CASE("row report") {
  const Table1Report r = table1_report();
  REQUIRE(r.rows.size() == 34);
  for (const auto& row : r.rows) {
    CAPTURE(row.id);
    CHECK(row.k0_match);
    CHECK(row.kgr_match);
    CHECK(row.k0 == row.expected_k0);
  }
  std::set<std::pair<std::string, std::string>> flagged;
  for (const auto& d : r.discrepancies) flagged.insert({d.id, d.column});
  CHECK(flagged == std::set<std::pair<std::string, std::string>>{{"E1_1", "PF"}, {"E1_4", "PF"}});

  for (const auto& row : r.rows) {
    if (row.id == "E1_1") {
      CHECK(row.pf == "1.46557");
      CHECK(row.minpoly == "x^3 - x^2 - 1");
      CHECK_FALSE(row.pf_match);
    }
    if (row.id == "E1_4") {
      CHECK(row.pf == "1.32472");
      CHECK(row.minpoly == "x^3 - x - 1");
      CHECK_FALSE(row.pf_match);
    }
  }
}

TEST_CASE("computed Perron roots agree with a floating-point eigen solve") {
  for (const auto& row : table1_report().rows) {
    CAPTURE(row.id);
    const double rho = oracle::spectral_radius(oracle::of(catalog_entry(row.id).matrix()));
    CHECK(std::stod(row.pf) == doctest::Approx(rho).epsilon(1e-5));
    const auto& e = catalog_entry(row.id);
    if (e.expected_pf_value && row.id != "E1_1" && row.id != "E1_4")
      CHECK(*e.expected_pf_value == doctest::Approx(rho).epsilon(1e-3));
  }
}

TEST_CASE("K0 regression against determinantal divisors") {
  for (const auto* e : small_entries()) {
    CAPTURE(e->id);
    auto m = oracle::transpose(oracle::of(e->matrix()));
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = (i == j) - m[i][j];
    std::vector<Int> factors;
    for (auto f : oracle::invariant_factors(m)) factors.push_back(Int(static_cast<long>(f)));
    CHECK(render_k0(factors) == e->expected_k0);
  }
}

TEST_CASE("entries in one row share K0, the graded group and the Perron root") {
  std::map<std::string, std::vector<const CatalogEntry*>> rows;
  for (const auto* e : small_entries()) rows[e->group_tag].push_back(e);
  CHECK(rows.size() > 1);
  for (const auto& [tag, members] : rows) {
    CAPTURE(tag);
    const IntMatrix first = members.front()->matrix();
    for (const auto* e : members) {
      CAPTURE(e->id);
      CHECK(e->expected_k0 == members.front()->expected_k0);
      CHECK(k0_group(e->matrix()).rendering == k0_group(first).rendering);
      CHECK(compare(spectral_radius(e->matrix()), spectral_radius(first)) == 0);
    }
  }
}

TEST_CASE("JSON round trips") {
  for (const auto& e : load_catalog()) {
    CAPTURE(e.id);
    CHECK(to_json(graph_from_json(to_json(e.graph))) == to_json(e.graph));
    CHECK(matrix_from_json(to_json(e.matrix())) == e.matrix());
    if (e.delta_claim) CHECK(to_json(delta_claim_from_json(to_json(*e.delta_claim))) == to_json(*e.delta_claim));
  }
  const Int big("123456789012345678901234567890");
  CHECK(int_from_json(to_json(big)) == big);
  const Poly p = char_poly(catalog_entry("E2_1").matrix());
  CHECK(poly_from_json(to_json(p)) == p);
  const AlgebraicReal r = spectral_radius(catalog_entry("E2_1").matrix());
  CHECK(compare(algebraic_from_json(to_json(r)), r) == 0);
  CHECK(to_json(RatVector{Rat(1, 2), Rat(3)}) == Json::parse(R"(["1/2", 3])"));
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS(matrix_from_json(Json::parse("[[1, 2], [3]]")));
  CHECK_THROWS(matrix_from_json(Json::parse(R"([["x"]])")));
  CHECK_THROWS(int_from_json(Json::parse("1.5")));
  CHECK_THROWS(graph_from_json(Json::parse(R"({"vertices": ["a"], "edges": [["a", "b", "e"]]})")));
  CHECK_THROWS(certificate_from_json(Json::parse(R"({"kind": "nonsense"})")));
  CHECK_THROWS(move_from_json(Json::parse(R"({"kind": "out_split"})")));
}

TEST_CASE("catalog data file") {
  const std::string contents = catalog_file_contents();
  const CatalogFileCheck ok = verify_catalog_file(contents);
  CHECK(ok.ok);
  CHECK(ok.problems.empty());
  CHECK(read_file(std::string(SFTKIT_SOURCE_DIR) + "/data/catalog.json") == contents);

  Json doc = Json::parse(contents);
  const std::string sha = doc["sha256"];
  CHECK(sha.size() == 64);
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

  Json bad_sum = doc;
  bad_sum["sha256"] = std::string(64, '0');
  CHECK_FALSE(verify_catalog_file(bad_sum.dump()).ok);

  // Changing data while recomputing the checksum must still be caught by the rebuild.
  Json edited = doc;
  edited.erase("sha256");
  auto& edges = edited["entries"][0]["graph"]["edges"];
  REQUIRE(edges.is_array());
  REQUIRE_FALSE(edges.empty());
  edges.erase(edges.begin());
  edited["sha256"] = sha256_hex(edited.dump());
  const CatalogFileCheck tampered = verify_catalog_file(edited.dump());
  CHECK_FALSE(tampered.ok);
  CHECK_FALSE(tampered.problems.empty());

  CHECK_FALSE(verify_catalog_file("not json").ok);
}
