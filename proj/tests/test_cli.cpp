#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "sftkit/catalog.hpp"

using namespace sftkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("sftkit_test_" + name)).string();
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("invariants") {
  const Run e21 = run({"invariants", "E2_1"});
  REQUIRE(e21.code == 0);
  const Json r = e21.json()["results"];
  CHECK(r["k0"]["rendering"] == "Z/2Z");
  CHECK(r["pf"]["decimal"] == "2.20557");
  CHECK(r["pf"]["minimal_polynomial"] == "x^3 - 2*x^2 - 1");
  CHECK(e21.json()["exit_code"] == 0);
  CHECK(e21.json()["discrepancies"].empty());

  const Json r12 = run({"invariants", "R1_2"}).json()["results"];
  CHECK(r12["k0"]["rendering"] == "{0̄}");
  CHECK(r12["kgr"]["rendering"] == "Z[1/2]");
  CHECK(r12["pf"]["decimal"] == "2.00000");

  const Run sink = run({"invariants", "[[0]]"});
  REQUIRE(sink.code == 0);
  CHECK(sink.json()["results"]["period"].is_null());
  CHECK(sink.json()["results"]["primitive"] == false);
  CHECK(sink.json()["results"]["small_graph"]["is_small"] == false);
}

TEST_CASE("input errors exit 3") {
  CHECK(run({"invariants", "NOPE"}).code == 3);
  CHECK(run({"invariants", "[[1, 2]]"}).code == 3);
  CHECK(run({"invariants", "[[-1]]"}).code == 3);
  CHECK(run({"invariants", "E2_1", "--bogus"}).code == 3);
  CHECK(run({"esse", "E2_3", "E3_4", "--inner", "2"}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({}).code == 3);
  const Run bad = run({"invariants", "NOPE"});
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("esse exit codes and verify round trip") {
  const Run refuted = run({"esse", "E2_3", "E2_4", "--entries", "1"});
  CHECK(refuted.code == 1);
  CHECK(refuted.json()["results"]["verdict"] == "UNCONDITIONAL");

  const Run found = run({"esse", "E2_3", "E3_4", "--entries", "1"});
  REQUIRE(found.code == 0);
  CHECK(found.json()["results"]["verdict"] == "FOUND");
  const std::string path = temp_path("esse.json");
  write(path, found.out);
  CHECK(run({"verify", "E2_3", "E3_4", path}).code == 0);
  CHECK(run({"verify", "E2_3", "E2_4", path}).code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("sse search and certificate") {
  const Run two = run({"sse", "E1_8", "E1_12", "--depth", "2"});
  REQUIRE(two.code == 0);
  CHECK(two.json()["results"]["lag"] == 2);
  const std::string path = temp_path("sse.json");
  write(path, two.out);
  CHECK(run({"verify", "E1_8", "E1_12", path}).code == 0);
  std::filesystem::remove(path);

  const Run one = run({"sse", "E1_8", "E1_12", "--depth", "1"});
  CHECK(one.code == 2);
  CHECK(one.json()["results"]["verdict"] == "BOUNDED");
}

TEST_CASE("intertwiner, cone and delta") {
  const Run t = run({"intertwiner", "E1_12", "E1_8", "--pointed", "--unimodular", "--cone", "--coeff-bound", "2"});
  REQUIRE(t.code == 0);
  const std::string path = temp_path("t.json");
  write(path, t.out);
  CHECK(run({"verify", "E1_12", "E1_8", path}).code == 0);
  std::filesystem::remove(path);

  CHECK(run({"intertwiner", "F1_1", "F1_1", "--pointed", "--unimodular", "--unit-a", "2,1", "--unit-b", "2,2"}).code == 1);

  CHECK(run({"cone", "E7_1", "--v", "1,-1,0"}).code == 1);
  CHECK(run({"cone", "F1_1", "--v", "1,-1"}).code == 0);

  CHECK(run({"delta", "E1_3"}).code == 0);
  const Run half = run({"delta", "E1_3", "--vector", "1/2,1/2,1/2"});
  CHECK(half.code == 0);
  CHECK(half.json()["results"]["contained"] == true);
  CHECK(half.json()["results"]["k"] == 1);
  const std::string wrong = R"({"w":[[1,1,1]],"d":3,"free_part":[[0,1,0],[0,0,1]]})";
  CHECK(run({"delta", "E1_3", "--claim", wrong}).code == 1);
  CHECK(run({"delta", "E1_5"}).code == 3);
}

TEST_CASE("output is deterministic; timing only on request") {
  const Run a = run({"esse", "E2_3", "E3_4"});
  const Run b = run({"esse", "E2_3", "E3_4"});
  CHECK(a.out == b.out);
  CHECK_FALSE(a.json().contains("timing"));
  const Run timed = run({"--timing", "esse", "E2_3", "E3_4"});
  CHECK(timed.json().contains("timing"));
  CHECK(timed.json()["timing"].contains("total_ms"));
}

TEST_CASE("table1 report") {
  const Run j = run({"table1"});
  REQUIRE(j.code == 0);
  const Json doc = j.json();
  CHECK(doc["results"]["rows"].size() == 34);
  std::vector<std::string> flagged;
  for (const auto& d : doc["discrepancies"]) flagged.push_back(d["id"]);
  CHECK(flagged == std::vector<std::string>{"E1_1", "E1_4"});

  const Run csv = run({"table1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("id,", 0) == 0);
  CHECK(csv.out.find("E1_4") != std::string::npos);
}

TEST_CASE("catalog export and verify") {
  const std::string path = temp_path("catalog.json");
  REQUIRE(run({"catalog", "export", "-o", path}).code == 0);
  CHECK(run({"catalog", "verify", path}).code == 0);
  std::string text;
  {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    text = s.str();
  }
  CHECK(text == catalog_file_contents());
  const auto pos = text.find("\"E1_1\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"E9_9\"");
  write(path, text);
  CHECK(run({"catalog", "verify", path}).code == 1);
  std::filesystem::remove(path);

  const Run list = run({"catalog", "list"});
  CHECK(list.code == 0);
  CHECK(list.out.find("F2_1") != std::string::npos);
}
