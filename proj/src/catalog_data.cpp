// Transcribed data: adjacency matrices, expected invariants per row, witnesses and move derivations.
// Everything here is checked by the regression suite rather than trusted.

#include <cmath>

#include "catalog_internal.hpp"

namespace sftkit::detail {
namespace {

using Rows = std::initializer_list<std::initializer_list<long>>;

DirectedMultigraph named(std::vector<std::string> vertices, const std::vector<std::vector<std::string>>& edges) {
  return DirectedMultigraph::from_named(std::move(vertices), edges);
}

DirectedMultigraph plain(Rows rows) { return graph_from_matrix(IntMatrix(rows)); }

struct Table1Line {
  std::vector<std::string> ids;
  std::string k0;
  std::string kgr;
  std::string pf;
  double pf_value;
};

const double kGolden = (1 + std::sqrt(5.0)) / 2;

std::vector<Table1Line> table1_lines() {
  return {
      {{"E1_1"}, "{0̄}", "Z^3", "1.46667", 1.46667},
      {{"E1_2"}, "{0̄}", "Z^3", "1.75448", 1.75448},
      {{"E1_3"}, "{0̄}", "Z[1/2][1 1 1] ⊕ 0 × Z^2", "2", 2},
      {{"E1_4"}, "{0̄}", "Z^3", "1.46557", 1.46557},
      {{"E1_5", "E1_13", "E1_14", "E1_16"}, "{0̄}", "Z^2", "(1+√5)/2", kGolden},
      {{"E1_6", "E1_7", "E1_15", "E1_17"}, "{0̄}", "Z[1/2]", "2", 2},
      {{"E1_8", "E1_12"}, "{0̄}", "Z^3", "2.24698", 2.24698},
      {{"E1_9"}, "{0̄}", "Z^2", "(3+√5)/2", (3 + std::sqrt(5.0)) / 2},
      {{"E1_10"}, "{0̄}", "(Z[1/2])^2", "√2", std::sqrt(2.0)},
      {{"E1_11"}, "{0̄}", "Z^3", "1.80194", 1.80194},
      {{"E1_18"}, "{0̄}", "Z^3", "2.32472", 2.32472},
      {{"E2_1"}, "Z/2Z", "Z^3", "2.20557", 2.20557},
      {{"E2_2"}, "Z/2Z", "Z^3", "(1+√5)/2", kGolden},
      {{"E2_3", "E2_4", "E3_4"}, "Z/2Z", "Z[1/2][1 1] ⊕ 0 × Z", "2", 2},
      {{"E2_5", "E3_1"}, "Z/2Z", "Z^3", "1.83929", 1.83929},
      {{"E2_6", "E3_2"}, "Z/2Z", "Z^2", "1+√2", 1 + std::sqrt(2.0)},
      {{"E3_3"}, "Z/2Z", "Z[1/3]", "3", 3},
      {{"E4_1"}, "Z/3Z", "Z^3", "2.1479", 2.1479},
      {{"E4_2"}, "Z/3Z", "(Z[1/2])^2", "1+√3", 1 + std::sqrt(3.0)},
      {{"E5_1"}, "Z/4Z", "Z^3", "1+√2", 1 + std::sqrt(2.0)},
      {{"E6_1"}, "Z/2Z ⊕ Z/2Z", "Z[1/2][1 1 1] ⊕ 0 × Z^2", "2", 2},
      {{"E7_1"}, "Z", "Z[1/2][1 1 1] ⊕ 0 × Z^2", "2", 2},
      {{"E7_2"}, "Z", "Z^3", "1+√2", 1 + std::sqrt(2.0)},
  };
}

DeltaClaim line_claim(IntVector w, std::vector<IntVector> free_part, std::string rendering) {
  return {{std::move(w)}, Int(2), std::move(free_part), std::move(rendering)};
}

DeltaClaim claim_111() {
  return line_claim({1, 1, 1}, {{0, 1, 0}, {0, 0, 1}}, "Z[1/2][1 1 1] ⊕ 0 × Z^2");
}

DeltaClaim claim_half_plane() { return {{{1, 0}, {0, 1}}, Int(2), {}, "(Z[1/2])^2"}; }

}  // namespace

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> out;
  auto small = [&](std::string id, DirectedMultigraph g) {
    CatalogEntry e;
    e.id = std::move(id);
    e.graph = std::move(g);
    e.small = true;
    out.push_back(std::move(e));
  };

  small("E1_1", plain({{0, 1, 0}, {0, 0, 1}, {1, 0, 1}}));
  small("E1_2", plain({{1, 1, 0}, {0, 0, 1}, {1, 0, 1}}));
  small("E1_3", plain({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}));
  small("E1_4", plain({{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
  small("E1_5", plain({{1, 1, 0}, {0, 0, 1}, {1, 1, 0}}));
  small("E1_6", plain({{1, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  small("E1_7", plain({{1, 1, 0}, {0, 1, 1}, {1, 1, 0}}));
  // e = loop at v3, f = v3 -> v1, g = v3 -> v2.
  small("E1_8", named({"v1", "v2", "v3"}, {{"v1", "v1", "a"},
                                           {"v1", "v2", "b"},
                                           {"v2", "v1", "c"},
                                           {"v2", "v3", "d"},
                                           {"v3", "v1", "f"},
                                           {"v3", "v2", "g"},
                                           {"v3", "v3", "e"}}));
  small("E1_9", plain({{1, 1, 0}, {1, 1, 1}, {1, 1, 1}}));
  small("E1_10", plain({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
  small("E1_11", plain({{0, 1, 1}, {1, 0, 0}, {1, 0, 1}}));
  // f = loop at v1, g = v2 -> v1, e = v3 -> v1.
  small("E1_12", named({"v1", "v2", "v3"}, {{"v1", "v1", "f"},
                                            {"v1", "v2", "a"},
                                            {"v1", "v3", "b"},
                                            {"v2", "v1", "g"},
                                            {"v3", "v1", "e"},
                                            {"v3", "v3", "c"}}));
  small("E1_13", plain({{0, 0, 1}, {1, 0, 0}, {1, 0, 1}}));
  small("E1_14", plain({{1, 0, 1}, {1, 0, 0}, {1, 0, 0}}));
  small("E1_15", plain({{1, 0, 1}, {1, 0, 0}, {1, 0, 1}}));
  small("E1_16", plain({{0, 1, 1}, {0, 0, 1}, {0, 1, 1}}));
  small("E1_17", plain({{0, 1, 1}, {0, 1, 1}, {0, 1, 1}}));
  small("E1_18", plain({{1, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
  small("E2_1", plain({{0, 1, 0}, {0, 1, 1}, {1, 1, 1}}));
  small("E2_2", plain({{0, 1, 0}, {1, 0, 1}, {1, 1, 0}}));
  small("E2_3", plain({{0, 1, 0}, {1, 0, 1}, {1, 1, 1}}));
  small("E2_4", plain({{1, 1, 0}, {1, 0, 1}, {1, 1, 0}}));
  small("E2_5", plain({{0, 1, 0}, {0, 1, 1}, {1, 1, 0}}));
  small("E2_6", plain({{1, 1, 0}, {1, 1, 1}, {1, 1, 0}}));
  small("E3_1", plain({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  small("E3_2", plain({{0, 1, 0}, {1, 1, 1}, {1, 1, 1}}));
  small("E3_3", plain({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  small("E3_4", plain({{1, 1, 1}, {1, 0, 0}, {1, 0, 0}}));
  small("E4_1", plain({{0, 1, 0}, {1, 1, 1}, {1, 1, 0}}));
  small("E4_2", plain({{1, 1, 1}, {1, 1, 1}, {1, 1, 0}}));
  small("E5_1", plain({{1, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  small("E6_1", plain({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  small("E7_1", plain({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}));
  small("E7_2", plain({{1, 1, 1}, {1, 1, 0}, {1, 0, 1}}));

  for (const auto& line : table1_lines()) {
    std::string tag;
    for (const auto& id : line.ids) tag += (tag.empty() ? "" : ",") + id;
    for (const auto& id : line.ids)
      for (auto& e : out)
        if (e.id == id) {
          e.group_tag = tag;
          e.expected_k0 = line.k0;
          e.expected_kgr = line.kgr;
          e.expected_pf = line.pf;
          e.expected_pf_value = line.pf_value;
        }
  }

  auto aux = [&](std::string id, DirectedMultigraph g, std::vector<std::string> aliases = {}, std::string note = {}) {
    CatalogEntry e;
    e.id = std::move(id);
    e.graph = std::move(g);
    e.aliases = std::move(aliases);
    e.note = std::move(note);
    out.push_back(std::move(e));
    return &out.back();
  };

  aux("F1_1", named({"w1", "w2"}, {{"w1", "w1", "a"}, {"w1", "w2", "b"}, {"w2", "w1", "c"}}), {"F^1_1"});
  aux("F1_2", named({"w1", "w2"}, {{"w1", "w1", "a"}, {"w1", "w2", "b"}, {"w2", "w1", "c"}, {"w2", "w2", "d"}}),
      {"F^1_2"});
  aux("F1_3", named({"w1", "w2"},
                    {{"w1", "w1", "a"}, {"w1", "w2", "b"}, {"w2", "w1", "e"}, {"w2", "w2", "f"}, {"w2", "w2", "g"}}),
      {"F^1_3"});
  aux("F1_4", named({"w1", "w2"}, {{"w1", "w2", "a"}, {"w1", "w2", "b"}, {"w2", "w1", "c"}}), {"F^1_4"})
      ->delta_claim = claim_half_plane();
  aux("F2_1", named({"w1", "w2"}, {{"w1", "w1", "e"}, {"w1", "w2", "f"}, {"w1", "w2", "g"}, {"w2", "w1", "h"}}),
      {"F^2_1"})
      ->delta_claim = line_claim({1, 1}, {{0, 1}}, "Z[1/2][1 1] ⊕ 0 × Z");
  aux("F2_2", named({"w1", "w2"}, {{"w1", "w1", "e"}, {"w1", "w2", "h"}, {"w2", "w1", "f"}, {"w2", "w1", "g"}}),
      {"F^2_2"});
  aux("F3_2", named({"w1", "w2"}, {{"w1", "w2", "e"}, {"w2", "w1", "h"}, {"w2", "w2", "f"}, {"w2", "w2", "g"}}),
      {"F^3_2"});
  aux("F3_1",
      named({"w1", "w2"},
            {{"w1", "w2", "a"}, {"w2", "w1", "e"}, {"w2", "w1", "h"}, {"w2", "w2", "f"}, {"w2", "w2", "g"}}),
      {"F^3_1"}, "two-vertex graph; the six-vertex graph with the same label is x6-F3_1")
      ->delta_claim = claim_half_plane();
  aux("R1_2", named({"w"}, {{"w", "w", "a"}, {"w", "w", "b"}}), {"R^1_2"})->delta_claim =
      DeltaClaim{{{1}}, Int(2), {}, "Z[1/2]"};
  aux("R1_3", named({"w"}, {{"w", "w", "a"}, {"w", "w", "b"}, {"w", "w", "c"}}), {"R^1_3"})->delta_claim =
      DeltaClaim{{{1}}, Int(3), {}, "Z[1/3]"};

  aux("x4-A",
      named({"TL", "TR", "BL", "BR"}, {{"TL", "TR"},
                                        {"TL", "BL"},
                                        {"BL", "BR"},
                                        {"TR", "BR"},
                                        {"BR", "TL"},
                                        {"BR", "BL"},
                                        {"BR", "TR"},
                                        {"TL", "TL"},
                                        {"BL", "BL"}}),
      {"A"}, "common split of E1_8 and E1_12");
  aux("x4-F4_1",
      named({"Top", "L", "R", "M"}, {{"Top", "R"},
                                      {"R", "Top"},
                                      {"L", "Top"},
                                      {"Top", "L"},
                                      {"Top", "Top"},
                                      {"L", "L"},
                                      {"M", "L"},
                                      {"M", "R"},
                                      {"M", "Top"}}),
      {"B", "F^4_1"}, "E1_12 with a source feeding every vertex");
  aux("x6-F3_1",
      named({"Top", "L", "R", "M1", "M2", "M3"}, {{"Top", "R"},
                                                   {"R", "Top"},
                                                   {"L", "Top"},
                                                   {"Top", "L"},
                                                   {"Top", "Top"},
                                                   {"L", "L"},
                                                   {"M1", "L"},
                                                   {"M2", "R"},
                                                   {"M3", "Top"}}),
      {"F^3_1 (six vertices)"}, "maximal out-split of x4-F4_1 at its source; not the two-vertex F3_1");
  aux("x4-F2_1",
      named({"TL", "TR", "v2", "v3"}, {{"TR", "v2"}, {"v2", "v3"}, {"v3", "v2"}, {"TL", "v3"}, {"v3", "v3"}}),
      {"F^2_1 (four vertices)"}, "maximal out-split of E1_16 at v1; not the two-vertex F2_1");
  aux("x4-C15",
      named({"TL", "TR", "BL", "BR"},
            {{"TR", "TL"}, {"TL", "BL"}, {"BR", "TR"}, {"TL", "BR"}, {"TL", "TL"}, {"BL", "TL"}}),
      {}, "common split of E2_5 and E3_1");

  for (auto& e : out)
    if (e.id == "E1_3" || e.id == "E6_1" || e.id == "E7_1") e.delta_claim = claim_111();
  return out;
}

std::vector<std::pair<std::string, std::string>> build_reductions() {
  return {{"E1_5", "F1_1"},  {"E1_13", "F1_1"}, {"E1_14", "F1_1"}, {"E1_16", "F1_1"}, {"E1_6", "F1_2"},
          {"E1_7", "F1_2"},  {"E1_15", "F1_2"}, {"E1_17", "F1_2"}, {"F1_2", "R1_2"},  {"E1_9", "F1_3"},
          {"E1_10", "F1_4"}, {"E2_3", "F2_1"},  {"E3_4", "F2_1"},  {"E2_4", "F2_2"},  {"F2_2", "F2_1"},
          {"E2_6", "F3_2"},  {"E3_2", "F3_2"},  {"E3_3", "R1_3"},  {"E4_2", "F3_1"}};
}

std::vector<FixtureWitness> build_fixtures() {
  std::vector<FixtureWitness> out;
  auto esse = [&](std::string name, std::string tag, std::string a, std::string b, Rows r, Rows s,
                  bool expected = true, std::vector<std::size_t> relabel = {}, std::string note = {}) {
    out.push_back({std::move(name), std::move(a), std::move(b), EsseWitness{IntMatrix(r), IntMatrix(s)}, expected,
                   std::move(tag), std::move(relabel), std::move(note)});
  };

  esse("c5-E1_5-E1_13", "case 5", "E1_5", "E1_13", {{0, 0, 1}, {1, 0, 0}, {0, 0, 1}}, {{0, 0, 1}, {0, 1, 0}, {1, 1, 0}});
  esse("c5-E1_5-E1_14", "case 5", "E1_5", "E1_14", {{1, 0, 0}, {0, 0, 1}, {1, 0, 0}}, {{1, 1, 0}, {0, 0, 1}, {0, 0, 1}});
  esse("c5-E1_5-E1_16", "case 5", "E1_5", "E1_16", {{0, 0, 1}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 1}, {0, 0, 1}, {1, 1, 0}});
  esse("c5-E1_13-E1_14", "case 5", "E1_13", "E1_14", {{1, 0, 0}, {0, 0, 1}, {1, 0, 1}},
       {{0, 0, 1}, {1, 0, 0}, {1, 0, 0}});
  esse("c5-E1_13-E1_16", "case 5", "E1_13", "E1_16", {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}},
       {{0, 0, 1}, {1, 0, 0}, {0, 0, 1}});
  esse("c5-E1_14-E1_16", "case 5", "E1_14", "E1_16", {{0, 0, 1}, {0, 1, 0}, {0, 1, 0}},
       {{1, 0, 1}, {1, 0, 0}, {1, 0, 1}});
  esse("c5-E1_5-F1_1", "case 5", "E1_5", "F1_1", {{1, 0}, {0, 1}, {1, 0}}, {{1, 1, 0}, {0, 0, 1}});
  esse("c5-E1_13-F1_1", "case 5", "E1_13", "F1_1", {{1, 0}, {0, 1}, {1, 1}}, {{0, 0, 1}, {1, 0, 0}});
  esse("c5-E1_14-F1_1", "case 5", "E1_14", "F1_1", {{1, 0}, {0, 1}, {0, 1}}, {{1, 0, 1}, {1, 0, 0}});
  esse("c5-E1_16-F1_1", "case 5", "E1_16", "F1_1", {{1, 0}, {0, 1}, {1, 0}}, {{0, 1, 1}, {0, 0, 1}});

  esse("c6-E1_6-E1_7", "case 6", "E1_6", "E1_7", {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}}, {{0, 0, 1}, {1, 1, 0}, {0, 0, 1}});
  esse("c6-E1_6-E1_15", "case 6", "E1_6", "E1_15", {{0, 0, 1}, {1, 0, 0}, {1, 0, 1}},
       {{0, 0, 1}, {0, 1, 0}, {1, 1, 0}});
  esse("c6-E1_6-E1_17", "case 6", "E1_6", "E1_17", {{0, 0, 1}, {0, 1, 0}, {0, 1, 1}},
       {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}});
  esse("c6-E1_7-E1_15", "case 6", "E1_7", "E1_15", {{0, 0, 1}, {1, 0, 0}, {0, 0, 1}},
       {{0, 1, 1}, {0, 1, 0}, {1, 1, 0}});
  esse("c6-E1_7-E1_17", "case 6", "E1_7", "E1_17", {{0, 0, 1}, {0, 1, 0}, {0, 0, 1}},
       {{0, 1, 1}, {0, 1, 1}, {1, 1, 0}});
  esse("c6-E1_15-E1_17", "case 6", "E1_15", "E1_17", {{0, 1, 1}, {0, 0, 1}, {0, 1, 1}},
       {{0, 0, 1}, {0, 0, 1}, {1, 0, 0}});
  esse("c6-E1_6-F1_2", "case 6", "E1_6", "F1_2", {{1, 0}, {0, 1}, {1, 1}}, {{1, 1, 0}, {0, 0, 1}});
  esse("c6-E1_15-F1_2", "case 6", "E1_15", "F1_2", {{1, 1}, {0, 1}, {1, 1}}, {{0, 0, 1}, {1, 0, 0}});
  esse("c6-E1_17-F1_2", "case 6", "E1_17", "F1_2", {{0, 1}, {0, 1}, {1, 0}}, {{0, 1, 1}, {0, 1, 1}});
  esse("c6-E1_7-F1_2", "case 6", "E1_7", "F1_2", {{1, 0}, {0, 1}, {1, 0}}, {{1, 1, 0}, {0, 1, 1}});
  esse("c6-F1_2-R1_2", "case 6", "F1_2", "R1_2", {{1}, {1}}, {{1, 1}});

  esse("c7-E1_8-E1_12-first", "case 7", "E1_8", "E1_12", {{0, 0, 1}, {1, 0, 0}, {1, 1, 0}},
       {{1, 0, 1}, {0, 1, 0}, {1, 1, 0}});
  esse("c7-E1_8-E1_12-second-as-printed", "case 7", "E1_8", "E1_12", {{1, 0, 0}, {0, 1, 1}, {1, 0, 1}},
       {{1, 1, 0}, {1, 0, 0}, {0, 0, 0}}, false, {},
       "as printed R S = [[1,1,0],[1,0,0],[1,1,0]]; the last row of S should be [0,0,1]");
  esse("c7-E1_8-E1_12-second-corrected", "case 7", "E1_8", "E1_12", {{1, 0, 0}, {0, 1, 1}, {1, 0, 1}},
       {{1, 1, 0}, {1, 0, 0}, {0, 0, 1}}, true, {}, "S = R^-1 A_{E1_8}, R unimodular");
  out.push_back({"c7-intertwiner-E1_12-E1_8", "E1_12", "E1_8",
                 IntertwinerWitness{IntMatrix{{0, 0, 1}, {-1, 0, 1}, {2, 1, -1}}, true, true, true, {}, {}}, true,
                 "case 7", {}, "A_{E1_12} T = T A_{E1_8}: a map from G_{E1_12} to G_{E1_8} in the row convention"});

  esse("c14-F2_1-F2_2", "case 14", "F2_1", "F2_2", {{1, 1}, {1, 0}}, {{1, 0}, {0, 2}});
  esse("c14-E2_3-E3_4", "case 14", "E2_3", "E3_4", {{0, 0, 1}, {1, 0, 0}, {1, 1, 0}},
       {{1, 0, 1}, {0, 1, 0}, {0, 1, 0}});
  esse("c14-E2_4-E3_4", "case 14", "E2_4", "E3_4", {{1, 0, 0}, {0, 1, 1}, {1, 0, 0}},
       {{1, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  esse("c14-E2_3-F2_1", "case 14", "E2_3", "F2_1", {{0, 1}, {1, 0}, {1, 1}}, {{1, 0, 1}, {0, 1, 0}});
  esse("c14-E3_4-F2_1", "case 14", "E3_4", "F2_1", {{1, 0}, {0, 1}, {0, 1}}, {{1, 1, 1}, {1, 0, 0}});
  esse("c14-E2_4-F2_2", "case 14", "E2_4", "F2_2", {{1, 0}, {0, 1}, {1, 0}}, {{1, 1, 0}, {1, 0, 1}});
  esse("c14-E3_4-F2_2", "case 14", "E3_4", "F2_2", {{1, 1}, {1, 0}, {1, 0}}, {{1, 0, 0}, {0, 1, 1}});
  // E2_3 ~ E3_4 ~ E2_4; the second step is the (E2_4, E3_4) witness read backwards.
  out.push_back({"c14-chain-E2_3-E2_4", "E2_3", "E2_4",
                 SseChain{{EsseWitness{IntMatrix{{0, 0, 1}, {1, 0, 0}, {1, 1, 0}}, IntMatrix{{1, 0, 1}, {0, 1, 0}, {0, 1, 0}}},
                           EsseWitness{IntMatrix{{1, 1, 0}, {0, 0, 1}, {1, 0, 0}}, IntMatrix{{1, 0, 0}, {0, 1, 1}, {1, 0, 0}}}}},
                 true, "case 14", {}, "composition of two transcribed steps"});

  esse("c15-E2_5-E3_1", "case 15", "E2_5", "E3_1", {{0, 1, 0}, {0, 0, 1}, {1, 1, 0}},
       {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}});
  out.push_back({"c15-intertwiner-E3_1-E2_5", "E3_1", "E2_5",
                 IntertwinerWitness{IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}, true, false, true, {}, {}}, true,
                 "case 15", {},
                 "A_{E3_1} T = T A_{E2_5}, so T maps G_{E3_1} to G_{E2_5}; unimodular and cone-preserving, not pointed"});

  esse("c16-E2_6-E3_2", "case 16", "E2_6", "E3_2", {{0, 0, 1}, {1, 1, 0}, {0, 1, 0}},
       {{0, 0, 1}, {1, 1, 0}, {1, 1, 0}});
  esse("c16-E2_6-F3_2", "case 16", "E2_6", "F3_2", {{1, 0}, {1, 1}, {1, 0}}, {{1, 1, 0}, {0, 0, 1}}, true, {1, 0},
       "S R = [[2,1],[1,0]], which is F3_2 with its vertices swapped");
  esse("c16-E3_2-F3_2", "case 16", "E3_2", "F3_2", {{0, 1}, {1, 0}, {1, 0}}, {{1, 1, 1}, {0, 1, 0}}, true, {1, 0},
       "S R = [[2,1],[1,0]], which is F3_2 with its vertices swapped");

  esse("synthetic-swapped-c5-E1_5-E1_13", "synthetic", "E1_5", "E1_13", {{0, 0, 1}, {0, 1, 0}, {1, 1, 0}},
       {{0, 0, 1}, {1, 0, 0}, {0, 0, 1}}, false, {}, "R and S exchanged without exchanging the pair");
  return out;
}

std::vector<PointednessSystem> build_pointedness() {
  std::vector<PointednessSystem> out;
  auto sys = [&](std::string name, std::string tag, std::string a, std::string b, IntVector ua, IntVector ub,
                 std::vector<std::size_t> relabel = {}, std::string note = {}) {
    PointednessSystem s;
    s.name = std::move(name);
    s.case_tag = std::move(tag);
    s.id_a = std::move(a);
    s.id_b = std::move(b);
    s.relabel_a = relabel;
    s.relabel_b = relabel;
    s.unit_a = std::move(ua);
    s.unit_b = std::move(ub);
    s.note = std::move(note);
    out.push_back(std::move(s));
  };
  sys("c5-F1_1-(2,1)-(2,2)", "case 5", "F1_1", "F1_1", {2, 1}, {2, 2}, {}, "E1_5 vs E1_13");
  sys("c5-F1_1-(2,1)-(1,2)", "case 5", "F1_1", "F1_1", {2, 1}, {1, 2}, {}, "E1_5 vs E1_14");
  sys("c5-F1_1-(2,2)-(1,2)", "case 5", "F1_1", "F1_1", {2, 2}, {1, 2}, {}, "E1_13 vs E1_14");
  sys("c14-F2_1-(2,2)-(1,2)", "case 14", "F2_1", "F2_1", {2, 2}, {1, 2}, {}, "E2_3 vs E3_4");
  sys("c14-F2_2-(2,1)-(3,1)", "case 14", "F2_2", "F2_2", {2, 1}, {3, 1}, {}, "E2_4 vs E3_4");
  sys("c15-E3_1-E2_5-(1,1,1)", "case 15", "E3_1", "E2_5", {1, 1, 1}, {1, 1, 1}, {},
      "T A_{E2_5} = A_{E3_1} T, the orientation of the printed intertwiner");
  sys("c15-E2_5-E3_1-(1,1,1)", "case 15", "E2_5", "E3_1", {1, 1, 1}, {1, 1, 1}, {}, "the opposite orientation");
  sys("c16-F3_2-(3,1)-(2,1)", "case 16", "F3_2", "F3_2", {3, 1}, {2, 1}, {1, 0},
      "E2_6 vs E3_2, over F3_2 with its vertices swapped");
  return out;
}

std::vector<MoveDerivation> build_derivations() {
  std::vector<MoveDerivation> out;
  auto split = [&](std::string name, std::string tag, std::string in, MoveKind kind, std::string v,
                   EdgePartition p, std::string expected) {
    MoveDerivation d;
    d.name = std::move(name);
    d.case_tag = std::move(tag);
    d.input_id = std::move(in);
    d.kind = kind;
    d.spec.vertex = std::move(v);
    d.maximal = p.empty();
    d.spec.partition = std::move(p);
    d.spec.allow_empty_parts = kind == MoveKind::GenInSplit;
    d.expected_id = std::move(expected);
    out.push_back(std::move(d));
  };
  auto add = [&](std::string name, std::string tag, std::string in, std::vector<std::string> targets,
                 std::string expected) {
    MoveDerivation d;
    d.name = std::move(name);
    d.case_tag = std::move(tag);
    d.input_id = std::move(in);
    d.kind = MoveKind::SourceAdd;
    d.targets = std::move(targets);
    d.expected_id = std::move(expected);
    out.push_back(std::move(d));
  };
  const auto out_s = MoveKind::OutSplit;
  const auto in_s = MoveKind::InSplit;

  split("c5-out-F1_1-w1", "case 5", "F1_1", out_s, "w1", {}, "E1_5");
  add("c5-source-F1_1-w2", "case 5", "F1_1", {"w2"}, "E1_13");
  add("c5-source-F1_1-w1", "case 5", "F1_1", {"w1"}, "E1_14");
  add("c5-source-F1_1-w1w2", "case 5", "F1_1", {"w1", "w2"}, "E1_16");
  split("c5-out-E1_16-v1", "case 5", "E1_16", out_s, "v1", {}, "x4-F2_1");

  split("c6-out-F1_2-w1", "case 6", "F1_2", out_s, "w1", {}, "E1_6");
  split("c6-in-F1_2-w1", "case 6", "F1_2", in_s, "w1", {}, "E1_7");
  add("c6-source-F1_2-w1", "case 6", "F1_2", {"w1"}, "E1_15");
  add("c6-source-F1_2-w1w2", "case 6", "F1_2", {"w1", "w2"}, "E1_17");
  split("c6-out-R1_2-w", "case 6", "R1_2", out_s, "w", {}, "F1_2");

  split("c7-out-E1_8-v3", "case 7", "E1_8", out_s, "v3", {{"e", "f"}, {"g"}}, "x4-A");
  split("c7-in-E1_12-v1", "case 7", "E1_12", in_s, "v1", {{"f"}, {"e", "g"}}, "x4-A");
  split("c7-gen-in-E1_12-v1", "case 7", "E1_12", MoveKind::GenInSplit, "v1", {{}, {"f", "e", "g"}}, "x4-F4_1");
  add("c7-source-E1_12-all", "case 7", "E1_12", {"v1", "v2", "v3"}, "x4-F4_1");
  split("c7-out-F4_1-M", "case 7", "x4-F4_1", out_s, "M", {}, "x6-F3_1");

  split("c8-out-F1_3-w2", "case 8", "F1_3", out_s, "w2", {{"f"}, {"e", "g"}}, "E1_9");
  split("c9-out-F1_4-w1", "case 9", "F1_4", out_s, "w1", {}, "E1_10");

  split("c14-out-F2_1-w1", "case 14", "F2_1", out_s, "w1", {{"e", "f"}, {"g"}}, "E2_3");
  split("c14-in-F2_2-w1", "case 14", "F2_2", in_s, "w1", {{"e", "f"}, {"g"}}, "E2_4");
  split("c14-in-F2_1-w2", "case 14", "F2_1", in_s, "w2", {}, "E3_4");
  split("c14-out-F2_2-w2", "case 14", "F2_2", out_s, "w2", {}, "E3_4");

  split("c15-out-E2_5-v3", "case 15", "E2_5", out_s, "v3", {}, "x4-C15");
  split("c15-in-E3_1-v2", "case 15", "E3_1", in_s, "v2", {}, "x4-C15");

  split("c16-out-F3_2-w2", "case 16", "F3_2", out_s, "w2", {{"h", "f"}, {"g"}}, "E2_6");
  split("c16-in-F3_2-w2", "case 16", "F3_2", in_s, "w2", {{"e", "f"}, {"g"}}, "E3_2");

  split("c17-out-R1_3-w", "case 17", "R1_3", out_s, "w", {}, "E3_3");
  split("c19-out-F3_1-w2", "case 19", "F3_1", out_s, "w2", {{"e", "g"}, {"f", "h"}}, "E4_2");
  return out;
}

std::vector<UnitalDerivation> build_unital() {
  return {{"c6-unital-E1_17-E1_7", "case 6", "E1_17", "E1_7", "F1_2", "w1", {{}, {"a", "c"}}, {{"a"}, {"c"}}}};
}

}  // namespace sftkit::detail
