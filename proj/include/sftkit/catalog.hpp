#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/equivalence.hpp"
#include "sftkit/json_io.hpp"
#include "sftkit/k0.hpp"
#include "sftkit/moves.hpp"

namespace sftkit {

struct CatalogEntry {
  std::string id;                  // "E1_8", "F2_1", "x4-A", ...
  DirectedMultigraph graph;
  bool small = false;              // expected value of the small-graph predicate
  std::string group_tag;           // ids sharing one report row, comma separated; empty for auxiliaries
  // Expected report columns as plain text; empty for auxiliaries.
  std::string expected_k0;
  std::string expected_kgr;
  std::string expected_pf;
  std::optional<double> expected_pf_value;  // numeric reading of expected_pf
  std::optional<DeltaClaim> delta_claim;
  std::vector<std::string> reductions;      // names of move derivations touching this entry
  std::vector<std::string> aliases;         // labels used for this graph elsewhere
  std::string note;

  IntMatrix matrix() const { return adjacency_matrix(graph); }
};

struct FixtureWitness {
  std::string name;
  std::string id_a;
  std::string id_b;
  Certificate certificate;
  bool expected = true;
  std::string case_tag;           // "case 5", "case 14", ...
  // Vertex relabelling applied to B before checking (the witness certifies permute(B, relabel_b)).
  std::vector<std::size_t> relabel_b;
  std::string note;
};

// An affine pointedness problem: T with A T = T B and unit_a T = unit_b.
struct PointednessSystem {
  std::string name;
  std::string case_tag;
  std::string id_a;
  std::string id_b;
  std::vector<std::size_t> relabel_a;
  std::vector<std::size_t> relabel_b;
  IntVector unit_a;
  IntVector unit_b;
  bool require_unimodular = true;
  Verdict expected = Verdict::Unconditional;
  std::string note;
};

struct MoveDerivation {
  std::string name;
  std::string case_tag;
  std::string input_id;
  MoveKind kind = MoveKind::OutSplit;
  SplitSpec spec;
  bool maximal = false;  // partition computed as the maximal one at spec.vertex
  std::vector<std::string> targets;
  std::string expected_id;  // result must be isomorphic to this entry
};

struct UnitalDerivation {
  std::string name;
  std::string case_tag;
  std::string id_e;
  std::string id_f;
  std::string g_id;
  std::string w;
  EdgePartition part_e;
  EdgePartition part_f;
};

const std::vector<CatalogEntry>& load_catalog();
const std::vector<FixtureWitness>& load_fixtures();
const std::vector<PointednessSystem>& load_pointedness_systems();
const std::vector<MoveDerivation>& load_move_derivations();
const std::vector<UnitalDerivation>& load_unital_derivations();

// Looks up an id or an alias; nullptr when unknown.
const CatalogEntry* find_entry(const std::string& id);
// Throws std::out_of_range when unknown.
const CatalogEntry& catalog_entry(const std::string& id);
std::vector<const CatalogEntry*> small_entries();

// Matrix of B as the fixture sees it (relabel_b applied).
IntMatrix fixture_matrix_b(const FixtureWitness& f);
VerifyResult verify_fixture(const FixtureWitness& f);

MoveRecord run_derivation(const MoveDerivation& d);
// Output isomorphic to the expected entry.
CheckResult check_derivation(const MoveDerivation& d);
CheckResult check_unital(const UnitalDerivation& d);

IntertwinerSearchResult solve_pointedness(const PointednessSystem& s);

// Registered Delta-claims and reductions, for kgr_description.
const KgrRegistry& kgr_registry();

// One row per small graph, computed from the matrix and compared with the stored expectations.
struct Table1Row {
  std::string id;
  std::string group_tag;
  std::string k0;
  std::string expected_k0;
  bool k0_match = false;
  std::string kgr;
  std::string kgr_via;  // reduction chain, "F1_1" or "F1_2 > R1_2"
  std::string expected_kgr;
  bool kgr_match = false;
  std::string pf;       // 5 decimals
  std::string minpoly;  // minimal polynomial of the Perron root
  std::string expected_pf;
  bool pf_match = false;  // within 1e-3
  bool small = false;
};

struct Discrepancy {
  std::string id;
  std::string column;
  std::string expected;
  std::string computed;
  std::string detail;
};

struct Table1Report {
  std::vector<Table1Row> rows;
  std::vector<Discrepancy> discrepancies;
};

Table1Report table1_report();

// Data file: {"format", "version", "entries", "fixtures", "pointedness", "derivations", "sha256"}
// where sha256 is taken over the compact dump of the document without the sha256 field.
Json catalog_document();
std::string sha256_hex(const std::string& bytes);
std::string catalog_file_contents();  // pretty-printed document with checksum

struct CatalogFileCheck {
  bool ok = false;
  std::vector<std::string> problems;
};
// Checks the checksum, then rebuilds every entry and fixture from the file and compares with
// the embedded catalog.
CatalogFileCheck verify_catalog_file(const std::string& contents);

}  // namespace sftkit
