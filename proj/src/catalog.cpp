#include "sftkit/catalog.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "catalog_internal.hpp"
#include "sftkit/perron.hpp"

namespace sftkit {

const std::vector<CatalogEntry>& load_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    auto out = detail::build_entries();
    for (const auto& d : detail::build_derivations())
      for (auto& e : out)
        if (e.id == d.input_id || e.id == d.expected_id) e.reductions.push_back(d.name);
    return out;
  }();
  return entries;
}

const std::vector<FixtureWitness>& load_fixtures() {
  static const std::vector<FixtureWitness> f = detail::build_fixtures();
  return f;
}

const std::vector<PointednessSystem>& load_pointedness_systems() {
  static const std::vector<PointednessSystem> s = detail::build_pointedness();
  return s;
}

const std::vector<MoveDerivation>& load_move_derivations() {
  static const std::vector<MoveDerivation> d = detail::build_derivations();
  return d;
}

const std::vector<UnitalDerivation>& load_unital_derivations() {
  static const std::vector<UnitalDerivation> u = detail::build_unital();
  return u;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : load_catalog())
    if (e.id == id) return &e;
  for (const auto& e : load_catalog())
    for (const auto& a : e.aliases)
      if (a == id) return &e;
  return nullptr;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  const CatalogEntry* e = find_entry(id);
  if (!e) throw std::out_of_range("unknown catalog id \"" + id + "\"");
  return *e;
}

std::vector<const CatalogEntry*> small_entries() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : load_catalog())
    if (e.small) out.push_back(&e);
  return out;
}

namespace {

IntMatrix relabelled(const std::string& id, const std::vector<std::size_t>& perm) {
  IntMatrix m = catalog_entry(id).matrix();
  return perm.empty() ? m : permute(m, perm);
}

}  // namespace

IntMatrix fixture_matrix_b(const FixtureWitness& f) { return relabelled(f.id_b, f.relabel_b); }

VerifyResult verify_fixture(const FixtureWitness& f) {
  return verify(f.certificate, catalog_entry(f.id_a).matrix(), fixture_matrix_b(f));
}

MoveRecord run_derivation(const MoveDerivation& d) {
  const DirectedMultigraph& g = catalog_entry(d.input_id).graph;
  SplitSpec spec = d.spec;
  if (d.maximal)
    spec.partition = d.kind == MoveKind::OutSplit ? maximal_out_partition(g, spec.vertex)
                                                  : maximal_in_partition(g, spec.vertex);
  return make_move(d.kind, g, spec, d.targets);
}

CheckResult check_derivation(const MoveDerivation& d) {
  MoveRecord r;
  try {
    r = run_derivation(d);
  } catch (const std::exception& e) {
    return {false, std::string("move failed: ") + e.what()};
  }
  const auto& want = catalog_entry(d.expected_id).graph;
  if (!graphs_isomorphic(r.output, want))
    return {false, "result " + adjacency_matrix(r.output).to_string() + " is not isomorphic to " + d.expected_id};
  return {true, {}};
}

CheckResult check_unital(const UnitalDerivation& d) {
  UnitalInSplitWitness w{catalog_entry(d.g_id).graph, d.w, d.part_e, d.part_f};
  return unital_in_split_check(catalog_entry(d.id_e).graph, catalog_entry(d.id_f).graph, w);
}

IntertwinerSearchResult solve_pointedness(const PointednessSystem& s) {
  IntertwinerSearchOptions opts;
  opts.require_pointed = true;
  opts.require_unimodular = s.require_unimodular;
  opts.unit_a = s.unit_a;
  opts.unit_b = s.unit_b;
  return search_intertwiner(relabelled(s.id_a, s.relabel_a), relabelled(s.id_b, s.relabel_b), opts);
}

const KgrRegistry& kgr_registry() {
  static const KgrRegistry reg = [] {
    KgrRegistry r;
    for (const auto& e : load_catalog()) {
      r.matrices.emplace_back(e.id, e.matrix());
      if (e.delta_claim) r.claims.push_back({e.id, e.matrix(), *e.delta_claim});
    }
    for (const auto& [id, target] : detail::build_reductions()) {
      std::string how;
      for (const auto& d : load_move_derivations())
        if ((d.input_id == target && d.expected_id == id) || (d.input_id == id && d.expected_id == target))
          how = d.name;
      if (how.empty()) how = "elementary shift equivalence";
      r.reductions.push_back({id, catalog_entry(id).matrix(), target, how});
    }
    return r;
  }();
  return reg;
}

Table1Report table1_report() {
  Table1Report rep;
  for (const CatalogEntry* e : small_entries()) {
    const IntMatrix a = e->matrix();
    Table1Row row;
    row.id = e->id;
    row.group_tag = e->group_tag;
    row.small = small_graph_report(e->graph).is_small;
    row.k0 = k0_group(a).rendering;
    row.expected_k0 = e->expected_k0;
    row.k0_match = row.k0 == row.expected_k0;
    const KgrDescription kgr = kgr_description(a, &kgr_registry());
    row.kgr = kgr.rendering;
    for (const auto& v : kgr.via) row.kgr_via += (row.kgr_via.empty() ? "" : " > ") + v;
    row.expected_kgr = e->expected_kgr;
    row.kgr_match = row.kgr == row.expected_kgr;
    const AlgebraicReal rho = spectral_radius(a);
    row.pf = rho.to_decimal(5);
    const MinimalPolynomial mp = minimal_polynomial(rho);
    row.minpoly = mp.poly.to_string();
    row.expected_pf = e->expected_pf;
    row.pf_match = e->expected_pf_value && std::fabs(rho.approx() - *e->expected_pf_value) <= 1e-3;

    if (!row.small) rep.discrepancies.push_back({e->id, "small", "true", "false", "fails the small-graph predicate"});
    if (!row.k0_match) rep.discrepancies.push_back({e->id, "K0", row.expected_k0, row.k0, {}});
    if (!row.kgr_match) rep.discrepancies.push_back({e->id, "Kgr", row.expected_kgr, row.kgr, row.kgr_via});
    if (!row.pf_match)
      rep.discrepancies.push_back({e->id, "PF", row.expected_pf, row.pf, "minimal polynomial " + row.minpoly});
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
    throw std::runtime_error("SHA-256 digest failed");
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

namespace {

constexpr const char* kFormat = "sftkit-catalog";
constexpr int kVersion = 1;

Json entry_json(const CatalogEntry& e) {
  Json j{{"id", e.id}, {"graph", to_json(e.graph)}, {"matrix", to_json(e.matrix())}, {"small", e.small}};
  if (!e.group_tag.empty()) {
    j["group"] = e.group_tag;
    j["expected"] = {{"k0", e.expected_k0}, {"kgr", e.expected_kgr}, {"pf", e.expected_pf}};
    if (e.expected_pf_value) j["expected"]["pf_value"] = *e.expected_pf_value;
  }
  if (e.delta_claim) j["delta_claim"] = to_json(*e.delta_claim);
  if (!e.reductions.empty()) j["derivations"] = e.reductions;
  if (!e.aliases.empty()) j["aliases"] = e.aliases;
  if (!e.note.empty()) j["note"] = e.note;
  return j;
}

Json fixture_json(const FixtureWitness& f) {
  Json j{{"name", f.name}, {"a", f.id_a}, {"b", f.id_b}, {"case", f.case_tag},
         {"certificate", to_json(f.certificate)}, {"expected", f.expected}};
  if (!f.relabel_b.empty()) j["relabel_b"] = f.relabel_b;
  if (!f.note.empty()) j["note"] = f.note;
  return j;
}

Json pointedness_json(const PointednessSystem& s) {
  Json j{{"name", s.name},
         {"case", s.case_tag},
         {"a", s.id_a},
         {"b", s.id_b},
         {"unit_a", to_json(s.unit_a)},
         {"unit_b", to_json(s.unit_b)},
         {"unimodular", s.require_unimodular},
         {"expected", to_string(s.expected)}};
  if (!s.relabel_a.empty()) j["relabel_a"] = s.relabel_a;
  if (!s.relabel_b.empty()) j["relabel_b"] = s.relabel_b;
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

Json derivation_json(const MoveDerivation& d) {
  Json j{{"name", d.name}, {"case", d.case_tag}, {"input", d.input_id}, {"kind", to_string(d.kind)}};
  if (d.kind == MoveKind::SourceAdd) {
    j["targets"] = d.targets;
  } else {
    j["vertex"] = d.spec.vertex;
    if (d.maximal)
      j["partition"] = "maximal";
    else
      j["partition"] = d.spec.partition;
  }
  j["expected"] = d.expected_id;
  return j;
}

}  // namespace

Json catalog_document() {
  Json entries = Json::array(), fixtures = Json::array(), systems = Json::array(), derivations = Json::array(),
       unital = Json::array(), reductions = Json::array();
  for (const auto& e : load_catalog()) entries.push_back(entry_json(e));
  for (const auto& f : load_fixtures()) fixtures.push_back(fixture_json(f));
  for (const auto& s : load_pointedness_systems()) systems.push_back(pointedness_json(s));
  for (const auto& d : load_move_derivations()) derivations.push_back(derivation_json(d));
  for (const auto& u : load_unital_derivations())
    unital.push_back({{"name", u.name}, {"case", u.case_tag}, {"e", u.id_e}, {"f", u.id_f}, {"g", u.g_id},
                      {"w", u.w}, {"part_e", u.part_e}, {"part_f", u.part_f}});
  for (const auto& r : kgr_registry().reductions)
    reductions.push_back({{"id", r.id}, {"target", r.target_id}, {"how", r.how}});
  return Json{{"format", kFormat},        {"version", kVersion},     {"entries", entries},
              {"fixtures", fixtures},     {"pointedness", systems}, {"derivations", derivations},
              {"unital", unital},         {"reductions", reductions}};
}

std::string catalog_file_contents() {
  Json doc = catalog_document();
  const std::string digest = sha256_hex(doc.dump());
  doc["sha256"] = digest;
  return dump_pretty(doc, 1) + "\n";
}

CatalogFileCheck verify_catalog_file(const std::string& contents) {
  CatalogFileCheck out;
  auto problem = [&](std::string p) { out.problems.push_back(std::move(p)); };
  Json doc;
  try {
    doc = Json::parse(contents);
  } catch (const Json::parse_error& e) {
    problem(std::string("not valid JSON: ") + e.what());
    return out;
  }
  if (!doc.is_object() || doc.value("format", std::string()) != kFormat) {
    problem("not a catalog file");
    return out;
  }
  if (!doc.contains("sha256") || !doc["sha256"].is_string()) {
    problem("missing sha256");
    return out;
  }
  const std::string stored = doc["sha256"].get<std::string>();
  doc.erase("sha256");
  const std::string actual = sha256_hex(doc.dump());
  if (stored != actual) problem("checksum mismatch: stored " + stored + ", computed " + actual);

  // Re-derive from the file itself: matrices from graphs, fixtures against the file's matrices.
  std::map<std::string, IntMatrix> matrices;
  try {
    for (const auto& e : doc.at("entries")) {
      const std::string id = e.at("id").get<std::string>();
      const DirectedMultigraph g = graph_from_json(e.at("graph"));
      const IntMatrix m = adjacency_matrix(g);
      if (m != matrix_from_json(e.at("matrix"))) problem(id + ": stored matrix disagrees with the graph");
      if (small_graph_report(g).is_small != e.at("small").get<bool>()) problem(id + ": small-graph flag is wrong");
      const CatalogEntry* built = find_entry(id);
      if (!built)
        problem(id + ": not in the built-in catalog");
      else if (built->matrix() != m)
        problem(id + ": matrix differs from the built-in catalog");
      if (e.contains("expected") && e.at("expected").at("k0").get<std::string>() != k0_group(m).rendering)
        problem(id + ": K0 differs from the stored expectation");
      matrices[id] = m;
    }
    for (const auto& f : doc.at("fixtures")) {
      const std::string name = f.at("name").get<std::string>();
      const auto a = matrices.find(f.at("a").get<std::string>());
      const auto b = matrices.find(f.at("b").get<std::string>());
      if (a == matrices.end() || b == matrices.end()) {
        problem(name + ": unknown matrix id");
        continue;
      }
      IntMatrix mb = b->second;
      if (f.contains("relabel_b")) mb = permute(mb, f.at("relabel_b").get<std::vector<std::size_t>>());
      const bool ok = verify(certificate_from_json(f.at("certificate")), a->second, mb).ok;
      if (ok != f.at("expected").get<bool>()) problem(name + ": verification result differs from the expectation");
    }
  } catch (const std::exception& e) {
    problem(std::string("malformed catalog: ") + e.what());
  }
  if (doc.dump() != catalog_document().dump()) problem("file differs from the built-in catalog");
  out.ok = out.problems.empty();
  return out;
}

}  // namespace sftkit
