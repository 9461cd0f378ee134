#include "sftkit/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace sftkit {
namespace {

constexpr long kSafeInteger = (1L << 53) - 1;

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str_from_json(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_from_json(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be a list");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(str_from_json(x, what));
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(int_from_json(j));
  if (!j.is_string()) bad("rational must be an integer or a \"p/q\" string");
  Rat r;
  if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0) bad("bad rational \"" + j.get<std::string>() + "\"");
  r.canonicalize();
  return r;
}

Json to_json(const Rat& r) {
  if (r.get_den() == 1) return sftkit::to_json(Int(r.get_num()));
  return r.get_str();
}

Json partition_to_json(const EdgePartition& p) {
  Json out = Json::array();
  for (const auto& part : p) out.push_back(part);
  return out;
}

EdgePartition partition_from_json(const Json& j) {
  if (!j.is_array()) bad("partition must be a list of edge-id lists");
  EdgePartition p;
  for (const auto& part : j) p.push_back(strings_from_json(part, "edge id"));
  return p;
}

Json esse_to_json(const EsseWitness& w) { return Json{{"R", to_json(w.R)}, {"S", to_json(w.S)}}; }
EsseWitness esse_from_json(const Json& j) {
  return {matrix_from_json(field(j, "R")), matrix_from_json(field(j, "S"))};
}

}  // namespace

Json to_json(const Int& x) {
  if (x.fits_slong_p() && abs(x) <= kSafeInteger) return x.get_si();
  return x.get_str();
}

Json to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) != 0) bad("bad integer \"" + j.get<std::string>() + "\"");
    return x;
  }
  bad("expected an integer");
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a list of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) bad("matrix must be a list of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) bad("matrix rows have different lengths");
  return IntMatrix::from_rows(rows);
}

Json to_json(const DirectedMultigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({g.vertices()[e.source], g.vertices()[e.range], e.id});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

DirectedMultigraph graph_from_json(const Json& j) {
  auto vertices = strings_from_json(field(j, "vertices"), "vertex id");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be a list");
  std::vector<std::vector<std::string>> named;
  std::size_t n = 0;
  for (const auto& e : edges) {
    auto parts = strings_from_json(e, "edge entry");
    ++n;
    if (parts.size() == 2) parts.push_back("e" + std::to_string(n));
    if (parts.size() != 3) bad("an edge is [source, range] or [source, range, id]");
    named.push_back(std::move(parts));
  }
  try {
    return DirectedMultigraph::from_named(std::move(vertices), named);
  } catch (const std::out_of_range& e) {
    bad(e.what());
  }
}

Json to_json(const Certificate& c) {
  Json out{{"kind", certificate_kind(c)}};
  if (const auto* e = std::get_if<EsseWitness>(&c)) {
    out.update(esse_to_json(*e));
  } else if (const auto* s = std::get_if<SseChain>(&c)) {
    Json steps = Json::array();
    for (const auto& st : s->steps) steps.push_back(esse_to_json(st));
    out["steps"] = steps;
    out["lag"] = s->lag();
  } else if (const auto* s = std::get_if<SeWitness>(&c)) {
    out.update(esse_to_json({s->R, s->S}));
    out["lag"] = s->lag;
  } else {
    const auto& t = std::get<IntertwinerWitness>(c);
    out["T"] = to_json(t.T);
    out["flags"] = {{"unimodular", t.unimodular}, {"pointed", t.pointed}, {"cone_preserving", t.cone_preserving}};
    if (!t.unit_a.empty()) out["unit_a"] = to_json(t.unit_a);
    if (!t.unit_b.empty()) out["unit_b"] = to_json(t.unit_b);
  }
  return out;
}

Certificate certificate_from_json(const Json& j) {
  const std::string kind = str_from_json(field(j, "kind"), "kind");
  if (kind == "esse") return esse_from_json(j);
  if (kind == "sse") {
    SseChain chain;
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) bad("steps must be a list");
    for (const auto& s : steps) chain.steps.push_back(esse_from_json(s));
    return chain;
  }
  if (kind == "se") {
    const Json& lag = field(j, "lag");
    if (!lag.is_number_unsigned()) bad("lag must be a nonnegative integer");
    return SeWitness{matrix_from_json(field(j, "R")), matrix_from_json(field(j, "S")), lag.get<unsigned long>()};
  }
  if (kind == "intertwiner") {
    IntertwinerWitness w;
    w.T = matrix_from_json(field(j, "T"));
    if (j.contains("flags")) {
      const Json& f = j.at("flags");
      w.unimodular = f.value("unimodular", false);
      w.pointed = f.value("pointed", false);
      w.cone_preserving = f.value("cone_preserving", false);
    }
    if (j.contains("unit_a")) w.unit_a = vector_from_json(j.at("unit_a"));
    if (j.contains("unit_b")) w.unit_b = vector_from_json(j.at("unit_b"));
    return w;
  }
  bad("unknown certificate kind \"" + kind + "\"");
}

Json to_json(const MoveRecord& r) {
  Json out{{"kind", to_string(r.kind)}, {"input", to_json(r.input)}};
  if (r.kind == MoveKind::SourceAdd) {
    out["targets"] = r.targets;
  } else {
    Json spec{{"vertex", r.spec.vertex}};
    if (r.kind != MoveKind::SourceElim) {
      spec["partition"] = partition_to_json(r.spec.partition);
      spec["allow_empty_parts"] = r.spec.allow_empty_parts;
    }
    out["spec"] = spec;
  }
  out["output"] = to_json(r.output);
  if (r.esse_witness) out["witness"] = esse_to_json(*r.esse_witness);
  return out;
}

MoveRecord move_from_json(const Json& j) {
  MoveRecord r;
  try {
    r.kind = move_kind_from_string(str_from_json(field(j, "kind"), "kind"));
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
  r.input = graph_from_json(field(j, "input"));
  if (r.kind == MoveKind::SourceAdd) {
    r.targets = strings_from_json(field(j, "targets"), "target");
  } else {
    const Json& spec = field(j, "spec");
    r.spec.vertex = str_from_json(field(spec, "vertex"), "vertex");
    if (r.kind != MoveKind::SourceElim) {
      r.spec.partition = partition_from_json(field(spec, "partition"));
      r.spec.allow_empty_parts = spec.value("allow_empty_parts", r.kind == MoveKind::GenInSplit);
    }
  }
  if (j.contains("output")) r.output = graph_from_json(j.at("output"));
  if (j.contains("witness")) r.esse_witness = esse_from_json(j.at("witness"));
  return r;
}

Json to_json(const DeltaClaim& c) {
  Json w = Json::array(), f = Json::array();
  for (const auto& v : c.w) w.push_back(to_json(v));
  for (const auto& v : c.free_part) f.push_back(to_json(v));
  return Json{{"d", to_json(c.d)}, {"w", w}, {"free_part", f}, {"rendering", c.rendering}};
}

DeltaClaim delta_claim_from_json(const Json& j) {
  DeltaClaim c;
  c.d = int_from_json(field(j, "d"));
  const Json& w = field(j, "w");
  if (!w.is_array()) bad("w must be a list");
  // A single vector is accepted as shorthand for one Z[1/d] direction.
  if (!w.empty() && !w.front().is_array())
    c.w.push_back(vector_from_json(w));
  else
    for (const auto& v : w) c.w.push_back(vector_from_json(v));
  if (j.contains("free_part"))
    for (const auto& v : j.at("free_part")) c.free_part.push_back(vector_from_json(v));
  c.rendering = j.value("rendering", std::string());
  return c;
}

Json to_json(const Poly& p) { return to_json(p.coeffs()); }
Poly poly_from_json(const Json& j) { return Poly(vector_from_json(j)); }

Json to_json(const AlgebraicReal& a) {
  return Json{{"minpoly", to_json(a.minpoly())}, {"lo", to_json(a.lo())}, {"hi", to_json(a.hi())}};
}

AlgebraicReal algebraic_from_json(const Json& j) {
  return AlgebraicReal(poly_from_json(field(j, "minpoly")), rat_from_json(field(j, "lo")), rat_from_json(field(j, "hi")));
}

Json to_json(const DimElement& e) {
  return Json{{"matrix_id", e.group()->id()}, {"v", to_json(e.v())}, {"k", e.k()}};
}

Json to_json(const SmallGraphReport& r, const DirectedMultigraph& g) {
  auto names = [&](const VertexSet& s) {
    Json out = Json::array();
    for (auto i : s) out.push_back(g.vertices()[i]);
    return out;
  };
  Json hs = Json::array();
  for (const auto& s : r.hereditary_saturated) hs.push_back(names(s));
  return Json{{"vertex_count", r.vertex_count}, {"has_parallel_edges", r.has_parallel_edges},
              {"sinks", names(r.sinks)},        {"sources", names(r.sources)},
              {"hereditary_saturated", hs},     {"is_small", r.is_small}};
}

namespace {

void dump_into(std::string& out, const Json& j, int indent, int depth) {
  const auto scalar = [](const Json& x) { return !x.is_array() && !x.is_object(); };
  if (j.is_array() && (j.empty() || std::all_of(j.begin(), j.end(), scalar))) {
    out += j.dump();
    return;
  }
  if (!j.is_array() && !j.is_object()) {
    out += j.dump();
    return;
  }
  if (j.empty()) {
    out += j.dump();
    return;
  }
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(it.key()).dump() + ": ";
    dump_into(out, it.value(), indent, depth + 1);
  }
  out += "\n" + std::string(static_cast<std::size_t>(indent * depth), ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump_pretty(const Json& j, int indent) {
  std::string out;
  dump_into(out, j, indent, 0);
  return out;
}

}  // namespace sftkit
