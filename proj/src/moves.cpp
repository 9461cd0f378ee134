#include "sftkit/moves.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace sftkit {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::OutSplit: return "out_split";
    case MoveKind::InSplit: return "in_split";
    case MoveKind::GenInSplit: return "gen_in_split";
    case MoveKind::SourceElim: return "source_elim";
    case MoveKind::SourceAdd: return "source_add";
  }
  return "?";
}

MoveKind move_kind_from_string(const std::string& s) {
  for (MoveKind k : {MoveKind::OutSplit, MoveKind::InSplit, MoveKind::GenInSplit, MoveKind::SourceElim,
                     MoveKind::SourceAdd})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown move kind " + s);
}

EdgePartition maximal_out_partition(const DirectedMultigraph& g, const std::string& v) {
  EdgePartition p;
  for (const auto& e : g.out_edges(g.vertex_index(v))) p.push_back({e});
  return p;
}

EdgePartition maximal_in_partition(const DirectedMultigraph& g, const std::string& v) {
  EdgePartition p;
  for (const auto& e : g.in_edges(g.vertex_index(v))) p.push_back({e});
  return p;
}

namespace {

enum class Side { Out, In };

// Edge id -> part index, after checking that the parts partition the edges at v on this side.
std::map<std::string, std::size_t> part_index(const DirectedMultigraph& g, std::size_t v, const SplitSpec& spec,
                                              Side side) {
  const auto edges = side == Side::Out ? g.out_edges(v) : g.in_edges(v);
  std::set<std::string> expected(edges.begin(), edges.end());
  if (spec.partition.empty()) throw std::invalid_argument("partition has no parts");
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < spec.partition.size(); ++i) {
    if (spec.partition[i].empty() && !spec.allow_empty_parts) throw std::invalid_argument("empty part in a proper split");
    for (const auto& e : spec.partition[i]) {
      if (!expected.count(e))
        throw std::invalid_argument("edge " + e + (side == Side::Out ? " does not leave " : " does not enter ") + spec.vertex);
      if (!idx.emplace(e, i).second) throw std::invalid_argument("edge " + e + " appears in two parts");
    }
  }
  if (idx.size() != expected.size()) throw std::invalid_argument("partition does not cover every edge at " + spec.vertex);
  return idx;
}

struct SplitLayout {
  std::vector<std::vector<std::size_t>> copies;  // old vertex -> new indices
  std::vector<std::size_t> origin;               // new vertex -> old vertex
  std::vector<std::string> names;
};

SplitLayout layout(const DirectedMultigraph& g, std::size_t v, std::size_t n) {
  SplitLayout l;
  l.copies.resize(g.vertex_count());
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    const std::size_t k = u == v ? n : 1;
    for (std::size_t i = 0; i < k; ++i) {
      l.copies[u].push_back(l.names.size());
      l.origin.push_back(u);
      l.names.push_back(k == 1 ? g.vertices()[u] : g.vertices()[u] + "." + std::to_string(i + 1));
    }
  }
  return l;
}

DirectedMultigraph split(const DirectedMultigraph& g, const SplitSpec& spec, Side side) {
  const std::size_t v = g.vertex_index(spec.vertex);
  const auto idx = part_index(g, v, spec, side);
  const std::size_t n = spec.partition.size();
  const SplitLayout l = layout(g, v, n);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    // The split side is fixed by the part; the other end at v is duplicated over all copies.
    std::vector<std::size_t> src, rng;
    if (side == Side::Out) {
      src = {e.source == v ? l.copies[v][idx.at(e.id)] : l.copies[e.source][0]};
      rng = l.copies[e.range];
    } else {
      rng = {e.range == v ? l.copies[v][idx.at(e.id)] : l.copies[e.range][0]};
      src = l.copies[e.source];
    }
    const bool dup = src.size() * rng.size() > 1;
    std::size_t k = 0;
    for (auto s : src)
      for (auto r : rng) edges.push_back({dup ? e.id + "." + std::to_string(++k) : e.id, s, r});
  }
  return DirectedMultigraph(l.names, std::move(edges));
}

}  // namespace

DirectedMultigraph out_split(const DirectedMultigraph& g, const SplitSpec& spec) {
  if (g.is_sink(g.vertex_index(spec.vertex))) throw std::invalid_argument("cannot out-split the sink " + spec.vertex);
  SplitSpec proper = spec;
  proper.allow_empty_parts = false;
  return split(g, proper, Side::Out);
}

DirectedMultigraph in_split(const DirectedMultigraph& g, const SplitSpec& spec) {
  if (g.is_source(g.vertex_index(spec.vertex))) throw std::invalid_argument("cannot in-split the source " + spec.vertex);
  SplitSpec proper = spec;
  proper.allow_empty_parts = false;
  return split(g, proper, Side::In);
}

DirectedMultigraph gen_in_split(const DirectedMultigraph& g, const SplitSpec& spec) {
  const std::size_t w = g.vertex_index(spec.vertex);
  if (g.is_sink(w) || g.is_source(w)) throw std::invalid_argument(spec.vertex + " must emit and receive an edge");
  SplitSpec general = spec;
  general.allow_empty_parts = true;
  return split(g, general, Side::In);
}

DirectedMultigraph source_eliminate(const DirectedMultigraph& g, const std::string& v) {
  const std::size_t s = g.vertex_index(v);
  if (!g.is_source(s)) throw std::invalid_argument(v + " is not a source");
  std::vector<std::string> names;
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    if (u != s) names.push_back(g.vertices()[u]);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.source == s) continue;
    edges.push_back({e.id, e.source - (e.source > s), e.range - (e.range > s)});
  }
  return DirectedMultigraph(std::move(names), std::move(edges));
}

DirectedMultigraph source_add(const DirectedMultigraph& g, const std::vector<std::string>& targets) {
  if (targets.empty()) throw std::invalid_argument("source_add needs at least one target");
  std::string name = "s";
  for (int i = 1; g.has_vertex(name); ++i) name = "s" + std::to_string(i);
  std::vector<std::string> names = g.vertices();
  names.push_back(name);
  std::vector<Edge> edges = g.edges();
  const std::size_t s = names.size() - 1;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    std::string id = name + "e" + std::to_string(i + 1);
    while (g.has_edge(id)) id += "'";
    edges.push_back({id, s, g.vertex_index(targets[i])});
  }
  return DirectedMultigraph(std::move(names), std::move(edges));
}

namespace {

DirectedMultigraph apply(MoveKind kind, const DirectedMultigraph& input, const SplitSpec& spec,
                         const std::vector<std::string>& targets) {
  switch (kind) {
    case MoveKind::OutSplit: return out_split(input, spec);
    case MoveKind::InSplit: return in_split(input, spec);
    case MoveKind::GenInSplit: return gen_in_split(input, spec);
    case MoveKind::SourceElim: return source_eliminate(input, spec.vertex);
    case MoveKind::SourceAdd: return source_add(input, targets);
  }
  throw std::logic_error("unhandled move kind");
}

bool is_split(MoveKind k) { return k == MoveKind::OutSplit || k == MoveKind::InSplit || k == MoveKind::GenInSplit; }

}  // namespace

MoveRecord make_move(MoveKind kind, const DirectedMultigraph& input, const SplitSpec& spec,
                     const std::vector<std::string>& targets) {
  MoveRecord rec;
  rec.kind = kind;
  rec.input = input;
  rec.spec = spec;
  rec.spec.allow_empty_parts = kind == MoveKind::GenInSplit;
  rec.targets = targets;
  rec.output = apply(kind, input, rec.spec, targets);
  if (is_split(kind)) rec.esse_witness = move_to_esse(rec);
  return rec;
}

bool replay_matches(const MoveRecord& record) {
  DirectedMultigraph out = apply(record.kind, record.input, record.spec, record.targets);
  if (out.vertices() != record.output.vertices()) return false;
  if (adjacency_matrix(out) != adjacency_matrix(record.output)) return false;
  if (record.esse_witness) {
    const auto& w = *record.esse_witness;
    if (w.R * w.S != adjacency_matrix(record.input) || w.S * w.R != adjacency_matrix(record.output)) return false;
  }
  return true;
}

EsseWitness move_to_esse(const MoveRecord& record) {
  if (!is_split(record.kind)) throw std::invalid_argument("only splits induce an elementary shift equivalence");
  const DirectedMultigraph& g = record.input;
  const std::size_t v = g.vertex_index(record.spec.vertex);
  const std::size_t n = record.spec.partition.size();
  const Side side = record.kind == MoveKind::OutSplit ? Side::Out : Side::In;
  const auto idx = part_index(g, v, record.spec, side);
  const SplitLayout l = layout(g, v, n);
  const std::size_t r = g.vertex_count(), m = l.names.size();

  // Division matrix: D(u, j) = 1 when new vertex j is a copy of u.
  IntMatrix d(r, m);
  for (std::size_t j = 0; j < m; ++j) d(l.origin[j], j) = 1;
  // Edge matrix: for an out-split, E(j, u) counts edges of j's set ending at u; for an in-split,
  // E(u, j) counts edges from u whose new range is j.
  EsseWitness w;
  if (side == Side::Out) {
    IntMatrix e(m, r);
    for (const auto& ed : g.edges()) {
      const std::size_t j = ed.source == v ? l.copies[v][idx.at(ed.id)] : l.copies[ed.source][0];
      e(j, ed.range) += 1;
    }
    w = {d, e};
  } else {
    IntMatrix e(r, m);
    for (const auto& ed : g.edges()) {
      const std::size_t j = ed.range == v ? l.copies[v][idx.at(ed.id)] : l.copies[ed.range][0];
      e(ed.source, j) += 1;
    }
    w = {e, d.transpose()};
  }
  if (w.R * w.S != adjacency_matrix(g) || w.S * w.R != adjacency_matrix(record.output))
    throw std::logic_error("split witness does not multiply out");
  return w;
}

CheckResult unital_in_split_check(const DirectedMultigraph& e, const DirectedMultigraph& f,
                                  const UnitalInSplitWitness& witness) {
  if (witness.part_e.size() != witness.part_f.size())
    return {false, "partitions have " + std::to_string(witness.part_e.size()) + " and " +
                       std::to_string(witness.part_f.size()) + " parts"};
  try {
    auto ge = gen_in_split(witness.G, {witness.w, witness.part_e, true});
    auto gf = gen_in_split(witness.G, {witness.w, witness.part_f, true});
    if (!graphs_isomorphic(ge, e)) return {false, "first generalised in-split is not isomorphic to E"};
    if (!graphs_isomorphic(gf, f)) return {false, "second generalised in-split is not isomorphic to F"};
  } catch (const std::exception& ex) {
    return {false, ex.what()};
  }
  return {true, {}};
}

}  // namespace sftkit
