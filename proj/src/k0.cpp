#include "sftkit/k0.hpp"

#include <set>

#include "sftkit/graph.hpp"
#include "sftkit/normal_form.hpp"

namespace sftkit {

bool K0Group::trivial() const {
  for (const auto& f : invariant_factors)
    if (f != 1) return false;
  return true;
}

std::string render_k0(const std::vector<Int>& factors) {
  std::string out;
  for (const auto& f : factors) {
    if (f == 1) continue;
    if (!out.empty()) out += " ⊕ ";
    out += f == 0 ? std::string("Z") : "Z/" + f.get_str() + "Z";
  }
  return out.empty() ? "{0̄}" : out;
}

K0Group k0_group(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("k0_group: square matrix required");
  IntMatrix m = IntMatrix::identity(a.rows()) - a.transpose();
  K0Group g;
  g.invariant_factors = smith_normal_form(m).invariant_factors;
  g.rendering = render_k0(g.invariant_factors);
  return g;
}

namespace {

// Catalog lookups tolerate a relabelling of vertices.
bool same_graph(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return false;
  if (a == b) return true;
  if (a.rows() > kIsomorphismVertexLimit) return false;
  return matrices_isomorphic(a, b).has_value();
}

std::string power_rendering(std::size_t r) { return r == 1 ? "Z" : "Z^" + std::to_string(r); }

}  // namespace

const KgrRegistry::Claim* KgrRegistry::find_claim(const IntMatrix& a) const {
  for (const auto& c : claims)
    if (c.matrix == a) return &c;
  for (const auto& c : claims)
    if (same_graph(c.matrix, a)) return &c;
  return nullptr;
}

const KgrRegistry::Reduction* KgrRegistry::find_reduction(const IntMatrix& a) const {
  for (const auto& r : reductions)
    if (r.matrix == a) return &r;
  for (const auto& r : reductions)
    if (same_graph(r.matrix, a)) return &r;
  return nullptr;
}

const IntMatrix* KgrRegistry::matrix_of(const std::string& id) const {
  for (const auto& [name, m] : matrices)
    if (name == id) return &m;
  return nullptr;
}

KgrDescription kgr_description(const IntMatrix& a, const KgrRegistry* registry, unsigned levels) {
  KgrDescription out;
  IntMatrix cur = a;
  std::set<std::string> visited;
  while (true) {
    const Int det = determinant(cur);
    if (det == 1 || det == -1) {
      out.kind = out.via.empty() ? KgrKind::Unimodular : KgrKind::Reduction;
      out.rendering = power_rendering(cur.rows());
      return out;
    }
    if (det != 0 && registry) {
      if (const auto* c = registry->find_claim(cur)) {
        auto rep = delta_claim_verify(c->matrix, c->claim, levels);
        out.claim_report = rep;
        if (rep.ok) {
          out.kind = out.via.empty() ? KgrKind::DeltaClaim : KgrKind::Reduction;
          out.rendering = c->claim.rendering;
          return out;
        }
        break;
      }
    }
    if (!registry) break;
    const auto* red = registry->find_reduction(cur);
    if (!red || !visited.insert(red->target_id).second) break;
    const IntMatrix* next = registry->matrix_of(red->target_id);
    if (!next) break;
    out.via.push_back(red->target_id);
    cur = *next;
  }
  out.kind = KgrKind::Unresolved;
  out.rendering = "unresolved";
  return out;
}

const char* to_string(KgrKind k) {
  switch (k) {
    case KgrKind::Unimodular: return "unimodular";
    case KgrKind::DeltaClaim: return "delta-claim";
    case KgrKind::Reduction: return "reduction";
    case KgrKind::Unresolved: return "unresolved";
  }
  return "?";
}

}  // namespace sftkit
