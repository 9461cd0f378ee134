#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sftkit/witness.hpp"

namespace sftkit {

// Found: a certificate exists.  Unconditional: linear algebra or an entry bound rules one out.
// Bounded: nothing within the searched bounds.
enum class Verdict { Found, Unconditional, Bounded };
const char* to_string(Verdict v);

struct VerifyResult {
  bool ok = false;
  std::string diagnostics;  // first failing equation, or empty
};

VerifyResult verify_esse(const EsseWitness& w, const IntMatrix& a, const IntMatrix& b);
VerifyResult verify_sse(const SseChain& c, const IntMatrix& a, const IntMatrix& b);
VerifyResult verify_se(const SeWitness& w, const IntMatrix& a, const IntMatrix& b);
// Recomputes every flag that is set; an unset flag is not a claim.
VerifyResult verify_intertwiner(const IntertwinerWitness& w, const IntMatrix& a, const IntMatrix& b);

using Certificate = std::variant<EsseWitness, SseChain, SeWitness, IntertwinerWitness>;
const char* certificate_kind(const Certificate& c);  // "esse", "sse", "se", "intertwiner"
VerifyResult verify(const Certificate& c, const IntMatrix& a, const IntMatrix& b);

// Search budget shared by the searches: candidate count for ESSE, expanded nodes for SSE,
// lattice points for intertwiners.  SFTKIT_SEARCH_BUDGET overrides the default.
std::uint64_t default_search_budget();

struct EsseSearchOptions {
  long entry_bound = 1;
  std::vector<std::size_t> inner_dims;  // empty means {dim B}; dim B is the only admissible value
  bool pruned = true;
  std::uint64_t budget = 0;             // 0 means default_search_budget()
};

struct EsseSearchResult {
  std::vector<EsseWitness> witnesses;  // lexicographic in (R, S)
  Verdict verdict = Verdict::Bounded;
  bool refused = false;                // search space above budget; nothing was searched
  long double estimate = 0;            // raw candidate count (m+1)^(2 r c)
  // Entry bounds forced on any witness, when the zero-row/column argument applies.
  std::optional<long> forced_bound_r;
  std::optional<long> forced_bound_s;
  std::string note;
};

// All (R, S) with entries in [0, m], R S = A, S R = B.  Throws std::invalid_argument for
// non-square or negative input, or an inner dimension other than dim B.
EsseSearchResult search_esse(const IntMatrix& a, const IntMatrix& b, const EsseSearchOptions& opts = {});

struct SseSearchOptions {
  std::size_t max_steps = 2;
  std::size_t size_bound = 4;
  long entry_bound = 1;
  std::uint64_t budget = 0;
};

struct SseSearchResult {
  std::optional<SseChain> chain;
  Verdict verdict = Verdict::Bounded;
  std::vector<IntMatrix> path;  // canonical forms visited along the chain, A first, B last
  std::size_t expanded = 0;
  std::size_t visited = 0;
  std::size_t frontier = 0;
  bool budget_exhausted = false;
};

// Lexicographically least P A P^-1 over all vertex permutations, with the permutation used.
struct CanonicalForm {
  IntMatrix matrix;
  std::vector<std::size_t> perm;  // matrix = permute(a, perm)
};
CanonicalForm canonical_form(const IntMatrix& a);

// Breadth-first search over splits and amalgamations modulo relabelling.
SseSearchResult search_sse_path(const IntMatrix& a, const IntMatrix& b, const SseSearchOptions& opts = {});

// Each neighbour with the step certifying it: R S = a, S R = neighbour.
struct Neighbour {
  IntMatrix matrix;
  EsseWitness step;
  std::string move;  // "out-split v2", "in-amalgamation {1,3}", ...
};
std::vector<Neighbour> split_neighbours(const IntMatrix& a, std::size_t size_bound, long entry_bound);
std::vector<Neighbour> amalgamation_neighbours(const IntMatrix& a, long entry_bound);

// R = R_1 ... R_k, S = S_k ... S_1.  Throws std::invalid_argument for an empty chain or one whose
// steps do not compose.
SeWitness sse_to_se(const SseChain& chain);

// (1..1) R.  Throws std::invalid_argument if R does not have dim A rows.
IntVector unit_transfer(const IntMatrix& a, const IntMatrix& r);

struct IntertwinerSearchOptions {
  bool require_pointed = false;
  bool require_unimodular = false;
  bool require_cone = false;
  long coeff_bound = 3;
  IntVector unit_a;  // defaults to (1..1)
  IntVector unit_b;
  std::uint64_t budget = 0;
};

struct IntertwinerSearchResult {
  std::vector<IntertwinerWitness> witnesses;  // lexicographic in T
  Verdict verdict = Verdict::Bounded;
  std::string reason;
  std::size_t lattice_rank = 0;
  std::size_t candidates = 0;
  bool budget_exhausted = false;
};

// Integer points of {T : A T = T B}, optionally with unit_a T = unit_b, det T = +-1 and
// T z_B a positive multiple of z_A.
IntertwinerSearchResult search_intertwiner(const IntMatrix& a, const IntMatrix& b,
                                           const IntertwinerSearchOptions& opts = {});

// Cone test on its own: A T = T B, lambda_A = lambda_B and T z_B = c z_A with c > 0.
bool intertwiner_preserves_cone(const IntMatrix& t, const IntMatrix& a, const IntMatrix& b);

}  // namespace sftkit
