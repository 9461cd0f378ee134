#include "sftkit/equivalence.hpp"

#include <cstdlib>
#include <stdexcept>

namespace sftkit {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Found: return "FOUND";
    case Verdict::Unconditional: return "UNCONDITIONAL";
    case Verdict::Bounded: return "BOUNDED";
  }
  return "?";
}

namespace {

VerifyResult fail(std::string why) { return {false, std::move(why)}; }

// Runs a check, turning shape errors into diagnostics.
template <class F>
VerifyResult guarded(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    return fail(std::string("dimension mismatch: ") + e.what());
  }
}

bool square(const IntMatrix& m) { return m.is_square() && m.rows() > 0; }

}  // namespace

VerifyResult verify_esse(const EsseWitness& w, const IntMatrix& a, const IntMatrix& b) {
  return guarded([&]() -> VerifyResult {
    if (!square(a) || !square(b)) return fail("A and B must be square");
    if (!is_nonnegative(w.R) || !is_nonnegative(w.S)) return fail("R and S must be nonnegative");
    if (w.R * w.S != a) return fail("A = R S fails");
    if (w.S * w.R != b) return fail("B = S R fails");
    return {true, {}};
  });
}

VerifyResult verify_sse(const SseChain& c, const IntMatrix& a, const IntMatrix& b) {
  return guarded([&]() -> VerifyResult {
    if (c.steps.empty()) return a == b ? VerifyResult{true, {}} : fail("empty chain but A != B");
    IntMatrix cur = a;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
      const auto& s = c.steps[i];
      if (!is_nonnegative(s.R) || !is_nonnegative(s.S))
        return fail("step " + std::to_string(i + 1) + ": R and S must be nonnegative");
      if (s.R * s.S != cur) return fail("step " + std::to_string(i + 1) + ": R S does not equal the previous matrix");
      cur = s.S * s.R;
    }
    if (cur != b) return fail("last step: S R does not equal B");
    return {true, {}};
  });
}

VerifyResult verify_se(const SeWitness& w, const IntMatrix& a, const IntMatrix& b) {
  return guarded([&]() -> VerifyResult {
    if (!square(a) || !square(b)) return fail("A and B must be square");
    if (w.lag < 1) return fail("lag must be >= 1");
    if (!is_nonnegative(w.R) || !is_nonnegative(w.S)) return fail("R and S must be nonnegative");
    if (power(a, w.lag) != w.R * w.S) return fail("A^lag = R S fails");
    if (power(b, w.lag) != w.S * w.R) return fail("B^lag = S R fails");
    if (a * w.R != w.R * b) return fail("A R = R B fails");
    if (w.S * a != b * w.S) return fail("S A = B S fails");
    return {true, {}};
  });
}

VerifyResult verify_intertwiner(const IntertwinerWitness& w, const IntMatrix& a, const IntMatrix& b) {
  return guarded([&]() -> VerifyResult {
    if (!square(a) || !square(b)) return fail("A and B must be square");
    if (w.T.rows() != a.rows() || w.T.cols() != b.rows()) return fail("T must be dim A x dim B");
    if (a * w.T != w.T * b) return fail("A T = T B fails");
    if (w.unimodular) {
      if (!w.T.is_square()) return fail("unimodular flag on a non-square T");
      Int d = determinant(w.T);
      if (d != 1 && d != -1) return fail("unimodular flag but det T = " + d.get_str());
    }
    if (w.pointed) {
      IntVector ua = w.unit_a.empty() ? ones(a.rows()) : w.unit_a;
      IntVector ub = w.unit_b.empty() ? ones(b.rows()) : w.unit_b;
      if (ua * w.T != ub) return fail("pointed flag but " + vector_to_string(ua) + " T != " + vector_to_string(ub));
    }
    if (w.cone_preserving && !intertwiner_preserves_cone(w.T, a, b))
      return fail("cone flag but T z_B is not a positive multiple of z_A");
    return {true, {}};
  });
}

const char* certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 0: return "esse";
    case 1: return "sse";
    case 2: return "se";
    default: return "intertwiner";
  }
}

VerifyResult verify(const Certificate& c, const IntMatrix& a, const IntMatrix& b) {
  if (const auto* e = std::get_if<EsseWitness>(&c)) return verify_esse(*e, a, b);
  if (const auto* s = std::get_if<SseChain>(&c)) return verify_sse(*s, a, b);
  if (const auto* s = std::get_if<SeWitness>(&c)) return verify_se(*s, a, b);
  return verify_intertwiner(std::get<IntertwinerWitness>(c), a, b);
}

std::uint64_t default_search_budget() {
  constexpr std::uint64_t kDefault = 1ULL << 32;
  const char* env = std::getenv("SFTKIT_SEARCH_BUDGET");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) return kDefault;
  return v;
}

SeWitness sse_to_se(const SseChain& chain) {
  if (chain.steps.empty()) throw std::invalid_argument("lag must be >= 1");
  SeWitness w;
  w.R = chain.steps.front().R;
  w.S = chain.steps.front().S;
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const auto& s = chain.steps[i];
    if (chain.steps[i - 1].S * chain.steps[i - 1].R != s.R * s.S)
      throw std::invalid_argument("chain steps " + std::to_string(i) + " and " + std::to_string(i + 1) + " do not compose");
    w.R = w.R * s.R;
    w.S = s.S * w.S;
  }
  w.lag = chain.steps.size();
  const IntMatrix a = chain.steps.front().R * chain.steps.front().S;
  const IntMatrix b = chain.steps.back().S * chain.steps.back().R;
  auto v = verify_se(w, a, b);
  if (!v.ok) throw std::logic_error("composed witness fails: " + v.diagnostics);
  return w;
}

IntVector unit_transfer(const IntMatrix& a, const IntMatrix& r) {
  if (r.rows() != a.rows()) throw std::invalid_argument("unit_transfer: R needs dim A rows");
  return ones(a.rows()) * r;
}

}  // namespace sftkit
