#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/dimension_group.hpp"

namespace sftkit {

// u in Delta_A iff u A^k is integral for some k >= 0.
struct DeltaMembership {
  bool contained = false;
  unsigned long k = 0;       // witness exponent when contained
  unsigned long states = 0;  // fractional states visited
};

// Walks the fractional part of u A^k in (Q/Z)^r until it is zero or repeats.  Requires det A != 0.
DeltaMembership delta_contains(const IntMatrix& a, const RatVector& u);

// Delta_A = Z[1/d] w_1 + ... + Z[1/d] w_m + Z f_1 + ... + Z f_s.  The usual case is a single w.
struct DeltaClaim {
  std::vector<IntVector> w;
  Int d;
  std::vector<IntVector> free_part;
  std::string rendering;  // e.g. "Z[1/2][1 1 1] ⊕ 0 × Z^2"
};

struct DeltaClaimReport {
  bool ok = false;
  unsigned levels_checked = 0;
  std::optional<unsigned> failing_level;
  std::string detail;
};

// For each level k <= levels: every row of A^{-k} lies in the claimed group, and each w_i / d^k
// and f_j lies in Delta_A.  Throws std::domain_error for singular A and std::invalid_argument
// when the claim vectors are dependent or have the wrong length.
DeltaClaimReport delta_claim_verify(const IntMatrix& a, const DeltaClaim& claim, unsigned levels);

enum class ConeVerdict { In, Out, Undecided };
enum class ConeStage { PowerWitness, ZeroClass, PerronSign, None };

struct ConeResult {
  ConeVerdict verdict = ConeVerdict::Undecided;
  ConeStage stage = ConeStage::None;
  unsigned long witness_power = 0;  // PowerWitness: v A^l >= 0
  int pf_sign = 0;                  // PerronSign: sign of v . z
  unsigned long bound = 0;          // Undecided: the power bound that was tried
};

inline constexpr unsigned long kDefaultConeBound = 64;

// Decides [v, k] in G_A^+.  Complete for primitive A; otherwise Undecided is possible.
ConeResult cone_contains(const DimElement& a, unsigned long bound = kDefaultConeBound);

const char* to_string(ConeVerdict v);
const char* to_string(ConeStage s);

}  // namespace sftkit
