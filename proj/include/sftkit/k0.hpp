#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/delta.hpp"

namespace sftkit {

struct K0Group {
  std::vector<Int> invariant_factors;  // of I - A^T, including 1s; 0 marks a free summand
  std::string rendering;               // "{0̄}", "Z/2Z", "Z/2Z ⊕ Z/2Z", "Z", ...

  bool trivial() const;
};

// coker(I - A^T) through the Smith form.
K0Group k0_group(const IntMatrix& a);
std::string render_k0(const std::vector<Int>& invariant_factors);

// Known presentations used to describe the graded group when det A is not +-1.
struct KgrRegistry {
  struct Claim {
    std::string id;
    IntMatrix matrix;
    DeltaClaim claim;
  };
  struct Reduction {
    std::string id;
    IntMatrix matrix;
    std::string target_id;
    std::string how;  // e.g. "maximal out-split at w1"
  };
  std::vector<Claim> claims;
  std::vector<Reduction> reductions;
  std::vector<std::pair<std::string, IntMatrix>> matrices;  // id -> matrix for reduction targets

  const Claim* find_claim(const IntMatrix& a) const;
  const Reduction* find_reduction(const IntMatrix& a) const;
  const IntMatrix* matrix_of(const std::string& id) const;
};

enum class KgrKind { Unimodular, DeltaClaim, Reduction, Unresolved };

struct KgrDescription {
  KgrKind kind = KgrKind::Unresolved;
  std::string rendering;          // "Z^3", a claim rendering, or "unresolved"
  std::vector<std::string> via;   // reduction chain of catalog ids, first step first
  std::optional<DeltaClaimReport> claim_report;
};

inline constexpr unsigned kDefaultClaimLevels = 8;

KgrDescription kgr_description(const IntMatrix& a, const KgrRegistry* registry = nullptr,
                               unsigned levels = kDefaultClaimLevels);

const char* to_string(KgrKind k);

}  // namespace sftkit
