#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sftkit/matrix.hpp"

namespace sftkit {

// A = R S and B = S R.
struct EsseWitness {
  IntMatrix R;
  IntMatrix S;
};

// A = A_0 ~ A_1 ~ ... ~ A_k = B, step i certified by steps[i].
struct SseChain {
  std::vector<EsseWitness> steps;
  std::size_t lag() const { return steps.size(); }
};

// A^lag = R S, B^lag = S R, A R = R B, S A = B S.
struct SeWitness {
  IntMatrix R;
  IntMatrix S;
  unsigned long lag = 0;
};

// A T = T B.  Flags are claims; verify recomputes them.
struct IntertwinerWitness {
  IntMatrix T;
  bool unimodular = false;
  bool pointed = false;
  bool cone_preserving = false;
  // Order-unit images used for the pointed test; empty means (1..1) on both sides.
  IntVector unit_a;
  IntVector unit_b;
};

}  // namespace sftkit
