#pragma once

#include "bci/broadcast.hpp"
#include "bci/formula.hpp"

namespace bci {

struct ConstructionTrace {
  Broadcast f1, f2, f3, f4;
  int step2_delta = 0;
  int step3_delta = 0;
  int step4_delta = 0;
  std::vector<Occurrence> step3_occurrences;
  std::vector<Occurrence> step4_occurrences;
};

// Step 1: value 1 on every pendant vertex and every trunk; cost lambda + tau.
Broadcast step1(const Caterpillar& ct);

// Step 2: raise to 2 the single leaf of each stem counted by the singles term.
Broadcast step2(const Caterpillar& ct, const Broadcast& f1);

// Step 3: rewrite each 1+2-(02-)^{+r}1+ occurrence whose interior holds a
// lambda = 1 stem; per-occurrence gain is the interior alpha1.
Broadcast step3(const Caterpillar& ct, const Broadcast& f2);

// Step 4: rewrite the 0-alternating occurrences (internal ones only when they
// hold a lambda = 1 stem, anchored ones unconditionally; the whole-caterpillar
// case once from the left). Final cost is beta*_effective.
Broadcast step4(const Caterpillar& ct, const Broadcast& f3);

ConstructionTrace construct_trace(const Caterpillar& ct);

struct Witness {
  Broadcast broadcast;
  int cost = 0;
  WitnessSource source = WitnessSource::canonical;
};

/// The better of the canonical broadcast and the step-4 output; always an
/// independent broadcast of cost beta_b(ct, effective). The as-written variant
/// has no matching construction on its discrepancy instances.
Witness construct_witness(const Caterpillar& ct);

}  // namespace bci
