#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bci/pattern.hpp"

namespace bci {

// The alpha2 accounting written in the formula disagrees with the exact
// optimum on anchored occurrences without a lambda = 1 stem (e.g. the left
// alternation of CT(2,0,3)); both readings are first-class and the sweep
// compares them against the oracle.
enum class Variant { effective, as_written };

struct TermContribution {
  Occurrence occurrence;
  int amount = 0;
};

struct BetaBreakdown {
  Variant variant = Variant::effective;
  int lambda_total = 0;
  int tau = 0;
  int singles_term = 0;
  int alpha1_term = 0;
  int alpha2_internal_term = 0;
  int alpha2_left_term = 0;
  int alpha2_right_term = 0;
  bool whole_caterpillar = false;
  std::vector<TermContribution> stem_run, internal_alt, left_alt, right_alt;

  int beta_star() const;
};

/// Pattern-counting candidate value. Requires no adjacent trunks.
BetaBreakdown beta_star(const Caterpillar& ct, Variant v);

enum class WitnessSource { canonical, constructed };

struct BetaResult {
  int value = 0;
  WitnessSource source = WitnessSource::canonical;  // canonical on ties
  BetaBreakdown breakdown;
};

/// max{2(diam-1), beta*} for caterpillars with no adjacent trunks.
BetaResult beta_b(const Caterpillar& ct, Variant v);

struct FastPathResult {
  int value = 0;
  std::string rule;
};

// Closed-form special cases; nothing when none applies.
std::optional<FastPathResult> beta_b_fastpath(const Caterpillar& ct);

// K_{1,n}; stars are not representable as Caterpillar.
FastPathResult star_fastpath(int n);

}  // namespace bci
