#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bci/construct.hpp"
#include "bci/oracle.hpp"

namespace bci {

struct SweepParams {
  int k_min = 1;
  int k_max = 3;
  int lambda_cap = 3;  // per spine vertex
  int leaf_cap = 9;    // total pendant leaves
  bool no_adjacent_trunks_only = true;
  bool canonicalize_reversal = true;
  bool run_oracle = true;
  int oracle_budget = 26;  // candidate vertices
  bool oracle_prune_support = true;
  int threads = 1;
};

struct SweepRecord {
  std::vector<int> lambdas;
  int lower_bound = 0;  // 2(diam - 1)
  int beta_star_as_written = 0;
  int beta_star_effective = 0;
  int beta_b_effective = 0;
  std::string witness_source;  // "canonical" or "constructed"
  int constructor_cost = 0;
  std::optional<int> oracle_value;
  std::string oracle_error;  // non-empty when the oracle was skipped
  std::optional<FastPathResult> fastpath;
  bool effective_matches_oracle = true;  // vacuously true without an oracle value
  bool as_written_matches_oracle = true;
  bool invariant_ok = true;
  std::string invariant_error;
  std::string witness_digest;
};

struct SweepSummary {
  int instances = 0;
  int oracle_ok = 0;
  int oracle_skipped = 0;
  int effective_oracle_mismatches = 0;
  int as_written_oracle_mismatches = 0;
  int invariant_violations = 0;
};

struct SweepOutput {
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

// Lexicographic order over lambda sequences; with canonicalization only the
// lexicographically smaller of (sequence, reverse) is kept.
std::vector<Caterpillar> enumerate_caterpillars(const SweepParams& p);

// Uniform labelled tree on n vertices (Pruefer decoding), deterministic per seed.
Tree random_tree(int n, std::uint64_t seed);

SweepRecord evaluate_instance(const Caterpillar& ct, const SweepParams& p);

// One record per instance, in enumeration order regardless of thread count.
SweepOutput sweep(const SweepParams& p);

std::string summary_text(const SweepSummary& s);

struct DiagnosticsReport {
  bool stems_zero = false;     // after improvement saturation no stem keeps a value
  bool ends_positive = false;  // both end leaf groups carry positive weight
  Broadcast saturated;
};

// Structural checks on an oracle optimum, after applying improvement moves
// until none remains (each move strictly raises the cost, so this terminates).
DiagnosticsReport structural_diagnostics(const Caterpillar& ct, const Broadcast& optimum);

}  // namespace bci
