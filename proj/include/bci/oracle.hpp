#pragma once

#include <cstdint>

#include "bci/broadcast.hpp"

namespace bci {

struct OracleOptions {
  int max_candidates = 26;
  // Drop vertices with a pendant neighbour from multi-vertex supports; moving
  // their value onto the pendant is always a strict improvement.
  bool prune_support_vertices = false;
};

struct OracleResult {
  int value = 0;
  Broadcast witness;  // lexicographically least optimal value vector
  std::uint64_t subsets_examined = 0;
  std::uint64_t branches_pruned = 0;
};

/// Exact beta_b on an arbitrary tree, by branch and bound over supports. With
/// support S of two or more vertices the best assignment is forced:
/// f(v) = (distance to the nearest other support vertex) - 1, which needs all
/// pairwise distances >= 2. Singletons get f(v) = e(v).
OracleResult exact_beta_b(const Tree& t, const OracleOptions& opts = {});

/// Reference brute force over every assignment f(v) in 0..e(v). Exponential;
/// only for cross-checking the oracle on tiny trees.
int naive_beta_b(const Tree& t, int max_vertices = 8);

}  // namespace bci
