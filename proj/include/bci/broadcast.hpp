#pragma once

#include <optional>
#include <vector>

#include "bci/tree.hpp"

namespace bci {

/// A value assignment f on the vertices of a tree. Validity (f(v) <= e(v)) is
/// checked by predicate, never assumed.
struct Broadcast {
  std::vector<int> values;

  int cost() const;
  std::vector<int> support() const;  // vertices with f > 0
};

bool is_valid_broadcast(const Tree& t, const Broadcast& b);
bool is_independent(const Tree& t, const Broadcast& b);
bool is_dominating(const Tree& t, const Broadcast& b);

/// Erwin's maximality characterization: a single broadcast vertex must sit at
/// its eccentricity; two or more must dominate the tree and each carry exactly
/// (distance to the nearest other broadcast vertex) - 1. The empty broadcast
/// on a non-empty tree is not maximal.
bool is_maximal_independent(const Tree& t, const Broadcast& b);

// Per-spine-vertex weight: own value plus the values of its pendant leaves.
std::vector<int> spine_weights(const Caterpillar& ct, const Broadcast& b);

// Value k+1 on the first pendant leaf at each spine end; cost 2(diam-1).
Broadcast canonical_broadcast(const Caterpillar& ct);

/// If some vertex with a pendant neighbour carries a positive value, move that
/// value to its lowest-indexed pendant neighbour and add one. Returns the
/// improved broadcast, or nothing if no such vertex exists.
std::optional<Broadcast> improve_stem_once(const Tree& t, const Broadcast& b);

}  // namespace bci
