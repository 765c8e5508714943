#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bci/errors.hpp"

namespace bci {

/// A caterpillar given by its pendant-leaf counts lambda_0..lambda_k along the
/// spine. Both spine ends must be stems (lambda >= 1) and k >= 1; stars are a
/// separate input class and are rejected here.
class Caterpillar {
 public:
  static Caterpillar from_lambdas(std::vector<int> lambdas);

  int length() const { return static_cast<int>(lambdas_.size()) - 1; }  // k
  const std::vector<int>& lambdas() const { return lambdas_; }
  int lambda(int i) const { return lambdas_[static_cast<std::size_t>(i)]; }

  int leaf_count() const;        // lambda(CT)
  int trunk_count() const;       // tau(CT)
  int single_stem_count() const; // n1(CT)
  bool has_adjacent_trunks() const;

  int vertex_count() const;
  Caterpillar reversed() const;

 private:
  explicit Caterpillar(std::vector<int> l) : lambdas_(std::move(l)) {}
  std::vector<int> lambdas_;
};

/// Undirected tree over dense 0-based vertex indices.
struct Tree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  // Validates: no self-loops or duplicates, edge count n-1, connected.
  static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);
};

enum class SpineClass { stem, trunk };

struct SpineProfile {
  std::vector<SpineClass> classes;
  int leaf_total = 0;
  int trunks = 0;
  int single_stems = 0;
};

SpineProfile classify_spine(const Caterpillar& ct);

// Canonical vertex layout for caterpillar-derived trees: spine v_0..v_k first,
// then leaves grouped by spine index, ascending leaf number.
int spine_vertex(const Caterpillar& ct, int i);
int leaf_vertex(const Caterpillar& ct, int i, int j);  // j is 1-based
std::string vertex_name(const Caterpillar& ct, int v); // "v3" or "l3_1"
std::string tree_vertex_name(int v);                   // "u7"

Tree caterpillar_to_tree(const Caterpillar& ct);

std::vector<std::vector<int>> all_pairs_distances(const Tree& t);
std::vector<int> eccentricities(const Tree& t);
int diameter(const Tree& t);
int radius(const Tree& t);

}  // namespace bci
