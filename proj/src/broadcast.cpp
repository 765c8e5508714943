#include "bci/broadcast.hpp"

#include <algorithm>
#include <numeric>

namespace bci {

int Broadcast::cost() const { return std::accumulate(values.begin(), values.end(), 0); }

std::vector<int> Broadcast::support() const {
  std::vector<int> s;
  for (std::size_t v = 0; v < values.size(); ++v) {
    if (values[v] > 0) s.push_back(static_cast<int>(v));
  }
  return s;
}

static void check_domain(const Tree& t, const Broadcast& b) {
  if (static_cast<int>(b.values.size()) != t.n) {
    throw ValidationError("broadcast domain does not match the tree");
  }
  for (int v : b.values) {
    if (v < 0) throw ValidationError("broadcast values must be non-negative");
  }
}

bool is_valid_broadcast(const Tree& t, const Broadcast& b) {
  check_domain(t, b);
  auto e = eccentricities(t);
  for (int v = 0; v < t.n; ++v) {
    if (b.values[static_cast<std::size_t>(v)] > e[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

bool is_independent(const Tree& t, const Broadcast& b) {
  if (!is_valid_broadcast(t, b)) throw ValidationError("not a valid broadcast");
  auto sup = b.support();
  auto dist = all_pairs_distances(t);
  for (std::size_t a = 0; a < sup.size(); ++a) {
    for (std::size_t c = a + 1; c < sup.size(); ++c) {
      int u = sup[a], v = sup[c];
      int d = dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (d <= std::max(b.values[static_cast<std::size_t>(u)], b.values[static_cast<std::size_t>(v)])) {
        return false;
      }
    }
  }
  return true;
}

bool is_dominating(const Tree& t, const Broadcast& b) {
  if (!is_valid_broadcast(t, b)) throw ValidationError("not a valid broadcast");
  auto sup = b.support();
  auto dist = all_pairs_distances(t);
  for (int v = 0; v < t.n; ++v) {
    bool covered = false;
    for (int u : sup) {
      if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <=
          b.values[static_cast<std::size_t>(u)]) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

bool is_maximal_independent(const Tree& t, const Broadcast& b) {
  if (!is_independent(t, b)) throw ValidationError("broadcast is not independent");
  auto sup = b.support();
  if (sup.empty()) return false;
  auto e = eccentricities(t);
  if (sup.size() == 1) {
    return b.values[static_cast<std::size_t>(sup[0])] == e[static_cast<std::size_t>(sup[0])];
  }
  if (!is_dominating(t, b)) return false;
  auto dist = all_pairs_distances(t);
  for (int v : sup) {
    int dmin = -1;
    for (int u : sup) {
      if (u == v) continue;
      int d = dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      if (dmin < 0 || d < dmin) dmin = d;
    }
    if (b.values[static_cast<std::size_t>(v)] != dmin - 1) return false;
  }
  return true;
}

std::vector<int> spine_weights(const Caterpillar& ct, const Broadcast& b) {
  if (static_cast<int>(b.values.size()) != ct.vertex_count()) {
    throw ValidationError("broadcast domain does not match the caterpillar");
  }
  int k = ct.length();
  std::vector<int> w(static_cast<std::size_t>(k + 1), 0);
  for (int i = 0; i <= k; ++i) {
    int s = b.values[static_cast<std::size_t>(spine_vertex(ct, i))];
    for (int j = 1; j <= ct.lambda(i); ++j) {
      s += b.values[static_cast<std::size_t>(leaf_vertex(ct, i, j))];
    }
    w[static_cast<std::size_t>(i)] = s;
  }
  return w;
}

Broadcast canonical_broadcast(const Caterpillar& ct) {
  int k = ct.length();
  Broadcast b;
  b.values.assign(static_cast<std::size_t>(ct.vertex_count()), 0);
  b.values[static_cast<std::size_t>(leaf_vertex(ct, 0, 1))] = k + 1;
  b.values[static_cast<std::size_t>(leaf_vertex(ct, k, 1))] = k + 1;
  return b;
}

std::optional<Broadcast> improve_stem_once(const Tree& t, const Broadcast& b) {
  if (!is_independent(t, b)) throw ValidationError("broadcast is not independent");
  auto e = eccentricities(t);
  for (int v = 0; v < t.n; ++v) {
    if (b.values[static_cast<std::size_t>(v)] == 0) continue;
    // lowest-indexed pendant neighbour, if any
    int pendant = -1;
    for (int w : t.adj[static_cast<std::size_t>(v)]) {
      if (t.adj[static_cast<std::size_t>(w)].size() == 1 && (pendant < 0 || w < pendant)) {
        pendant = w;
      }
    }
    if (pendant < 0) continue;
    int moved = b.values[static_cast<std::size_t>(v)] + 1;
    if (moved > e[static_cast<std::size_t>(pendant)]) continue;  // only in 2-vertex trees
    Broadcast out = b;
    out.values[static_cast<std::size_t>(v)] = 0;
    out.values[static_cast<std::size_t>(pendant)] = moved;
    return out;
  }
  return std::nullopt;
}

}  // namespace bci
