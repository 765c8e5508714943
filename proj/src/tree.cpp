#include "bci/tree.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace bci {

Caterpillar Caterpillar::from_lambdas(std::vector<int> lambdas) {
  if (lambdas.size() < 2) {
    throw ValidationError("caterpillar needs at least two spine vertices (stars are handled separately)");
  }
  for (int v : lambdas) {
    if (v < 0) throw ValidationError("negative pendant count");
  }
  if (lambdas.front() < 1 || lambdas.back() < 1) {
    throw ValidationError("spine ends must be stems (lambda_0 >= 1 and lambda_k >= 1)");
  }
  return Caterpillar(std::move(lambdas));
}

int Caterpillar::leaf_count() const {
  int s = 0;
  for (int v : lambdas_) s += v;
  return s;
}

int Caterpillar::trunk_count() const {
  int t = 0;
  for (int v : lambdas_) t += (v == 0) ? 1 : 0;
  return t;
}

int Caterpillar::single_stem_count() const {
  int s = 0;
  for (int v : lambdas_) s += (v == 1) ? 1 : 0;
  return s;
}

bool Caterpillar::has_adjacent_trunks() const {
  for (std::size_t i = 0; i + 1 < lambdas_.size(); ++i) {
    if (lambdas_[i] == 0 && lambdas_[i + 1] == 0) return true;
  }
  return false;
}

int Caterpillar::vertex_count() const { return length() + 1 + leaf_count(); }

Caterpillar Caterpillar::reversed() const {
  std::vector<int> r(lambdas_.rbegin(), lambdas_.rend());
  return Caterpillar(std::move(r));
}

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n <= 0) throw ValidationError("tree needs a positive vertex count");
  if (static_cast<int>(edges.size()) != n - 1) {
    throw ValidationError("tree must have exactly n-1 edges");
  }
  std::set<std::pair<int, int>> seen;
  Tree t;
  t.n = n;
  t.adj.resize(static_cast<std::size_t>(n));
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw ValidationError("edge endpoint out of range");
    if (a == b) throw ValidationError("self-loop");
    if (!seen.insert({a, b}).second) throw ValidationError("duplicate edge");
    t.adj[static_cast<std::size_t>(a)].push_back(b);
    t.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  t.edges = std::move(edges);
  // connectivity
  std::vector<char> vis(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  q.push(0);
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : t.adj[static_cast<std::size_t>(u)]) {
      if (!vis[static_cast<std::size_t>(w)]) {
        vis[static_cast<std::size_t>(w)] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  if (count != n) throw ValidationError("edge list is not connected");
  return t;
}

SpineProfile classify_spine(const Caterpillar& ct) {
  SpineProfile p;
  for (int v : ct.lambdas()) {
    p.classes.push_back(v == 0 ? SpineClass::trunk : SpineClass::stem);
    p.leaf_total += v;
    if (v == 0) ++p.trunks;
    if (v == 1) ++p.single_stems;
  }
  return p;
}

int spine_vertex(const Caterpillar&, int i) { return i; }

int leaf_vertex(const Caterpillar& ct, int i, int j) {
  int base = ct.length() + 1;
  for (int a = 0; a < i; ++a) base += ct.lambda(a);
  return base + (j - 1);
}

std::string vertex_name(const Caterpillar& ct, int v) {
  int k = ct.length();
  if (v <= k) return "v" + std::to_string(v);
  int rest = v - (k + 1);
  for (int i = 0; i <= k; ++i) {
    if (rest < ct.lambda(i)) {
      return "l" + std::to_string(i) + "_" + std::to_string(rest + 1);
    }
    rest -= ct.lambda(i);
  }
  throw ValidationError("vertex index out of range");
}

std::string tree_vertex_name(int v) { return "u" + std::to_string(v); }

Tree caterpillar_to_tree(const Caterpillar& ct) {
  int k = ct.length();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i <= k; ++i) {
    for (int j = 1; j <= ct.lambda(i); ++j) {
      edges.emplace_back(i, leaf_vertex(ct, i, j));
    }
  }
  return Tree::from_edges(ct.vertex_count(), std::move(edges));
}

static std::vector<int> bfs_distances(const Tree& t, int src) {
  std::vector<int> d(static_cast<std::size_t>(t.n), -1);
  std::queue<int> q;
  d[static_cast<std::size_t>(src)] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : t.adj[static_cast<std::size_t>(u)]) {
      if (d[static_cast<std::size_t>(w)] < 0) {
        d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(u)] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

std::vector<std::vector<int>> all_pairs_distances(const Tree& t) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(t.n));
  for (int v = 0; v < t.n; ++v) d.push_back(bfs_distances(t, v));
  return d;
}

std::vector<int> eccentricities(const Tree& t) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(t.n));
  for (int v = 0; v < t.n; ++v) {
    auto d = bfs_distances(t, v);
    e.push_back(*std::max_element(d.begin(), d.end()));
  }
  return e;
}

int diameter(const Tree& t) {
  auto e = eccentricities(t);
  return *std::max_element(e.begin(), e.end());
}

int radius(const Tree& t) {
  auto e = eccentricities(t);
  return *std::min_element(e.begin(), e.end());
}

}  // namespace bci
