#include "bci/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace bci {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct Member {
  int vertex;
  int dmin;  // distance to the nearest other support vertex, kInf for a singleton
};

struct Search {
  const std::vector<std::vector<int>>& dist;
  const std::vector<int>& ecc;
  std::vector<int> cand;        // candidate order for the value pass
  std::vector<int> suffix_ecc;  // suffix_ecc[i] = sum of ecc over cand[i..]
  int best = 0;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;

  // Enumerates supports of size >= 2 within cand[start..]. cur_sum is the
  // forced cost sum((dmin - 1)) over members with finite dmin.
  void value_pass(std::size_t start, std::vector<Member>& members, int cur_sum) {
    for (std::size_t i = start; i < cand.size(); ++i) {
      const int v = cand[i];
      int mind = kInf;
      for (const auto& m : members) mind = std::min(mind, dist[static_cast<std::size_t>(m.vertex)][static_cast<std::size_t>(v)]);
      if (mind < 2) continue;
      int new_sum = cur_sum + (mind == kInf ? 0 : mind - 1);
      std::vector<Member> next = members;
      for (auto& m : next) {
        int d = dist[static_cast<std::size_t>(m.vertex)][static_cast<std::size_t>(v)];
        if (d < m.dmin) {
          new_sum += (m.dmin == kInf ? d - 1 : d - m.dmin);
          m.dmin = d;
        }
      }
      next.push_back({v, mind});
      if (next.size() >= 2) {
        ++examined;
        best = std::max(best, new_sum);
      }
      int slack = next.size() == 1 ? ecc[static_cast<std::size_t>(v)] : 0;
      if (new_sum + slack + suffix_ecc[i + 1] > best) {
        value_pass(i + 1, next, new_sum);
      } else {
        ++pruned;
      }
    }
  }
};

// First support (in lexicographic order over sorted index sets) whose forced
// assignment reaches target. target is known achievable, so this always fills
// out.
bool witness_pass(const std::vector<std::vector<int>>& dist, const std::vector<int>& ecc,
                  const std::vector<int>& suffix_ecc, int target, int next, int n,
                  std::vector<Member>& members, int cur_sum, std::vector<Member>& out) {
  for (int i = next; i < n; ++i) {
    int mind = kInf;
    for (const auto& m : members) mind = std::min(mind, dist[static_cast<std::size_t>(m.vertex)][static_cast<std::size_t>(i)]);
    if (mind < 2) continue;
    int new_sum = cur_sum + (mind == kInf ? 0 : mind - 1);
    std::vector<Member> trial = members;
    for (auto& m : trial) {
      int d = dist[static_cast<std::size_t>(m.vertex)][static_cast<std::size_t>(i)];
      if (d < m.dmin) {
        new_sum += (m.dmin == kInf ? d - 1 : d - m.dmin);
        m.dmin = d;
      }
    }
    trial.push_back({i, mind});
    int val = trial.size() == 1 ? ecc[static_cast<std::size_t>(i)] : new_sum;
    if (val == target) {
      out = trial;
      return true;
    }
    int slack = trial.size() == 1 ? ecc[static_cast<std::size_t>(i)] : 0;
    if (new_sum + slack + suffix_ecc[static_cast<std::size_t>(i) + 1] >= target) {
      if (witness_pass(dist, ecc, suffix_ecc, target, i + 1, n, trial, new_sum, out)) return true;
    }
  }
  return false;
}

}  // namespace

OracleResult exact_beta_b(const Tree& t, const OracleOptions& opts) {
  if (t.n > opts.max_candidates) {
    throw ResourceError("oracle candidate budget exceeded: " + std::to_string(t.n) + " vertices > " +
                        std::to_string(opts.max_candidates));
  }
  const auto dist = all_pairs_distances(t);
  const auto ecc = eccentricities(t);

  OracleResult r;
  r.witness.values.assign(static_cast<std::size_t>(t.n), 0);
  if (t.n == 1) return r;

  Search s{dist, ecc, {}, {}, 0, 0, 0};
  s.cand.resize(static_cast<std::size_t>(t.n));
  std::iota(s.cand.begin(), s.cand.end(), 0);
  if (opts.prune_support_vertices) {
    // A positive value on a vertex with a pendant neighbour moves onto that
    // pendant at +1, so some optimum avoids such vertices (singletons aside).
    std::erase_if(s.cand, [&](int v) {
      for (int u : t.adj[static_cast<std::size_t>(v)]) {
        if (t.adj[static_cast<std::size_t>(u)].size() == 1) return true;
      }
      return false;
    });
  }
  std::sort(s.cand.begin(), s.cand.end(), [&](int a, int b) {
    if (ecc[static_cast<std::size_t>(a)] != ecc[static_cast<std::size_t>(b)]) {
      return ecc[static_cast<std::size_t>(a)] > ecc[static_cast<std::size_t>(b)];
    }
    return a < b;
  });
  s.suffix_ecc.assign(s.cand.size() + 1, 0);
  for (std::size_t i = s.cand.size(); i > 0; --i) {
    s.suffix_ecc[i - 1] = s.suffix_ecc[i] + ecc[static_cast<std::size_t>(s.cand[i - 1])];
  }

  // Singletons are always admissible, whatever the pruning option.
  s.best = *std::max_element(ecc.begin(), ecc.end());
  s.examined = static_cast<std::uint64_t>(t.n);

  std::vector<Member> members;
  s.value_pass(0, members, 0);
  r.value = s.best;
  r.subsets_examined = s.examined;
  r.branches_pruned = s.pruned;

  // Deterministic witness: lexicographically least optimal support, candidates
  // in index order and unpruned so the choice is independent of options.
  std::vector<int> idx_suffix(static_cast<std::size_t>(t.n) + 1, 0);
  for (int i = t.n; i > 0; --i) idx_suffix[static_cast<std::size_t>(i - 1)] = idx_suffix[static_cast<std::size_t>(i)] + ecc[static_cast<std::size_t>(i - 1)];
  std::vector<Member> support;
  members.clear();
  if (!witness_pass(dist, ecc, idx_suffix, r.value, 0, t.n, members, 0, support)) {
    throw InvariantError("oracle witness pass failed to reproduce the optimum");
  }
  if (support.size() == 1) {
    r.witness.values[static_cast<std::size_t>(support[0].vertex)] = ecc[static_cast<std::size_t>(support[0].vertex)];
  } else {
    for (const auto& m : support) r.witness.values[static_cast<std::size_t>(m.vertex)] = m.dmin - 1;
  }
  return r;
}

namespace {

struct NaiveState {
  const std::vector<std::vector<int>>& dist;
  const std::vector<int>& ecc;
  int n;
  int best = 0;
  std::vector<std::pair<int, int>> positives;  // (vertex, value)

  void dfs(int v, int cur_sum) {
    if (v == n) {
      best = std::max(best, cur_sum);
      return;
    }
    int remaining = 0;
    for (int u = v; u < n; ++u) remaining += ecc[static_cast<std::size_t>(u)];
    if (cur_sum + remaining <= best) return;
    dfs(v + 1, cur_sum);  // f(v) = 0
    for (int f = 1; f <= ecc[static_cast<std::size_t>(v)]; ++f) {
      bool ok = true;
      for (const auto& [u, fu] : positives) {
        if (dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] <= std::max(fu, f)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      positives.emplace_back(v, f);
      dfs(v + 1, cur_sum + f);
      positives.pop_back();
    }
  }
};

}  // namespace

int naive_beta_b(const Tree& t, int max_vertices) {
  if (t.n > max_vertices) {
    throw ResourceError("naive oracle cap exceeded: " + std::to_string(t.n) + " vertices > " +
                        std::to_string(max_vertices));
  }
  const auto dist = all_pairs_distances(t);
  const auto ecc = eccentricities(t);
  NaiveState st{dist, ecc, t.n, 0, {}};
  st.dfs(0, 0);
  return st.best;
}

}  // namespace bci
