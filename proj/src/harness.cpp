#include "bci/harness.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace bci {

namespace {

void gen_sequences(const SweepParams& p, int k, std::vector<int>& cur, int used,
                   std::vector<Caterpillar>& out) {
  const int pos = static_cast<int>(cur.size());
  if (pos == k + 1) {
    if (cur.back() < 1) return;
    if (p.canonicalize_reversal) {
      std::vector<int> rev(cur.rbegin(), cur.rend());
      if (rev < cur) return;
    }
    out.push_back(Caterpillar::from_lambdas(cur));
    return;
  }
  const int lo = (pos == 0 || pos == k) ? 1 : 0;
  for (int lam = lo; lam <= p.lambda_cap; ++lam) {
    if (used + lam > p.leaf_cap) break;
    if (lam == 0 && p.no_adjacent_trunks_only && !cur.empty() && cur.back() == 0) continue;
    cur.push_back(lam);
    gen_sequences(p, k, cur, used + lam, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Caterpillar> enumerate_caterpillars(const SweepParams& p) {
  if (p.k_min < 1 || p.k_max < p.k_min || p.lambda_cap < 1 || p.leaf_cap < 2) {
    throw ValidationError("invalid sweep parameters");
  }
  std::vector<Caterpillar> out;
  for (int k = p.k_min; k <= p.k_max; ++k) {
    std::vector<int> cur;
    gen_sequences(p, k, cur, 0, out);
  }
  return out;
}

Tree random_tree(int n, std::uint64_t seed) {
  if (n < 2) throw ValidationError("random_tree needs n >= 2");
  if (n == 2) return Tree::from_edges(2, {{0, 1}});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (auto& x : pruefer) x = pick(rng);

  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : pruefer) ++degree[static_cast<std::size_t>(x)];
  std::vector<std::pair<int, int>> edges;
  // Standard decoding: repeatedly attach the smallest remaining leaf.
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int x : pruefer) {
    int leaf = -1;
    for (int v = 0; v < n; ++v) {
      if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) {
        leaf = v;
        break;
      }
    }
    edges.emplace_back(leaf, x);
    used[static_cast<std::size_t>(leaf)] = true;
    --degree[static_cast<std::size_t>(x)];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v) {
    if (!used[static_cast<std::size_t>(v)] && degree[static_cast<std::size_t>(v)] == 1) rest.push_back(v);
  }
  edges.emplace_back(rest[0], rest[1]);
  return Tree::from_edges(n, std::move(edges));
}

static std::string digest(const Caterpillar& ct, const Broadcast& b) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < b.values.size(); ++v) {
    if (b.values[v] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << vertex_name(ct, static_cast<int>(v)) << '=' << b.values[v];
  }
  return os.str();
}

SweepRecord evaluate_instance(const Caterpillar& ct, const SweepParams& p) {
  SweepRecord r;
  r.lambdas = ct.lambdas();
  r.lower_bound = 2 * (ct.length() + 1);
  r.beta_star_as_written = beta_star(ct, Variant::as_written).beta_star();
  r.beta_star_effective = beta_star(ct, Variant::effective).beta_star();
  BetaResult br = beta_b(ct, Variant::effective);
  r.beta_b_effective = br.value;
  r.witness_source = br.source == WitnessSource::canonical ? "canonical" : "constructed";
  r.fastpath = beta_b_fastpath(ct);

  auto fail = [&](const std::string& why) {
    r.invariant_ok = false;
    if (!r.invariant_error.empty()) r.invariant_error += "; ";
    r.invariant_error += why;
  };

  Witness w = construct_witness(ct);
  r.constructor_cost = w.cost;
  r.witness_digest = digest(ct, w.broadcast);
  Tree t = caterpillar_to_tree(ct);
  if (!is_valid_broadcast(t, w.broadcast)) fail("constructed witness not a valid broadcast");
  else if (!is_independent(t, w.broadcast)) fail("constructed witness not independent");
  if (r.constructor_cost != std::max(r.lower_bound, r.beta_star_effective)) {
    fail("constructor cost != max(2(k+1), beta*_effective)");
  }
  if (r.fastpath && r.fastpath->value != r.beta_b_effective) {
    fail("fast path disagrees with beta_b");
  }

  if (p.run_oracle) {
    try {
      OracleOptions opts;
      opts.max_candidates = p.oracle_budget;
      opts.prune_support_vertices = p.oracle_prune_support;
      OracleResult res = exact_beta_b(t, opts);
      r.oracle_value = res.value;
      r.effective_matches_oracle = r.beta_b_effective == res.value;
      r.as_written_matches_oracle = std::max(r.lower_bound, r.beta_star_as_written) == res.value;
      if (r.constructor_cost > res.value) fail("constructor cost exceeds oracle optimum");
      if (res.value < r.lower_bound) fail("oracle value below 2(diam-1)");
    } catch (const ResourceError& e) {
      r.oracle_error = e.what();
    }
  }
  return r;
}

SweepOutput sweep(const SweepParams& p) {
  SweepOutput out;
  std::vector<Caterpillar> instances = enumerate_caterpillars(p);
  out.records.resize(instances.size());
  const int threads = std::max(1, p.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      out.records[i] = evaluate_instance(instances[i], p);
    }
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = static_cast<std::size_t>(t); i < instances.size();
             i += static_cast<std::size_t>(threads)) {
          out.records[i] = evaluate_instance(instances[i], p);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const auto& r : out.records) {
    ++out.summary.instances;
    if (r.oracle_value) {
      ++out.summary.oracle_ok;
      if (!r.effective_matches_oracle) ++out.summary.effective_oracle_mismatches;
      if (!r.as_written_matches_oracle) ++out.summary.as_written_oracle_mismatches;
    } else if (p.run_oracle) {
      ++out.summary.oracle_skipped;
    }
    if (!r.invariant_ok) ++out.summary.invariant_violations;
  }
  return out;
}

std::string summary_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "instances: " << s.instances << "\n"
     << "oracle evaluated: " << s.oracle_ok << " (skipped " << s.oracle_skipped << ")\n"
     << "effective vs oracle mismatches: " << s.effective_oracle_mismatches << "\n"
     << "as_written vs oracle mismatches: " << s.as_written_oracle_mismatches << "\n"
     << "invariant violations: " << s.invariant_violations << "\n";
  return os.str();
}

DiagnosticsReport structural_diagnostics(const Caterpillar& ct, const Broadcast& optimum) {
  DiagnosticsReport rep;
  Tree t = caterpillar_to_tree(ct);
  rep.saturated = optimum;
  while (auto next = improve_stem_once(t, rep.saturated)) rep.saturated = std::move(*next);

  rep.stems_zero = true;
  for (int i = 0; i <= ct.length(); ++i) {
    if (ct.lambda(i) > 0 && rep.saturated.values[static_cast<std::size_t>(spine_vertex(ct, i))] > 0) {
      rep.stems_zero = false;
    }
  }
  auto group_weight = [&](int i) {
    int sum = 0;
    for (int j = 1; j <= ct.lambda(i); ++j) {
      sum += rep.saturated.values[static_cast<std::size_t>(leaf_vertex(ct, i, j))];
    }
    return sum;
  };
  rep.ends_positive = group_weight(0) > 0 && group_weight(ct.length()) > 0;
  return rep;
}

}  // namespace bci
