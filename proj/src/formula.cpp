#include "bci/formula.hpp"

#include <algorithm>

namespace bci {

int BetaBreakdown::beta_star() const {
  return lambda_total + tau + singles_term + alpha1_term + alpha2_internal_term +
         alpha2_left_term + alpha2_right_term;
}

BetaBreakdown beta_star(const Caterpillar& ct, Variant v) {
  if (ct.has_adjacent_trunks()) {
    throw UnsupportedClassError("beta* is defined only for caterpillars with no adjacent trunks");
  }
  const Alpha2Variant a2v =
      v == Variant::effective ? Alpha2Variant::effective : Alpha2Variant::as_written;

  BetaBreakdown b;
  b.variant = v;
  b.lambda_total = ct.leaf_count();
  b.tau = ct.trunk_count();
  b.singles_term = static_cast<int>(single_stem_centers(ct).size());

  for (const auto& m : find_occurrences(ct, stem_run_pattern())) {
    int amount = alpha1(ct, m, CountWindow::interior);
    b.stem_run.push_back({m, amount});
    b.alpha1_term += amount;
  }
  AlternationOccurrences alt = alternation_occurrences(ct);
  for (const auto& m : alt.internal) {
    int amount = alpha2(ct, m, a2v);
    b.internal_alt.push_back({m, amount});
    b.alpha2_internal_term += amount;
  }

  // CT entirely [2-(02-)^{*r}]: the construction rewrites it once, on the
  // better-rewarded side, so the effective variant counts only that side.
  b.whole_caterpillar = alt.whole;
  if (v == Variant::effective) choose_whole_side(ct, alt);
  for (const auto& m : alt.left) {
    int amount = alpha2(ct, m, a2v);
    b.left_alt.push_back({m, amount});
    b.alpha2_left_term += amount;
  }
  for (const auto& m : alt.right) {
    int amount = alpha2(ct, m, a2v);
    b.right_alt.push_back({m, amount});
    b.alpha2_right_term += amount;
  }
  return b;
}

BetaResult beta_b(const Caterpillar& ct, Variant v) {
  BetaResult r;
  r.breakdown = beta_star(ct, v);
  int lower = 2 * (ct.length() + 1);  // 2(diam - 1)
  int star = r.breakdown.beta_star();
  if (star > lower) {
    r.value = star;
    r.source = WitnessSource::constructed;
  } else {
    r.value = lower;
    r.source = WitnessSource::canonical;
  }
  return r;
}

std::optional<FastPathResult> beta_b_fastpath(const Caterpillar& ct) {
  const int k = ct.length();
  const int two_diam = 2 * k + 2;
  int max_lambda = *std::max_element(ct.lambdas().begin(), ct.lambdas().end());
  if (ct.trunk_count() == 0) {
    if (max_lambda < 3) return FastPathResult{two_diam, "no-trunk, all stems small: 2(diam-1)"};
    return FastPathResult{ct.leaf_count() + ct.single_stem_count(), "no-trunk: lambda + n1"};
  }
  if (max_lambda < 3) {
    // Holds even with adjacent trunks.
    return FastPathResult{two_diam, "no stem with three pendants: 2(diam-1)"};
  }
  bool all_stems_large = true;
  for (int lam : ct.lambdas()) {
    if (lam == 1 || lam == 2) all_stems_large = false;
  }
  if (all_stems_large && !ct.has_adjacent_trunks()) {
    return FastPathResult{ct.leaf_count() + ct.trunk_count(), "all stems large: lambda + tau"};
  }
  return std::nullopt;
}

FastPathResult star_fastpath(int n) {
  if (n < 1) throw ValidationError("star K_{1,n} needs n >= 1");
  return FastPathResult{n, "star: n"};
}

}  // namespace bci
