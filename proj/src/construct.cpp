#include "bci/construct.hpp"

namespace bci {

static int& leaf_value(const Caterpillar& ct, Broadcast& b, int i, int j) {
  return b.values[static_cast<std::size_t>(leaf_vertex(ct, i, j))];
}

Broadcast step1(const Caterpillar& ct) {
  if (ct.has_adjacent_trunks()) {
    throw UnsupportedClassError("construction requires no adjacent trunks");
  }
  Broadcast b;
  b.values.assign(static_cast<std::size_t>(ct.vertex_count()), 0);
  for (int i = 0; i <= ct.length(); ++i) {
    if (ct.lambda(i) == 0) {
      b.values[static_cast<std::size_t>(spine_vertex(ct, i))] = 1;
    } else {
      for (int j = 1; j <= ct.lambda(i); ++j) leaf_value(ct, b, i, j) = 1;
    }
  }
  return b;
}

Broadcast step2(const Caterpillar& ct, const Broadcast& f1) {
  Broadcast b = f1;
  for (int i : single_stem_centers(ct)) leaf_value(ct, b, i, 1) = 2;
  return b;
}

// Shared by steps 3 and 4: put 3 on the first leaf of every stem in [lo, hi]
// and zero everything else there (second leaves and trunks).
static void rewrite_alternation(const Caterpillar& ct, Broadcast& b, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) {
    if (ct.lambda(i) == 0) {
      b.values[static_cast<std::size_t>(spine_vertex(ct, i))] = 0;
    } else {
      leaf_value(ct, b, i, 1) = 3;
      for (int j = 2; j <= ct.lambda(i); ++j) leaf_value(ct, b, i, j) = 0;
    }
  }
}

Broadcast step3(const Caterpillar& ct, const Broadcast& f2) {
  Broadcast b = f2;
  for (const auto& m : find_occurrences(ct, stem_run_pattern())) {
    if (lambda_one_stems(ct, m, CountWindow::interior) == 0) continue;
    int first = m.start + 1, last = m.end - 1;
    if (ct.lambda(first) == 1) leaf_value(ct, b, first, 1) = 2;
    if (ct.lambda(last) == 1) leaf_value(ct, b, last, 1) = 2;
    if (last - first >= 4) rewrite_alternation(ct, b, first + 2, last - 2);
    // trunks adjacent to the end stems
    b.values[static_cast<std::size_t>(spine_vertex(ct, first + 1))] = 0;
    b.values[static_cast<std::size_t>(spine_vertex(ct, last - 1))] = 0;
  }
  return b;
}

// The step-4 occurrence set: internal occurrences only when they hold a
// lambda = 1 stem, anchored ones unconditionally, the whole-caterpillar case
// once on the better side.
static std::vector<Occurrence> step4_targets(const Caterpillar& ct) {
  AlternationOccurrences alt = alternation_occurrences(ct);
  choose_whole_side(ct, alt);
  std::vector<Occurrence> out;
  for (const auto& m : alt.internal) {
    if (lambda_one_stems(ct, m, CountWindow::whole) > 0) out.push_back(m);
  }
  for (const auto& m : alt.left) out.push_back(m);
  for (const auto& m : alt.right) out.push_back(m);
  return out;
}

Broadcast step4(const Caterpillar& ct, const Broadcast& f3) {
  Broadcast b = f3;
  for (const auto& m : step4_targets(ct)) rewrite_alternation(ct, b, m.start, m.end);
  return b;
}

ConstructionTrace construct_trace(const Caterpillar& ct) {
  ConstructionTrace t;
  t.f1 = step1(ct);
  t.f2 = step2(ct, t.f1);
  t.f3 = step3(ct, t.f2);
  t.f4 = step4(ct, t.f3);
  t.step2_delta = t.f2.cost() - t.f1.cost();
  t.step3_delta = t.f3.cost() - t.f2.cost();
  t.step4_delta = t.f4.cost() - t.f3.cost();
  for (const auto& m : find_occurrences(ct, stem_run_pattern())) {
    if (lambda_one_stems(ct, m, CountWindow::interior) > 0) t.step3_occurrences.push_back(m);
  }
  t.step4_occurrences = step4_targets(ct);
  return t;
}

Witness construct_witness(const Caterpillar& ct) {
  Broadcast constructed = step4(ct, step3(ct, step2(ct, step1(ct))));
  Broadcast canonical = canonical_broadcast(ct);
  Witness w;
  if (constructed.cost() > canonical.cost()) {
    w.broadcast = std::move(constructed);
    w.source = WitnessSource::constructed;
  } else {
    w.broadcast = std::move(canonical);
    w.source = WitnessSource::canonical;
  }
  w.cost = w.broadcast.cost();
  return w;
}

}  // namespace bci
