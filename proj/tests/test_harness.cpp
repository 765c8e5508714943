#include <doctest.h>

#include "bci/harness.hpp"
#include "bci/oracle.hpp"

using namespace bci;

TEST_CASE("enumeration order and canonicalization") {
  SweepParams p;
  p.k_min = 1;
  p.k_max = 1;
  p.lambda_cap = 2;
  p.leaf_cap = 10;
  p.canonicalize_reversal = false;
  auto all = enumerate_caterpillars(p);
  REQUIRE(all.size() == 4);
  CHECK(all[0].lambdas() == std::vector<int>{1, 1});
  CHECK(all[1].lambdas() == std::vector<int>{1, 2});
  CHECK(all[2].lambdas() == std::vector<int>{2, 1});
  CHECK(all[3].lambdas() == std::vector<int>{2, 2});

  p.canonicalize_reversal = true;
  auto canon = enumerate_caterpillars(p);
  REQUIRE(canon.size() == 3);
  CHECK(canon[1].lambdas() == std::vector<int>{1, 2});
  CHECK(canon[2].lambdas() == std::vector<int>{2, 2});
}

TEST_CASE("enumeration includes trunk sequences") {
  SweepParams p;
  p.k_min = 2;
  p.k_max = 2;
  p.lambda_cap = 1;
  p.leaf_cap = 10;
  auto all = enumerate_caterpillars(p);
  bool found = false;
  for (const auto& ct : all) found = found || ct.lambdas() == std::vector<int>{1, 0, 1};
  CHECK(found);
  for (const auto& ct : all) CHECK(!ct.has_adjacent_trunks());
}

TEST_CASE("enumeration caps") {
  SweepParams p;
  p.k_min = 1;
  p.k_max = 3;
  p.lambda_cap = 3;
  p.leaf_cap = 4;
  for (const auto& ct : enumerate_caterpillars(p)) CHECK(ct.leaf_count() <= 4);
  p.leaf_cap = 1;
  CHECK_THROWS_AS(enumerate_caterpillars(p), ValidationError);
}

TEST_CASE("random trees") {
  Tree t2 = random_tree(2, 7);
  CHECK(t2.n == 2);
  CHECK(t2.edges.size() == 1);
  Tree a = random_tree(9, 42);
  Tree b = random_tree(9, 42);
  CHECK(a.edges == b.edges);  // deterministic per seed
  Tree c = random_tree(9, 43);
  CHECK(a.edges != c.edges);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Tree t = random_tree(6, seed);
    CHECK(t.edges.size() == 5);
  }
  CHECK_THROWS_AS(random_tree(1, 0), ValidationError);
}

TEST_CASE("evaluate_instance flags the known discrepancy") {
  SweepParams p;
  SweepRecord r = evaluate_instance(Caterpillar::from_lambdas({2, 0, 3}), p);
  CHECK(r.lower_bound == 6);
  CHECK(r.beta_star_as_written == 7);
  CHECK(r.beta_star_effective == 6);
  CHECK(r.beta_b_effective == 6);
  CHECK(r.constructor_cost == 6);
  REQUIRE(r.oracle_value.has_value());
  CHECK(*r.oracle_value == 6);
  CHECK(r.effective_matches_oracle);
  CHECK(!r.as_written_matches_oracle);
  CHECK(r.invariant_ok);
}

TEST_CASE("evaluate_instance on an agreeing instance") {
  SweepParams p;
  SweepRecord r = evaluate_instance(Caterpillar::from_lambdas({3, 0, 3}), p);
  CHECK(r.beta_b_effective == 7);
  CHECK(*r.oracle_value == 7);
  CHECK(r.effective_matches_oracle);
  CHECK(r.as_written_matches_oracle);
  CHECK(r.witness_source == "constructed");
}

TEST_CASE("sweep summary and determinism across thread counts") {
  SweepParams p;
  p.k_max = 3;
  p.lambda_cap = 3;
  p.leaf_cap = 6;
  SweepOutput one = sweep(p);
  CHECK(one.summary.instances == static_cast<int>(one.records.size()));
  CHECK(one.summary.invariant_violations == 0);
  CHECK(one.summary.oracle_skipped == 0);
  // CT(2,0,3) is inside this box, so the as_written column must disagree somewhere
  CHECK(one.summary.as_written_oracle_mismatches > 0);
  CHECK(one.summary.effective_oracle_mismatches == 0);

  p.threads = 4;
  SweepOutput four = sweep(p);
  REQUIRE(four.records.size() == one.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    CHECK(one.records[i].lambdas == four.records[i].lambdas);
    CHECK(one.records[i].witness_digest == four.records[i].witness_digest);
    CHECK(one.records[i].oracle_value == four.records[i].oracle_value);
  }
}

TEST_CASE("oracle budget exceedance is recorded, not fatal") {
  SweepParams p;
  p.k_max = 2;
  p.lambda_cap = 2;
  p.leaf_cap = 4;
  p.oracle_budget = 3;
  SweepOutput out = sweep(p);
  CHECK(out.summary.oracle_skipped == out.summary.instances);
  for (const auto& r : out.records) CHECK(!r.oracle_error.empty());
}

TEST_CASE("structural diagnostics") {
  auto ct1 = Caterpillar::from_lambdas({1, 1});
  OracleResult r1 = exact_beta_b(caterpillar_to_tree(ct1));
  DiagnosticsReport d1 = structural_diagnostics(ct1, r1.witness);
  CHECK(d1.stems_zero);
  CHECK(d1.ends_positive);

  auto ct2 = Caterpillar::from_lambdas({3, 0, 3});
  OracleResult r2 = exact_beta_b(caterpillar_to_tree(ct2));
  DiagnosticsReport d2 = structural_diagnostics(ct2, r2.witness);
  CHECK(d2.stems_zero);
  CHECK(d2.ends_positive);

  SweepParams p;
  p.k_max = 3;
  p.lambda_cap = 3;
  p.leaf_cap = 6;
  for (const auto& ct : enumerate_caterpillars(p)) {
    Tree t = caterpillar_to_tree(ct);
    DiagnosticsReport d = structural_diagnostics(ct, exact_beta_b(t).witness);
    CHECK(d.stems_zero);
    CHECK(d.ends_positive);
  }
}

TEST_CASE("agreement flags are reversal invariant") {
  SweepParams p;
  for (auto lambdas : {std::vector<int>{2, 0, 3}, {3, 0, 2}, {1, 0, 2, 1}, {1, 2, 0, 1}}) {
    auto ct = Caterpillar::from_lambdas(lambdas);
    SweepRecord r = evaluate_instance(ct, p);
    SweepRecord rr = evaluate_instance(ct.reversed(), p);
    CHECK(r.beta_b_effective == rr.beta_b_effective);
    CHECK(r.oracle_value == rr.oracle_value);
    CHECK(r.effective_matches_oracle == rr.effective_matches_oracle);
    CHECK(r.as_written_matches_oracle == rr.as_written_matches_oracle);
  }
}
