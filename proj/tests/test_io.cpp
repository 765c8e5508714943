#include <doctest.h>

#include "bci/io.hpp"

using namespace bci;

TEST_CASE("instance parsing") {
  Instance a = parse_instance(ordered_json::parse(R"({"lambdas":[2,0,3]})"));
  REQUIRE(a.caterpillar.has_value());
  CHECK(a.caterpillar->lambdas() == std::vector<int>{2, 0, 3});
  CHECK(a.as_tree().n == 8);

  Instance b = parse_instance(ordered_json::parse(R"({"tree":{"n":3,"edges":[[0,1],[1,2]]}})"));
  REQUIRE(b.tree.has_value());
  CHECK(b.tree->n == 3);

  CHECK_THROWS_AS(parse_instance(ordered_json::parse(R"({})")), ValidationError);
  CHECK_THROWS_AS(parse_instance(ordered_json::parse(R"({"lambdas":[1,1],"tree":{}})")),
                  ValidationError);
  CHECK_THROWS_AS(parse_instance(ordered_json::parse(R"({"lambdas":[0,1]})")), ValidationError);
  CHECK_THROWS_AS(parse_instance(ordered_json::parse(R"({"lambdas":"1,1"})")), ValidationError);
}

TEST_CASE("lambda list parsing") {
  CHECK(parse_lambda_list("1,0,2") == std::vector<int>{1, 0, 2});
  CHECK(parse_lambda_list("3") == std::vector<int>{3});
  CHECK_THROWS_AS(parse_lambda_list(""), ValidationError);
  CHECK_THROWS_AS(parse_lambda_list("1,,2"), ValidationError);
  CHECK_THROWS_AS(parse_lambda_list("1,a"), ValidationError);
}

TEST_CASE("broadcast json round trip") {
  auto ct = Caterpillar::from_lambdas({2, 0, 3});
  Broadcast b = canonical_broadcast(ct);
  ordered_json doc = broadcast_to_json(ct, b);
  CHECK(doc["cost"] == 6);
  CHECK(doc["values"]["l0_1"] == 3);
  CHECK(doc["values"].size() == 2);  // zero entries are omitted
  Broadcast back = broadcast_from_json(ct, doc);
  CHECK(back.values == b.values);

  doc["cost"] = 5;
  CHECK_THROWS_AS(broadcast_from_json(ct, doc), ValidationError);
  CHECK_THROWS_AS(broadcast_from_json(ct, ordered_json::parse(R"({"values":{"bogus":1}})")),
                  ValidationError);
}

TEST_CASE("breakdown json has stable keys") {
  auto b = beta_star(Caterpillar::from_lambdas({2, 0, 3}), Variant::effective);
  ordered_json j = breakdown_to_json(b);
  CHECK(j.dump() == breakdown_to_json(b).dump());
  CHECK(j["beta_star"] == 6);
  CHECK(j.begin().key() == "variant");
}

TEST_CASE("sweep record serialization") {
  SweepParams p;
  SweepRecord r = evaluate_instance(Caterpillar::from_lambdas({2, 0, 3}), p);
  ordered_json j = record_to_json(r);
  CHECK(j["lambdas"] == std::vector<int>{2, 0, 3});
  CHECK(j["oracle"] == 6);
  CHECK(j["as_written_matches_oracle"] == false);
  CHECK(j.dump() == record_to_json(r).dump());

  std::string csv = record_to_csv(r);
  CHECK(csv.substr(0, 6) == "2|0|3,");
  CHECK(record_csv_header().rfind("lambdas,", 0) == 0);
}

TEST_CASE("dot export") {
  auto ct = Caterpillar::from_lambdas({1, 1});
  std::string plain = export_dot(ct);
  CHECK(plain == export_dot(ct));  // byte stable
  CHECK(plain.find("rank=same") != std::string::npos);
  CHECK(plain.find("v0 -- v1") != std::string::npos);
  CHECK(plain.find("l1_1") != std::string::npos);

  Broadcast b = canonical_broadcast(ct);
  std::string labeled = export_dot(ct, &b);
  CHECK(labeled.find("l0_1\\n2") != std::string::npos);
  CHECK(labeled != plain);
}
