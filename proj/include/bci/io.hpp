#pragma once

#include <string>

#include <json.hpp>

#include "bci/harness.hpp"

namespace bci {

using ordered_json = nlohmann::ordered_json;

/// Exactly one of the two forms is present.
struct Instance {
  std::optional<Caterpillar> caterpillar;
  std::optional<Tree> tree;

  Tree as_tree() const;  // caterpillar form is converted
};

Instance parse_instance(const ordered_json& doc);
Instance load_instance_file(const std::string& path);
std::vector<int> parse_lambda_list(const std::string& text);  // "1,0,2"

ordered_json broadcast_to_json(const Caterpillar& ct, const Broadcast& b);
ordered_json broadcast_to_json(const Tree& t, const Broadcast& b);
Broadcast broadcast_from_json(const Caterpillar& ct, const ordered_json& doc);
Broadcast broadcast_from_json(const Tree& t, const ordered_json& doc);

ordered_json breakdown_to_json(const BetaBreakdown& b);
ordered_json record_to_json(const SweepRecord& r);
std::string record_csv_header();
std::string record_to_csv(const SweepRecord& r);

/// Figure-style layout: spine on one horizontal rank, leaves below, role-coded
/// node names; broadcast values become labels. Byte-stable for fixed inputs.
std::string export_dot(const Caterpillar& ct, const Broadcast* b = nullptr);

}  // namespace bci
