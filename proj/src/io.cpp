#include "bci/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace bci {

Tree Instance::as_tree() const {
  if (tree) return *tree;
  return caterpillar_to_tree(*caterpillar);
}

Instance parse_instance(const ordered_json& doc) {
  if (!doc.is_object()) throw ValidationError("instance document must be a JSON object");
  const bool has_lambdas = doc.contains("lambdas");
  const bool has_tree = doc.contains("tree");
  if (has_lambdas == has_tree) {
    throw ValidationError("instance document needs exactly one of \"lambdas\" or \"tree\"");
  }
  Instance inst;
  if (has_lambdas) {
    if (!doc["lambdas"].is_array()) throw ValidationError("\"lambdas\" must be an array");
    std::vector<int> lambdas;
    for (const auto& x : doc["lambdas"]) {
      if (!x.is_number_integer()) throw ValidationError("lambda entries must be integers");
      lambdas.push_back(x.get<int>());
    }
    inst.caterpillar = Caterpillar::from_lambdas(std::move(lambdas));
  } else {
    const auto& t = doc["tree"];
    if (!t.is_object() || !t.contains("n") || !t.contains("edges")) {
      throw ValidationError("\"tree\" needs fields \"n\" and \"edges\"");
    }
    int n = t["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : t["edges"]) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("edges must be pairs");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    inst.tree = Tree::from_edges(n, std::move(edges));
  }
  return inst;
}

Instance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open instance file: " + path);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ValidationError("instance file is not valid JSON: " + std::string(e.what()));
  }
  return parse_instance(doc);
}

std::vector<int> parse_lambda_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ValidationError("bad lambda list entry: \"" + item + "\"");
    }
  }
  if (out.empty()) throw ValidationError("empty lambda list");
  return out;
}

template <typename NameFn>
static ordered_json broadcast_json_impl(const Broadcast& b, NameFn name) {
  ordered_json values = ordered_json::object();
  for (std::size_t v = 0; v < b.values.size(); ++v) {
    if (b.values[v] > 0) values[name(static_cast<int>(v))] = b.values[v];
  }
  return ordered_json{{"values", std::move(values)}, {"cost", b.cost()}};
}

ordered_json broadcast_to_json(const Caterpillar& ct, const Broadcast& b) {
  return broadcast_json_impl(b, [&](int v) { return vertex_name(ct, v); });
}

ordered_json broadcast_to_json(const Tree&, const Broadcast& b) {
  return broadcast_json_impl(b, [](int v) { return tree_vertex_name(v); });
}

template <typename NameFn>
static Broadcast broadcast_from_json_impl(int n, NameFn name, const ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("values") || !doc["values"].is_object()) {
    throw ValidationError("broadcast document needs a \"values\" object");
  }
  std::map<std::string, int> index;
  for (int v = 0; v < n; ++v) index[name(v)] = v;
  Broadcast b;
  b.values.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [key, val] : doc["values"].items()) {
    auto it = index.find(key);
    if (it == index.end()) throw ValidationError("unknown vertex name: " + key);
    if (!val.is_number_integer() || val.template get<int>() < 0) {
      throw ValidationError("broadcast values must be non-negative integers");
    }
    b.values[static_cast<std::size_t>(it->second)] = val.template get<int>();
  }
  if (doc.contains("cost") && doc["cost"].get<int>() != b.cost()) {
    throw ValidationError("stated cost does not match the values");
  }
  return b;
}

Broadcast broadcast_from_json(const Caterpillar& ct, const ordered_json& doc) {
  return broadcast_from_json_impl(ct.vertex_count(), [&](int v) { return vertex_name(ct, v); }, doc);
}

Broadcast broadcast_from_json(const Tree& t, const ordered_json& doc) {
  return broadcast_from_json_impl(t.n, [](int v) { return tree_vertex_name(v); }, doc);
}

static ordered_json contributions_json(const std::vector<TermContribution>& terms) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : terms) {
    arr.push_back(ordered_json{{"start", t.occurrence.start},
                               {"end", t.occurrence.end},
                               {"repetitions", t.occurrence.repetitions},
                               {"amount", t.amount}});
  }
  return arr;
}

ordered_json breakdown_to_json(const BetaBreakdown& b) {
  return ordered_json{
      {"variant", b.variant == Variant::effective ? "effective" : "as_written"},
      {"lambda", b.lambda_total},
      {"tau", b.tau},
      {"singles", b.singles_term},
      {"alpha1", b.alpha1_term},
      {"alpha2_internal", b.alpha2_internal_term},
      {"alpha2_left", b.alpha2_left_term},
      {"alpha2_right", b.alpha2_right_term},
      {"whole_caterpillar", b.whole_caterpillar},
      {"beta_star", b.beta_star()},
      {"stem_run_occurrences", contributions_json(b.stem_run)},
      {"internal_alternation_occurrences", contributions_json(b.internal_alt)},
      {"left_alternation_occurrences", contributions_json(b.left_alt)},
      {"right_alternation_occurrences", contributions_json(b.right_alt)},
  };
}

ordered_json record_to_json(const SweepRecord& r) {
  ordered_json j{
      {"lambdas", r.lambdas},
      {"lower_bound", r.lower_bound},
      {"beta_star_as_written", r.beta_star_as_written},
      {"beta_star_effective", r.beta_star_effective},
      {"beta_b_effective", r.beta_b_effective},
      {"witness_source", r.witness_source},
      {"constructor_cost", r.constructor_cost},
  };
  if (r.oracle_value) j["oracle"] = *r.oracle_value;
  else j["oracle"] = nullptr;
  j["oracle_error"] = r.oracle_error;
  if (r.fastpath) {
    j["fastpath"] = ordered_json{{"value", r.fastpath->value}, {"rule", r.fastpath->rule}};
  } else {
    j["fastpath"] = nullptr;
  }
  j["effective_matches_oracle"] = r.effective_matches_oracle;
  j["as_written_matches_oracle"] = r.as_written_matches_oracle;
  j["invariant_ok"] = r.invariant_ok;
  j["invariant_error"] = r.invariant_error;
  j["witness_digest"] = r.witness_digest;
  return j;
}

std::string record_csv_header() {
  return "lambdas,lower_bound,beta_star_as_written,beta_star_effective,beta_b_effective,"
         "witness_source,constructor_cost,oracle,fastpath,effective_matches_oracle,"
         "as_written_matches_oracle,invariant_ok";
}

std::string record_to_csv(const SweepRecord& r) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.lambdas.size(); ++i) {
    if (i) os << '|';
    os << r.lambdas[i];
  }
  os << ',' << r.lower_bound << ',' << r.beta_star_as_written << ',' << r.beta_star_effective
     << ',' << r.beta_b_effective << ',' << r.witness_source << ',' << r.constructor_cost << ',';
  if (r.oracle_value) os << *r.oracle_value;
  os << ',';
  if (r.fastpath) os << r.fastpath->value;
  os << ',' << (r.effective_matches_oracle ? 1 : 0) << ',' << (r.as_written_matches_oracle ? 1 : 0)
     << ',' << (r.invariant_ok ? 1 : 0);
  return os.str();
}

std::string export_dot(const Caterpillar& ct, const Broadcast* b) {
  std::ostringstream os;
  auto label = [&](int v, const std::string& name) {
    if (b == nullptr) return name;
    return name + "\\n" + std::to_string(b->values[static_cast<std::size_t>(v)]);
  };
  os << "graph caterpillar {\n";
  os << "  node [shape=circle fontsize=10];\n";
  os << "  { rank=same;";
  for (int i = 0; i <= ct.length(); ++i) os << " v" << i << ';';
  os << " }\n";
  for (int i = 0; i <= ct.length(); ++i) {
    int v = spine_vertex(ct, i);
    os << "  v" << i << " [label=\"" << label(v, vertex_name(ct, v)) << "\"];\n";
  }
  for (int i = 0; i <= ct.length(); ++i) {
    for (int j = 1; j <= ct.lambda(i); ++j) {
      int v = leaf_vertex(ct, i, j);
      os << "  l" << i << '_' << j << " [label=\"" << label(v, vertex_name(ct, v)) << "\"];\n";
    }
  }
  for (int i = 0; i < ct.length(); ++i) os << "  v" << i << " -- v" << (i + 1) << ";\n";
  for (int i = 0; i <= ct.length(); ++i) {
    for (int j = 1; j <= ct.lambda(i); ++j) {
      os << "  v" << i << " -- l" << i << '_' << j << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bci
