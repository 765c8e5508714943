#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "bci/io.hpp"

namespace {

using namespace bci;

struct InstanceOpts {
  std::string lambdas;
  std::string file;
};

void add_instance_opts(CLI::App* cmd, InstanceOpts& o) {
  cmd->add_option("--lambdas", o.lambdas, "pendant counts along the spine, e.g. 1,0,2");
  cmd->add_option("--instance", o.file, "instance JSON file ({\"lambdas\":[..]} or {\"tree\":{..}})");
}

Instance resolve(const InstanceOpts& o) {
  if (o.lambdas.empty() == o.file.empty()) {
    throw ValidationError("provide exactly one of --lambdas or --instance");
  }
  if (!o.lambdas.empty()) {
    Instance inst;
    inst.caterpillar = Caterpillar::from_lambdas(parse_lambda_list(o.lambdas));
    return inst;
  }
  return load_instance_file(o.file);
}

const Caterpillar& need_caterpillar(const Instance& inst, const char* cmd) {
  if (!inst.caterpillar) {
    throw ValidationError(std::string(cmd) + " needs a caterpillar instance (lambdas form)");
  }
  return *inst.caterpillar;
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path);
  out << content;
}

int cmd_beta(const Instance& inst, const std::string& variant_name, bool json) {
  const Caterpillar& ct = need_caterpillar(inst, "beta");
  Variant v = variant_name == "as-written" ? Variant::as_written : Variant::effective;
  if (ct.has_adjacent_trunks()) {
    if (auto fp = beta_b_fastpath(ct)) {
      if (json) {
        ordered_json j{{"beta_b", fp->value}, {"source", "fastpath"}, {"rule", fp->rule}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "beta_b = " << fp->value << " (fast path: " << fp->rule << ")\n";
      }
      return 0;
    }
    throw UnsupportedClassError(
        "adjacent trunks and no closed form applies; use the `oracle` command");
  }
  BetaResult r = beta_b(ct, v);
  if (json) {
    ordered_json j{{"beta_b", r.value},
                   {"source", r.source == WitnessSource::canonical ? "canonical" : "constructed"},
                   {"lower_bound", 2 * (ct.length() + 1)},
                   {"breakdown", breakdown_to_json(r.breakdown)}};
    std::cout << j.dump() << "\n";
  } else {
    const auto& b = r.breakdown;
    std::cout << "beta_b = " << r.value << " ("
              << (r.source == WitnessSource::canonical ? "canonical" : "constructed") << ")\n"
              << "2(diam-1) = " << 2 * (ct.length() + 1) << "\n"
              << "beta* = " << b.beta_star() << "  [lambda=" << b.lambda_total << " tau=" << b.tau
              << " singles=" << b.singles_term << " alpha1=" << b.alpha1_term << " alpha2="
              << b.alpha2_internal_term + b.alpha2_left_term + b.alpha2_right_term << "]\n";
  }
  return 0;
}

ordered_json occurrences_json(const std::vector<Occurrence>& occs) {
  ordered_json arr = ordered_json::array();
  for (const auto& m : occs) {
    arr.push_back(ordered_json{{"start", m.start}, {"end", m.end}, {"repetitions", m.repetitions}});
  }
  return arr;
}

int cmd_construct(const Instance& inst, bool trace) {
  const Caterpillar& ct = need_caterpillar(inst, "construct");
  ordered_json j;
  if (trace) {
    ConstructionTrace tr = construct_trace(ct);
    j["trace"] = ordered_json{
        {"f1", broadcast_to_json(ct, tr.f1)},
        {"f2", broadcast_to_json(ct, tr.f2)},
        {"f3", broadcast_to_json(ct, tr.f3)},
        {"f4", broadcast_to_json(ct, tr.f4)},
        {"step2_delta", tr.step2_delta},
        {"step3_delta", tr.step3_delta},
        {"step4_delta", tr.step4_delta},
        {"step3_occurrences", occurrences_json(tr.step3_occurrences)},
        {"step4_occurrences", occurrences_json(tr.step4_occurrences)},
    };
  }
  Witness w = construct_witness(ct);
  j["witness"] = broadcast_to_json(ct, w.broadcast);
  j["cost"] = w.cost;
  j["source"] = w.source == WitnessSource::canonical ? "canonical" : "constructed";
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_oracle(const Instance& inst, bool naive, int budget) {
  Tree t = inst.as_tree();
  ordered_json j;
  if (naive) {
    j["value"] = naive_beta_b(t, budget);
    j["witness"] = nullptr;
    j["oracle"] = "naive";
  } else {
    OracleOptions opts;
    opts.max_candidates = budget;
    OracleResult r = exact_beta_b(t, opts);
    j["value"] = r.value;
    j["witness"] = inst.caterpillar ? broadcast_to_json(*inst.caterpillar, r.witness)
                                    : broadcast_to_json(t, r.witness);
    j["oracle"] = "exact";
    j["subsets_examined"] = r.subsets_examined;
    j["branches_pruned"] = r.branches_pruned;
  }
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_verify(const Instance& inst, const std::string& broadcast_file) {
  Tree t = inst.as_tree();
  std::ifstream in(broadcast_file);
  if (!in) throw ValidationError("cannot open broadcast file: " + broadcast_file);
  ordered_json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw ValidationError("broadcast file is not valid JSON: " + std::string(e.what()));
  }
  Broadcast b = inst.caterpillar ? broadcast_from_json(*inst.caterpillar, doc)
                                 : broadcast_from_json(t, doc);
  bool valid = is_valid_broadcast(t, b);
  std::cout << "valid: " << (valid ? "yes" : "no") << "\n";
  if (valid) {
    std::cout << "independent: " << (is_independent(t, b) ? "yes" : "no") << "\n"
              << "dominating: " << (is_dominating(t, b) ? "yes" : "no") << "\n"
              << "maximal: " << (is_maximal_independent(t, b) ? "yes" : "no") << "\n";
  }
  std::cout << "cost: " << b.cost() << "\n";
  return 0;
}

int cmd_patterns(const Instance& inst, const std::string& text) {
  const Caterpillar& ct = need_caterpillar(inst, "patterns");
  Pattern p = parse_pattern(text);
  auto occs = find_occurrences(ct, p);
  std::cout << "pattern " << pattern_to_string(p) << ": " << occs.size() << " occurrence"
            << (occs.size() == 1 ? "" : "s") << "\n";
  for (const auto& m : occs) {
    std::cout << "  [" << m.start << ".." << m.end << "] r=" << m.repetitions
              << " s=" << lambda_one_stems(ct, m, CountWindow::whole)
              << " alpha1=" << alpha1(ct, m, CountWindow::whole);
    try {
      int aw = alpha2(ct, m, Alpha2Variant::as_written);
      int eff = alpha2(ct, m, Alpha2Variant::effective);
      std::cout << " alpha2_as_written=" << aw << " alpha2_effective=" << eff;
    } catch (const ValidationError&) {
      // not a 0-alternating occurrence; alpha2 does not apply
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_sweep(const SweepParams& params, const std::string& jsonl, const std::string& csv) {
  SweepOutput out = sweep(params);
  if (!jsonl.empty()) {
    std::string buf;
    for (const auto& r : out.records) buf += record_to_json(r).dump() + "\n";
    write_out(jsonl, buf);
  }
  if (!csv.empty()) {
    std::string buf = record_csv_header() + "\n";
    for (const auto& r : out.records) buf += record_to_csv(r) + "\n";
    write_out(csv, buf);
  }
  std::cout << summary_text(out.summary);
  if (out.summary.invariant_violations > 0) return 4;
  if (out.summary.effective_oracle_mismatches > 0) return 5;
  return 0;
}

int cmd_export_dot(const Instance& inst, const std::string& broadcast_file,
                   const std::string& out_path) {
  const Caterpillar& ct = need_caterpillar(inst, "export-dot");
  std::string content;
  if (broadcast_file.empty()) {
    content = export_dot(ct);
  } else {
    std::ifstream in(broadcast_file);
    if (!in) throw ValidationError("cannot open broadcast file: " + broadcast_file);
    ordered_json doc;
    in >> doc;
    Broadcast b = broadcast_from_json(ct, doc);
    content = export_dot(ct, &b);
  }
  write_out(out_path, content);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast independence numbers of caterpillar trees"};
  app.require_subcommand(1);

  InstanceOpts io_beta, io_construct, io_oracle, io_verify, io_patterns, io_dot;
  std::string variant = "effective";
  bool json = false, trace = false, naive = false;
  int oracle_budget = 26;
  std::string broadcast_file, pattern_text, jsonl_path, csv_path, out_path, dot_broadcast;
  SweepParams sp;
  bool allow_adjacent = false, no_canon = false, no_oracle = false, no_prune = false;

  auto* beta_cmd = app.add_subcommand("beta", "pattern-counting beta_b with breakdown");
  add_instance_opts(beta_cmd, io_beta);
  beta_cmd->add_option("--variant", variant, "effective or as-written")
      ->check(CLI::IsMember({"effective", "as-written"}));
  beta_cmd->add_flag("--json", json, "emit the full breakdown as JSON");

  auto* construct_cmd = app.add_subcommand("construct", "build a witness broadcast");
  add_instance_opts(construct_cmd, io_construct);
  construct_cmd->add_flag("--trace", trace, "include the four-step trace");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact beta_b by subset search");
  add_instance_opts(oracle_cmd, io_oracle);
  oracle_cmd->add_flag("--naive", naive, "assignment-space brute force instead");
  oracle_cmd->add_option("--budget", oracle_budget, "max candidate vertices");

  auto* verify_cmd = app.add_subcommand("verify", "check a broadcast file");
  add_instance_opts(verify_cmd, io_verify);
  verify_cmd->add_option("--broadcast", broadcast_file, "broadcast JSON file")->required();

  auto* patterns_cmd = app.add_subcommand("patterns", "list occurrences of a spine pattern");
  add_instance_opts(patterns_cmd, io_patterns);
  patterns_cmd->add_option("pattern", pattern_text, "pattern text, e.g. 1+2-(02-)+1+")->required();

  auto* sweep_cmd = app.add_subcommand("sweep", "cross-validation sweep");
  sweep_cmd->add_option("--k-min", sp.k_min, "minimum spine length");
  sweep_cmd->add_option("--k-max", sp.k_max, "maximum spine length");
  sweep_cmd->add_option("--lambda-cap", sp.lambda_cap, "per-vertex pendant cap");
  sweep_cmd->add_option("--leaf-cap", sp.leaf_cap, "total pendant cap");
  sweep_cmd->add_flag("--allow-adjacent-trunks", allow_adjacent);
  sweep_cmd->add_flag("--no-canonicalize", no_canon, "keep both orientations");
  sweep_cmd->add_flag("--no-oracle", no_oracle);
  sweep_cmd->add_option("--budget", sp.oracle_budget, "oracle candidate budget");
  sweep_cmd->add_flag("--no-prune", no_prune, "disable oracle support-vertex pruning");
  sweep_cmd->add_option("--threads", sp.threads);
  sweep_cmd->add_option("--jsonl", jsonl_path, "JSONL report path");
  sweep_cmd->add_option("--csv", csv_path, "CSV projection path");

  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz figure of an instance");
  add_instance_opts(dot_cmd, io_dot);
  dot_cmd->add_option("--broadcast", dot_broadcast, "broadcast JSON file for labels");
  dot_cmd->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*beta_cmd) return cmd_beta(resolve(io_beta), variant, json);
    if (*construct_cmd) return cmd_construct(resolve(io_construct), trace);
    if (*oracle_cmd) return cmd_oracle(resolve(io_oracle), naive, oracle_budget);
    if (*verify_cmd) return cmd_verify(resolve(io_verify), broadcast_file);
    if (*patterns_cmd) return cmd_patterns(resolve(io_patterns), pattern_text);
    if (*sweep_cmd) {
      sp.no_adjacent_trunks_only = !allow_adjacent;
      sp.canonicalize_reversal = !no_canon;
      sp.run_oracle = !no_oracle;
      sp.oracle_prune_support = !no_prune;
      return cmd_sweep(sp, jsonl_path, csv_path);
    }
    if (*dot_cmd) return cmd_export_dot(resolve(io_dot), dot_broadcast, out_path);
  } catch (const ValidationError& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"exit_code", 1}}.dump() << "\n";
    return 1;
  } catch (const UnsupportedClassError& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"exit_code", 2}}.dump() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"exit_code", 3}}.dump() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"exit_code", 4}}.dump() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << ordered_json{{"error", e.what()}, {"exit_code", 4}}.dump() << "\n";
    return 4;
  }
  return 0;
}
