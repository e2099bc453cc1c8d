// Copyright 2026 The Infodiagram Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infodiagram/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "infodiagram/compressor.hpp"
#include "infodiagram/diagram.hpp"
#include "infodiagram/divergences.hpp"
#include "infodiagram/document.hpp"
#include "infodiagram/errors.hpp"
#include "infodiagram/ingest.hpp"
#include "infodiagram/render.hpp"
#include "infodiagram/setfun.hpp"
#include "infodiagram/shannon.hpp"
#include "infodiagram/verify.hpp"

namespace infodiagram::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Kind { shannon, tsallis, kl, alpha_kl, cross_entropy, setfun, advantage, compressor };

const std::map<std::string, Kind>& kind_names() {
  static const std::map<std::string, Kind> names{
      {"shannon", Kind::shannon},         {"tsallis", Kind::tsallis},
      {"kl", Kind::kl},                   {"alpha-kl", Kind::alpha_kl},
      {"cross-entropy", Kind::cross_entropy}, {"setfun", Kind::setfun},
      {"advantage", Kind::advantage},     {"compressor", Kind::compressor}};
  return names;
}

bool needs_alpha(Kind k) { return k == Kind::tsallis || k == Kind::alpha_kl; }
bool needs_reference(Kind k) {
  return k == Kind::kl || k == Kind::alpha_kl || k == Kind::cross_entropy;
}

struct RunConfig {
  std::string kind_name = "shannon";
  Kind kind = Kind::shannon;
  std::string base_name = "nats";
  std::optional<double> alpha;
  double tol = 1e-9;
  int q_max = 3;
  std::vector<std::string> inputs;
  std::optional<std::string> reference;
  std::optional<std::string> target;
  std::string out = "-";
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t samples = 20000;
  int level = 9;
  bool inject_fault = false;
};

void validate(RunConfig& cfg) {
  auto it = kind_names().find(cfg.kind_name);
  if (it == kind_names().end()) throw UsageError("unknown instance kind '" + cfg.kind_name + "'");
  cfg.kind = it->second;
  if (needs_alpha(cfg.kind) != cfg.alpha.has_value()) {
    throw UsageError(needs_alpha(cfg.kind) ? "--alpha is required for " + cfg.kind_name
                                           : "--alpha only applies to tsallis and alpha-kl");
  }
  if (needs_reference(cfg.kind) != cfg.reference.has_value()) {
    throw UsageError(needs_reference(cfg.kind)
                         ? "--reference (the Q table) is required for " + cfg.kind_name
                         : "--reference only applies to kl, alpha-kl and cross-entropy");
  }
  if (cfg.inputs.empty()) throw UsageError("no input given");
  if (cfg.kind != Kind::compressor && cfg.inputs.size() != 1) {
    throw UsageError("exactly one input file expected for " + cfg.kind_name);
  }
  if (cfg.target && cfg.kind != Kind::advantage) throw UsageError("--target only applies to advantage");
  if (cfg.q_max < 1) throw UsageError("--qmax must be >= 1");
  if (!(cfg.tol >= 0)) throw UsageError("--tol must be nonnegative");
}

struct LoadedInstance {
  ChainRuleInstance inst;
  DocumentMetadata metadata;
};

std::string stem(const std::string& path) { return std::filesystem::path(path).filename().string(); }

LoadedInstance load(const RunConfig& cfg) {
  const LogBase base = parse_log_base(cfg.base_name);
  DocumentMetadata meta;
  meta.instance = cfg.kind_name;
  meta.tolerance = cfg.tol;
  meta.alpha = cfg.alpha;
  const std::string& input = cfg.inputs.front();

  switch (cfg.kind) {
    case Kind::shannon:
    case Kind::tsallis: {
      const Table table = read_table(input);
      const EmpiricalData data = empirical_from_rows(table.rows, table.weights);
      meta.generators = table.header;
      if (cfg.kind == Kind::shannon) {
        meta.base = cfg.base_name;
        return {shannon_instance(data.dist, data.variables, base), meta};
      }
      return {tsallis_instance(data.dist, data.variables, Alpha(*cfg.alpha)), meta};
    }
    case Kind::kl:
    case Kind::alpha_kl:
    case Kind::cross_entropy: {
      const EmpiricalPair data = empirical_pair(read_table(input), read_table(*cfg.reference));
      meta.generators = data.names;
      if (cfg.kind == Kind::alpha_kl) {
        return {alpha_kl_instance(data.pq, data.variables, Alpha(*cfg.alpha)), meta};
      }
      meta.base = cfg.base_name;
      if (cfg.kind == Kind::kl) return {kl_instance(data.pq, data.variables, base), meta};
      return {cross_entropy_instance(data.pq, data.variables, base), meta};
    }
    case Kind::setfun: {
      const SetFunction r = read_setfunction(input);
      for (int i = 1; i <= r.generators(); ++i) meta.generators.push_back("X" + std::to_string(i));
      return {r1_instance(r), meta};
    }
    case Kind::advantage: {
      if (!cfg.target) {
        const SetFunction e = read_setfunction(input);
        for (int i = 1; i <= e.generators(); ++i) meta.generators.push_back("X" + std::to_string(i));
        return {advantage_instance(e), meta};
      }
      const Table table = read_table(input);
      const EmpiricalData data = empirical_from_rows(table.rows, table.weights);
      std::vector<RandomVariable> features;
      std::optional<RandomVariable> target;
      for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (table.header[c] == *cfg.target) {
          target = data.variables[c];
        } else {
          features.push_back(data.variables[c]);
          meta.generators.push_back(table.header[c]);
        }
      }
      if (!target) throw IngestionError("target column '" + *cfg.target + "' not found");
      meta.base = cfg.base_name;
      return {advantage_instance(bayes_error_evaluator(data.dist, features, *target, base)), meta};
    }
    case Kind::compressor: {
      std::vector<Bytes> blobs;
      for (const auto& path : cfg.inputs) {
        blobs.push_back(read_bytes(path));
        meta.generators.push_back(stem(path));
      }
      const ZlibCompressor zlib(cfg.level);
      meta.compressor = zlib.name();
      return {r1_instance(compressor_setfunction(blobs, zlib)), meta};
    }
  }
  throw UsageError("unhandled instance kind");
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IngestionError("cannot write '" + path + "'");
  file << text;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions o;
  o.q_max = cfg.q_max;
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  o.samples = cfg.samples;
  return o;
}

int cmd_diagram(RunConfig cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
  LoadedInstance loaded = load(cfg);
  const DiagramDocument doc = build_document(loaded.inst, loaded.metadata, verify_options(cfg));
  const double consistency = consistency_residual(doc);
  write_output(cfg.out, cfg.format == "csv" ? atoms_csv(doc) : dump(to_json(doc)), out);
  int code = kOk;
  if (!doc.verification.passed) {
    err << "verification failed: Hu identity max residual " << doc.verification.max_residual
        << " exceeds tolerance " << cfg.tol << "\n";
    code = kVerification;
  }
  if (!(consistency <= cfg.tol)) {
    err << "verification failed: circle totals differ from atom sums by " << consistency << "\n";
    code = kVerification;
  }
  return code;
}

ChainRuleInstance with_fault(const ChainRuleInstance& inst) {
  auto base = inst.k1;
  auto k1 = [base](MonoidElement y, MonoidElement z) {
    const double v = base(y, z);
    return (y.bits == 1 && z.bits == 0) ? v + 0.1 : v;
  };
  return ChainRuleInstance{inst.n, k1, inst.kind + "/faulty"};
}

int cmd_verify(RunConfig cfg, std::ostream& out, std::ostream& err) {
  validate(cfg);
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
  LoadedInstance loaded = load(cfg);
  ChainRuleInstance inst = cfg.inject_fault ? with_fault(loaded.inst) : loaded.inst;
  if (inst.n <= 8) inst = tabulate(inst);
  const auto violations = chain_rule_violations(inst, cfg.tol);
  VerifyOptions options = verify_options(cfg);
  options.check_chain_rule = false;
  const DiagramReport report = verify_hu(inst, options);
  write_output(cfg.out,
               cfg.format == "csv" ? report_csv(report)
                                   : dump(report_to_json(report, loaded.metadata, violations)),
               out);
  int code = kOk;
  if (!violations.empty()) {
    const auto& v = violations.front();
    err << "chain rule check failed for " << violations.size() << " pair(s); first: Y="
        << format_subset(v.y.bits) << " Z=" << format_subset(v.z.bits) << " residual "
        << v.residual << "\n";
    code = kVerification;
  }
  if (!report.passed()) {
    const ResidualRow* worst = nullptr;
    std::size_t failing = 0;
    for (const auto& row : report.residuals) {
      if (row.residual > report.tolerance) ++failing;
      if (worst == nullptr || row.residual > worst->residual) worst = &row;
    }
    err << "Hu identity check failed for " << failing << " case(s); max residual "
        << report.max_residual;
    if (worst != nullptr) {
      err << " at q=" << worst->q << " L=(";
      for (std::size_t k = 0; k < worst->intersected.size(); ++k) {
        err << (k ? "," : "") << format_subset(worst->intersected[k].bits);
      }
      err << ") J=" << format_subset(worst->excluded.bits);
    }
    err << "\n";
    code = kVerification;
  }
  return code;
}

// Four equally likely rows (0,0,0), (0,1,1), (1,0,1), (1,1,0).
EmpiricalData xor_joint() {
  return empirical_from_rows({{"0", "0", "0"}, {"0", "1", "1"}, {"1", "0", "1"}, {"1", "1", "0"}});
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"xor-i3", "bsc-d2", "xor-advantage",
                                              "split-identity"};
  return names;
}

int cmd_examples(const std::string& name, double epsilon, std::uint64_t seed,
                 const std::string& out_path, std::ostream& out, std::ostream& err) {
  constexpr double kTol = 1e-9;
  json report;
  report["example"] = name;
  report["tolerance"] = kTol;
  double value = 0;
  double expected = 0;
  bool passed = false;
  using E = MonoidElement;

  if (name == "xor-i3") {
    const EmpiricalData data = xor_joint();
    const auto inst = shannon_instance(data.dist, data.variables, LogBase::bits);
    const std::vector<E> terms{E(0b001), E(0b010), E(0b100)};
    value = interaction(inst, terms, E{});
    expected = -1.0;
    passed = std::abs(value - expected) <= kTol;
    report["base"] = "bits";
    report["quantity"] = "I_3(X;Y;Z)";
  } else if (name == "bsc-d2") {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw PreconditionError("epsilon must lie in (0, 1) so that P << Q");
    }
    const auto channels = binary_symmetric_channels(epsilon);
    const auto inst = kl_instance(channels.pq, channels.generators, LogBase::bits);
    const std::vector<E> terms{E(0b01), E(0b10)};
    value = interaction(inst, terms, E{});
    const double conditional_sum = -1.0 - 0.5 * (std::log2(1.0 - epsilon) + std::log2(epsilon));
    expected = 0.0 - conditional_sum;
    passed = std::abs(value - expected) <= kTol;
    report["base"] = "bits";
    report["epsilon"] = epsilon;
    report["quantity"] = "D_2(X;Y)";
    report["details"] = {{"D_1(Y)", inst.total(E(0b10))},
                         {"X.D_1(Y)", inst.conditional(E(0b10), E(0b01))}};
  } else if (name == "xor-advantage") {
    const EmpiricalData data = xor_joint();
    const std::vector<RandomVariable> features{data.variables[0], data.variables[1]};
    const auto e = bayes_error_evaluator(data.dist, features, data.variables[2], LogBase::bits);
    const auto inst = advantage_instance(e);
    const std::vector<E> terms{E(0b01), E(0b10)};
    value = interaction(inst, terms, E{});
    expected = -1.0;
    const std::vector<double> expected_errors{1, 1, 1, 0};
    bool errors_match = true;
    json table = json::object();
    for (Mask a = 0; a < 4; ++a) {
      table[format_subset(a)] = e(a);
      errors_match = errors_match && std::abs(e(a) - expected_errors[a]) <= kTol;
    }
    passed = errors_match && std::abs(value - expected) <= kTol;
    report["base"] = "bits";
    report["quantity"] = "Ad^2(X_1;X_2)";
    report["details"] = {{"generalization_error", table}};
  } else if (name == "split-identity") {
    std::mt19937_64 rng(seed);
    const std::vector<int> sizes{2, 3, 2};
    const ProductJoint joint = random_product_joint(sizes, rng);
    const auto inst = shannon_instance(joint.dist, joint.coordinates, LogBase::nats);
    const std::vector<E> lhs_terms{E(0b011), E(0b101)};
    const std::vector<E> cond_terms{E(0b001)};
    const std::vector<E> rest_terms{E(0b011), E(0b100)};
    value = interaction(inst, lhs_terms, E{});
    expected = interaction(inst, cond_terms, E(0b100)) + interaction(inst, rest_terms, E{});
    const RegionMask left = hu_region(lhs_terms, E{}, 3);
    const RegionMask a = hu_region(cond_terms, E(0b100), 3);
    const RegionMask b = hu_region(rest_terms, E{}, 3);
    const bool regions = left == (a | b) && (a & b).empty();
    passed = regions && std::abs(value - expected) <= kTol;
    report["base"] = "nats";
    report["seed"] = seed;
    report["quantity"] = "I_2(X_12;X_13) vs X_3.I_1(X_1) + I_2(X_12;X_3)";
    report["details"] = {{"region_equality", regions}};
  } else {
    err << "unknown example '" << name << "'; available:";
    for (const auto& n : example_names()) err << ' ' << n;
    err << "\n";
    return kUsageOrIngestion;
  }
  report["value"] = value;
  report["expected"] = expected;
  report["residual"] = std::abs(value - expected);
  report["passed"] = passed;
  write_output(out_path, dump(report), out);
  if (!passed) {
    err << name << ": value " << value << " differs from expected " << expected << "\n";
    return kVerification;
  }
  return kOk;
}

int cmd_render(const std::string& doc_path, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  std::ifstream in(doc_path);
  if (!in) throw IngestionError("cannot open '" + doc_path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IngestionError(doc_path + ": " + e.what());
  }
  const DiagramDocument doc = document_from_json(j);
  if (doc.generators() != 2 && doc.generators() != 3) {
    err << "rendering supports n=2,3 only\n";
    return kUsageOrIngestion;
  }
  write_output(out_path, render_svg(doc), out);
  return kOk;
}

void add_instance_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("inputs", cfg.inputs,
                  "Input file: CSV/TSV table, set-function JSON, or blob files (compressor)")
      ->required();
  cmd->add_option("--instance", cfg.kind_name,
                  "shannon | tsallis | kl | alpha-kl | cross-entropy | setfun | advantage | "
                  "compressor")
      ->capture_default_str();
  cmd->add_option("--base", cfg.base_name, "Logarithm base: nats or bits")
      ->check(CLI::IsMember({"nats", "bits"}))
      ->capture_default_str();
  cmd->add_option("--alpha", cfg.alpha, "Deformation parameter for tsallis and alpha-kl");
  cmd->add_option("--reference", cfg.reference, "Table supplying Q for two-distribution kinds");
  cmd->add_option("--target", cfg.target, "Target column (advantage from a table)");
  cmd->add_option("--tol", cfg.tol, "Absolute tolerance")->capture_default_str();
  cmd->add_option("--qmax", cfg.q_max, "Highest interaction degree verified")->capture_default_str();
  cmd->add_option("--out", cfg.out, "Output path, - for stdout")->capture_default_str();
  cmd->add_option("--format", cfg.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Seed for sampled verification")->capture_default_str();
  cmd->add_option("--samples", cfg.samples, "Cases checked in sampled mode (n > 5)")
      ->capture_default_str();
  cmd->add_option("--level", cfg.level, "zlib level for the compressor kind")
      ->check(CLI::Range(0, 9))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Information diagrams from functions satisfying the chain rule", "infodiagram"};
  app.require_subcommand(1);

  RunConfig diagram_cfg;
  auto* diagram = app.add_subcommand("diagram", "Compute all atom values and circle totals");
  add_instance_options(diagram, diagram_cfg);

  RunConfig verify_cfg;
  auto* verify = app.add_subcommand("verify", "Check every Hu identity up to --qmax");
  add_instance_options(verify, verify_cfg);
  verify->add_flag("--inject-fault", verify_cfg.inject_fault,
                   "Add 0.1 to k1({1} | {}) before verifying (test fixture)")
      ->group("Testing");

  std::string example_name;
  double epsilon = 0.25;
  std::uint64_t example_seed = 0;
  std::string example_out = "-";
  auto* examples = app.add_subcommand("examples", "Reproduce a bundled worked example");
  examples->add_option("name", example_name, "xor-i3 | bsc-d2 | xor-advantage | split-identity")
      ->required();
  examples->add_option("--epsilon", epsilon, "Flip probability of Q's channel (bsc-d2)")
      ->capture_default_str();
  examples->add_option("--seed", example_seed, "Seed of the random joint (split-identity)")
      ->capture_default_str();
  examples->add_option("--out", example_out, "Output path, - for stdout")->capture_default_str();

  std::string render_in;
  std::string render_out = "-";
  auto* render = app.add_subcommand("render", "Draw a 2- or 3-variable diagram document as SVG");
  render->add_option("document", render_in, "Diagram JSON document")->required();
  render->add_option("output", render_out, "SVG path, - for stdout")->capture_default_str();

  std::vector<std::string> argv_storage{"infodiagram"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrIngestion;
  }

  try {
    if (*diagram) return cmd_diagram(diagram_cfg, out, err);
    if (*verify) return cmd_verify(verify_cfg, out, err);
    if (*examples) return cmd_examples(example_name, epsilon, example_seed, example_out, out, err);
    if (*render) return cmd_render(render_in, render_out, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageOrIngestion;
  } catch (const IngestionError& e) {
    err << "ingestion error: " << e.what() << "\n";
    return kUsageOrIngestion;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << "\n";
    return kUsageOrIngestion;
  } catch (const PreconditionError& e) {
    err << "instance precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsageOrIngestion;
}

}  // namespace infodiagram::cli
