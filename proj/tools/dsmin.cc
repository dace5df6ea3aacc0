// Copyright 2026 The Authors.
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

// dsmin: command-line driver for DS minimization, bound certificates,
// decompositions and feature-selection experiments.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dsmin/bounds.h"
#include "dsmin/decomposition.h"
#include "dsmin/dsopt.h"
#include "dsmin/errors.h"
#include "dsmin/exhaustive.h"
#include "dsmin/experiment.h"
#include "dsmin/function_spec.h"
#include "dsmin/sfm.h"
#include "dsmin/trace_io.h"
#include "json.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;
constexpr int kMaxCertifyBruteForceN = 20;

std::string SetString(const dsmin::Subset& x) {
  std::string out = "{";
  bool first = true;
  for (int j : x.elements()) {
    if (!first) out += ",";
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

void RequireReadable(const std::string& path, const char* what) {
  if (path.empty()) throw dsmin::ParseError(std::string("missing ") + what);
  std::ifstream in(path);
  if (!in) throw dsmin::ParseError(std::string("cannot read ") + what + " '" + path + "'");
}

// Output files must not clobber an input.
void RequireDistinct(const std::string& output, const std::string& input) {
  std::error_code ec;
  if (fs::exists(output) && fs::equivalent(output, input, ec)) {
    throw dsmin::ParseError("output '" + output + "' would overwrite input '" + input + "'");
  }
}

void RequireWritableDir(const std::string& prefix) {
  const fs::path dir = fs::path(prefix).parent_path();
  if (!dir.empty() && !fs::is_directory(dir)) {
    throw dsmin::ParseError("output directory '" + dir.string() + "' does not exist");
  }
}

// Values from a JSON config file fill in options that were not given on the
// command line. Keys are long flag names, with '-' or '_'.
void MergeConfig(CLI::App& cmd, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw dsmin::ParseError("cannot read config '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw dsmin::ParseError("config '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw dsmin::ParseError("config '" + path + "' must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    CLI::Option* opt = cmd.get_option_no_throw("--" + name);
    if (opt == nullptr || name == "config") {
      throw dsmin::ParseError("config '" + path + "': unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;  // flags win
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (const json& v : value) {
        if (!text.empty()) text += ",";
        text += v.is_string() ? v.get<std::string>() : v.dump();
      }
    } else {
      text = value.dump();
    }
    try {
      opt->add_result(text);
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw dsmin::ParseError("config '" + path + "': key '" + key + "': " + e.what());
    }
  }
}

// ---- optimize ----

struct OptimizeArgs {
  std::string algo;
  std::string instance;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string heuristic = "g_gain";
  std::string ub_strategy = "best_of_both";
  std::string constraint = "none";
  int max_iters = 1000;
  std::string inner = "default";
  std::string out = "trace";
  bool timing = false;
  std::string config;
};

int RunOptimize(const OptimizeArgs& a) {
  if (a.algo.empty()) throw dsmin::ParseError("--algo is required");
  RequireReadable(a.instance, "instance");
  RequireWritableDir(a.out);
  RequireDistinct(a.out + ".json", a.instance);
  RequireDistinct(a.out + ".csv", a.instance);
  for (const std::string& input : {a.config, a.constraint}) {
    if (input.empty() || !fs::exists(input)) continue;
    RequireDistinct(a.out + ".json", input);
    RequireDistinct(a.out + ".csv", input);
  }
  if (a.epsilon < 0) throw dsmin::ParseError("--epsilon must be non-negative");
  if (a.max_iters < 0) throw dsmin::ParseError("--max-iters must be non-negative");

  dsmin::SolverOptions opts;
  opts.epsilon = a.epsilon;
  opts.seed = a.seed;
  opts.max_iters = a.max_iters;
  opts.heuristic = dsmin::ParseHeuristic(a.heuristic);
  opts.upper_bound_strategy = dsmin::ParseUpperBoundStrategy(a.ub_strategy);
  opts.inner = a.inner == "brute_force" ? dsmin::InnerSolver::kBruteForce
                                        : dsmin::InnerSolver::kDefault;
  const dsmin::Constraint constraint = dsmin::ParseConstraintArg(a.constraint);
  if (a.algo == "subsup" && !constraint.is_none()) {
    throw dsmin::ParseError("subsup does not accept a constraint");
  }
  if (a.algo == "supsub" && !constraint.is_none() && constraint.kind() != "card_le") {
    throw dsmin::ParseError("supsub supports only card_le constraints");
  }

  const dsmin::InstanceSpec spec = dsmin::ReadInstanceFile(a.instance);
  const dsmin::DSInstance inst(dsmin::BuildFunction(spec.f), dsmin::BuildFunction(spec.g));
  dsmin::ValidateConstraint(constraint, inst.n());

  std::cout << "seed: " << a.seed << "\n";
  dsmin::OptimizationTrace trace;
  try {
    if (a.algo == "subsup") {
      trace = dsmin::SubSup(inst, opts);
    } else if (a.algo == "supsub") {
      trace = dsmin::SupSub(inst, opts, constraint);
    } else {
      trace = dsmin::ModMod(inst, opts, constraint);
    }
  } catch (const dsmin::SolverError& e) {
    dsmin::WriteTraceFiles(e.partial_trace(), a.out, a.timing);
    std::cerr << "partial trace written to " << a.out << ".json\n";
    throw;
  }
  dsmin::WriteTraceFiles(trace, a.out, a.timing);

  const auto& last = trace.final_iterate();
  std::cout << "algorithm: " << trace.algorithm << "\n"
            << "constraint: " << trace.constraint << "\n"
            << "final set: " << SetString(last.set) << "\n"
            << "value: " << dsmin::FormatDouble(last.value) << "\n"
            << "iterations: " << trace.accepted_steps() << "\n"
            << "oracle calls: " << last.oracle_calls << "\n"
            << "termination: " << dsmin::ToString(trace.termination) << "\n"
            << "locally optimal: " << (trace.locally_optimal ? "yes" : "no") << "\n"
            << "trace: " << a.out << ".json " << a.out << ".csv\n";
  return 0;
}

// ---- certify ----

struct CertifyArgs {
  std::string instance;
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

int RunCertify(const CertifyArgs& a) {
  RequireReadable(a.instance, "instance");
  if (!a.out.empty()) {
    RequireWritableDir(a.out);
    RequireDistinct(a.out, a.instance);
  }
  const dsmin::InstanceSpec spec = dsmin::ReadInstanceFile(a.instance);
  const dsmin::SetFunctionPtr f = dsmin::BuildFunction(spec.f);
  const dsmin::SetFunctionPtr g = dsmin::BuildFunction(spec.g);
  const dsmin::DSInstance inst(f, g);  // checks normalization and ground sets

  const dsmin::MinimaLowerBounds b = dsmin::ComputeMinimaLowerBounds(
      f, g, [](const dsmin::SetFunction& h) { return dsmin::MinNormPoint(h).value; });

  json report{{"seed", a.seed}, {"n", inst.n()}, {"bound1", b.bound1}, {"bound2", b.bound2}};
  std::cout << "seed: " << a.seed << "\n"
            << "n: " << inst.n() << "\n"
            << "bound1: " << dsmin::FormatDouble(b.bound1) << "\n"
            << "bound2: " << dsmin::FormatDouble(b.bound2) << "\n";
  if (inst.n() <= kMaxCertifyBruteForceN) {
    const dsmin::SetValue best = dsmin::BruteForceMinimize(*inst.v());
    std::cout << "brute-force minimum: " << dsmin::FormatDouble(best.value) << " at "
              << SetString(best.set) << "\n"
              << "gap1: " << dsmin::FormatDouble(best.value - b.bound1) << "\n"
              << "gap2: " << dsmin::FormatDouble(best.value - b.bound2) << "\n";
    std::vector<int> set;
    for (int j : best.set.elements()) set.push_back(j + 1);
    report["minimum"] = {{"value", best.value}, {"set", set}};
    report["gap1"] = best.value - b.bound1;
    report["gap2"] = best.value - b.bound2;
  } else {
    std::cout << "brute-force minimum: skipped (n > " << kMaxCertifyBruteForceN << ")\n";
    report["minimum"] = nullptr;
  }
  if (!a.out.empty()) {
    std::ofstream(a.out) << report.dump(2) << "\n";
  }
  return 0;
}

// ---- decompose ----

struct DecomposeArgs {
  std::string function;
  std::optional<double> alpha_lb;
  std::uint64_t seed = 0;
  std::string out;
  std::string config;
};

int RunDecompose(const DecomposeArgs& a) {
  RequireReadable(a.function, "function spec");
  if (!a.out.empty()) {
    RequireWritableDir(a.out);
    RequireDistinct(a.out, a.function);
  }
  const dsmin::SetFunctionPtr v = dsmin::BuildFunction(dsmin::ReadFunctionSpecFile(a.function));
  if ((*v)(dsmin::Subset(v->n())) != 0.0) {
    throw dsmin::PreconditionError("decompose needs v(empty) = 0");
  }
  const dsmin::DsDecomposition d = dsmin::DsDecompose(v, a.alpha_lb);
  std::cout << "seed: " << a.seed << "\n"
            << "n: " << v->n() << "\n"
            << "alpha: " << dsmin::FormatDouble(d.alpha) << "\n"
            << "beta: " << dsmin::FormatDouble(d.beta) << "\n"
            << "scale: " << dsmin::FormatDouble(d.scale) << "\n"
            << "submodular: " << (d.scale == 0.0 ? "yes" : "no") << "\n";
  if (!a.out.empty()) {
    std::ofstream(a.out) << dsmin::ToJson(dsmin::DecompositionInstance(*v, d)).dump(2) << "\n";
    std::cout << "instance: " << a.out << "\n";
  }
  return 0;
}

// ---- featsel ----

struct FeatselArgs {
  std::string data;
  std::string format = "sparse";
  std::optional<int> features;
  std::string lambdas;
  std::string methods = "all";
  std::string cost = "modular";
  std::string blocks;
  double alpha = 1.0;
  int folds = 10;
  std::uint64_t seed = 0;
  int threads = 0;
  double epsilon = 0.0;
  int max_iters = 1000;
  std::string heuristic = "g_gain";
  std::string ub_strategy = "best_of_both";
  std::string out = "featsel";
  std::string config;
};

double ParseNumber(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(x)) {
    throw dsmin::ParseError("bad number '" + s + "' in --lambdas");
  }
  return x;
}

std::vector<double> ParseGridTriple(const std::string& text, const char* form) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw dsmin::ParseError(std::string("--lambdas ") + form);
  const double lo = ParseNumber(parts[0]);
  const double hi = ParseNumber(parts[1]);
  const double k = ParseNumber(parts[2]);
  if (lo <= 0 || hi < lo || k < 1 || k != std::floor(k)) {
    throw dsmin::ParseError(std::string("--lambdas ") + form +
                            " needs 0 < LO <= HI and integer K >= 1");
  }
  return {lo, hi, k};
}

// "0.01,0.02", a geometric grid "geom:LO:HI:K", or "frac:LO:HI:K": K values
// at which non-factored greedy keeps fractions LO..HI of the features.
std::vector<double> ParseLambdas(const std::string& text, const dsmin::DatasetPtr& ds,
                                 double alpha) {
  std::vector<double> out;
  if (text.rfind("geom:", 0) == 0) {
    const auto p = ParseGridTriple(text.substr(5), "geom:LO:HI:K");
    const double lo = p[0], hi = p[1], k = p[2];
    for (int i = 0; i < k; ++i) {
      out.push_back(k == 1 ? lo : lo * std::pow(hi / lo, i / (k - 1)));
    }
    return out;
  }
  if (text.rfind("frac:", 0) == 0) {
    const auto p = ParseGridTriple(text.substr(5), "frac:LO:HI:K");
    const double lo = p[0], hi = p[1], k = p[2];
    if (hi > 1) throw dsmin::ParseError("--lambdas frac fractions must be at most 1");
    std::vector<int> sizes;
    for (int i = 0; i < k; ++i) {
      const double frac = k == 1 ? lo : lo + (hi - lo) * i / (k - 1);
      sizes.push_back(std::max(1, static_cast<int>(std::lround(frac * ds->features()))));
    }
    return dsmin::LambdaGridForSizes(ds, sizes, alpha);
  }
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    const double x = ParseNumber(p);
    if (x < 0) throw dsmin::ParseError("lambda values must be non-negative");
    out.push_back(x);
  }
  if (out.empty()) throw dsmin::ParseError("--lambdas is required");
  return out;
}

// {"blocks": [[1,2],[3]], "weights": [...]} or a bare array of blocks,
// elements 1-based.
dsmin::CostModel ReadBlocks(const std::string& path) {
  std::ifstream in(path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw dsmin::ParseError("blocks '" + path + "': " + e.what());
  }
  const json& blocks_json = doc.is_object() ? doc.at("blocks") : doc;
  if (!blocks_json.is_array()) throw dsmin::ParseError("blocks '" + path + "' must be an array");
  std::vector<std::vector<int>> blocks;
  for (const json& b : blocks_json) {
    std::vector<int> block;
    for (const json& e : b) {
      if (!e.is_number_integer() || e.get<int>() < 1) {
        throw dsmin::ParseError("blocks '" + path + "': elements are 1-based integers");
      }
      block.push_back(e.get<int>() - 1);
    }
    blocks.push_back(std::move(block));
  }
  std::vector<double> weights;
  if (doc.is_object() && doc.contains("weights")) {
    weights = doc.at("weights").get<std::vector<double>>();
  }
  return dsmin::CostModel::PartitionSqrt(std::move(blocks), std::move(weights), 1.0);
}

int RunFeatsel(const FeatselArgs& a) {
  RequireReadable(a.data, "dataset");
  RequireWritableDir(a.out);
  RequireDistinct(a.out + ".csv", a.data);
  RequireDistinct(a.out + ".json", a.data);
  if (a.cost == "partition_sqrt") RequireReadable(a.blocks, "--blocks file");
  if (a.folds < 2) throw dsmin::ParseError("--folds must be at least 2");
  if (a.alpha < 0) throw dsmin::ParseError("--alpha must be non-negative");

  if (a.lambdas.empty()) throw dsmin::ParseError("--lambdas is required");
  dsmin::ExperimentConfig config;
  config.methods = dsmin::ParseMethods(a.methods);
  config.alpha = a.alpha;
  config.folds = a.folds;
  config.seed = a.seed;
  config.threads = a.threads;
  config.solver.epsilon = a.epsilon;
  config.solver.max_iters = a.max_iters;
  config.solver.seed = a.seed;
  config.solver.heuristic = dsmin::ParseHeuristic(a.heuristic);
  config.solver.upper_bound_strategy = dsmin::ParseUpperBoundStrategy(a.ub_strategy);
  config.cost = a.cost == "partition_sqrt" ? ReadBlocks(a.blocks)
                                           : dsmin::CostModel::ModularCardinality(1.0);

  const auto ds = std::make_shared<const dsmin::Dataset>(
      dsmin::ReadDataset(a.data, dsmin::ParseDatasetFormat(a.format), a.features));
  dsmin::ValidateCostModel(config.cost, ds->features());
  config.lambdas = ParseLambdas(a.lambdas, ds, a.alpha);

  std::cout << "seed: " << a.seed << "\n"
            << "dataset: " << ds->rows() << " rows, " << ds->features() << " features, "
            << ds->classes() << " classes\n";
  const auto rows = dsmin::RunFeatselExperiment(ds, config);

  std::ofstream(a.out + ".csv") << dsmin::ExperimentCsv(rows);
  json doc{{"seed", a.seed},
           {"dataset", a.data},
           {"alpha", a.alpha},
           {"folds", a.folds},
           {"cost", a.cost},
           {"results", dsmin::ExperimentJson(rows)}};
  std::ofstream(a.out + ".json") << doc.dump(2) << "\n";

  for (const auto& r : rows) {
    std::cout << "lambda " << dsmin::FormatDouble(r.lambda) << "  " << r.method
              << "  features " << r.selected.size() << "  cost " << dsmin::FormatDouble(r.cost)
              << "  objective "
              << dsmin::FormatDouble(r.objective) << "  accuracy "
              << dsmin::FormatDouble(r.accuracy) << "\n";
  }
  std::cout << "results: " << a.out << ".csv " << a.out << ".json\n";
  return 0;
}

void AddSolverFlags(CLI::App* cmd, double& epsilon, std::uint64_t& seed, std::string& heuristic,
                    std::string& ub_strategy, int& max_iters) {
  cmd->add_option("--epsilon", epsilon, "Relative improvement needed to accept a step");
  cmd->add_option("--seed", seed, "Master seed");
  cmd->add_option("--heuristic", heuristic, "Permutation heuristic")
      ->check(CLI::IsMember({"random", "g_gain", "v_gain"}));
  cmd->add_option("--ub-strategy", ub_strategy, "Upper bound choice")
      ->check(CLI::IsMember({"best_of_both", "alternate"}));
  cmd->add_option("--max-iters", max_iters, "Iteration cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimize differences of submodular functions"};
  app.require_subcommand(1);

  OptimizeArgs opt;
  CLI::App* optimize = app.add_subcommand("optimize", "Run SubSup, SupSub or ModMod on an instance");
  optimize->add_option("--algo", opt.algo, "Solver")
      ->check(CLI::IsMember({"subsup", "supsub", "modmod"}));
  optimize->add_option("--instance", opt.instance, "Instance JSON with f and g");
  AddSolverFlags(optimize, opt.epsilon, opt.seed, opt.heuristic, opt.ub_strategy, opt.max_iters);
  optimize->add_option("--constraint", opt.constraint,
                       "none, card_le=K, card_eq=K or a constraint JSON file");
  optimize->add_option("--inner", opt.inner, "Surrogate solver")
      ->check(CLI::IsMember({"default", "brute_force"}));
  optimize->add_option("--out", opt.out, "Trace prefix; writes PREFIX.json and PREFIX.csv");
  optimize->add_flag("--timing", opt.timing, "Record wall-clock milliseconds in traces");
  optimize->add_option("--config", opt.config, "JSON config; command-line flags win");

  CertifyArgs cert;
  CLI::App* certify = app.add_subcommand("certify", "Lower bounds on the minimum of f - g");
  certify->add_option("--instance", cert.instance, "Instance JSON with f and g");
  certify->add_option("--seed", cert.seed, "Master seed (reported only)");
  certify->add_option("--out", cert.out, "Write the report as JSON");
  certify->add_option("--config", cert.config, "JSON config; command-line flags win");

  DecomposeArgs dec;
  CLI::App* decompose =
      app.add_subcommand("decompose", "Write a set function as a difference of submodular ones");
  decompose->add_option("--function", dec.function, "Function spec JSON");
  decompose->add_option("--alpha-lb", dec.alpha_lb, "Known lower bound on the margin");
  decompose->add_option("--seed", dec.seed, "Master seed (reported only)");
  decompose->add_option("--out", dec.out, "Write the resulting instance JSON");
  decompose->add_option("--config", dec.config, "JSON config; command-line flags win");

  FeatselArgs fs_args;
  CLI::App* featsel = app.add_subcommand("featsel", "Feature-selection experiment");
  featsel->add_option("--data", fs_args.data, "Dataset path");
  featsel->add_option("--format", fs_args.format, "sparse or dense")
      ->check(CLI::IsMember({"sparse", "dense"}));
  featsel->add_option("--features", fs_args.features, "Number of features (sparse format)");
  featsel->add_option("--lambdas", fs_args.lambdas, "Comma list, geom:LO:HI:K or frac:LO:HI:K");
  featsel->add_option("--methods", fs_args.methods, "Comma list of grf,grnf,subsup,supsub,modmod or all");
  featsel->add_option("--cost", fs_args.cost, "modular or partition_sqrt")
      ->check(CLI::IsMember({"modular", "partition_sqrt"}));
  featsel->add_option("--blocks", fs_args.blocks, "Blocks JSON for partition_sqrt");
  featsel->add_option("--alpha", fs_args.alpha, "Smoothing pseudo-count");
  featsel->add_option("--folds", fs_args.folds, "Cross-validation folds");
  featsel->add_option("--threads", fs_args.threads, "Worker threads, 0 for all cores");
  AddSolverFlags(featsel, fs_args.epsilon, fs_args.seed, fs_args.heuristic, fs_args.ub_strategy,
                 fs_args.max_iters);
  featsel->add_option("--out", fs_args.out, "Result prefix; writes PREFIX.csv and PREFIX.json");
  featsel->add_option("--config", fs_args.config, "JSON config; command-line flags win");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*optimize) {
      MergeConfig(*optimize, opt.config);
      return RunOptimize(opt);
    }
    if (*certify) {
      MergeConfig(*certify, cert.config);
      return RunCertify(cert);
    }
    if (*decompose) {
      MergeConfig(*decompose, dec.config);
      return RunDecompose(dec);
    }
    MergeConfig(*featsel, fs_args.config);
    return RunFeatsel(fs_args);
  } catch (const dsmin::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dsmin::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dsmin::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
